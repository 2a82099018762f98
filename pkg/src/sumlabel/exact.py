"""Exact minimum-max-label solvers at desk scale.

``exact_s`` finds the smallest N admitting a distinguishing labeling with
labels in [N] via iterative deepening on N over a depth-first search that
assigns vertices in a fixed order and prunes as soon as two fully
assigned edges share a sum.  Exhausting every N below the reported
optimum is the optimality proof; termination is guaranteed because
powers of two always work, so s(H) <= 2**(n-1).

``oracle_enumerate`` is a deliberately naive full scan kept as an
independent check on the search.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from .constructive import s_star_bounds
from .errors import BudgetExhausted, OracleTooLarge
from .hypergraph import Graph, Hypergraph, Labeling, is_distinguishing
from .transforms import closed_neighborhood_hypergraph, dual

DEFAULT_NODE_BUDGET = 10**7
ORACLE_GUARD = 10**8


@dataclass
class SolveResult:
    """Outcome of an exact solve: the optimum, a verified witness, and
    search-effort counters."""

    optimum: int
    witness: Labeling
    nodes_expanded: int
    elapsed: float


def _static_vertex_order(h: Hypergraph) -> list[int]:
    """Fixed assignment order: greedily pick the vertex that completes the
    most edges given what is already assigned, breaking ties by incident
    edge count and then by index.  Computed once so the search is
    deterministic."""
    n = h.vertex_count
    remaining = [len(e) for e in h.edges]
    unassigned = set(range(n))
    order = []
    while unassigned:
        best, best_key = -1, None
        for v in sorted(unassigned):
            completes = sum(1 for i in h.incidence[v] if remaining[i] == 1)
            key = (completes, len(h.incidence[v]), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        unassigned.remove(best)
        for i in h.incidence[best]:
            remaining[i] -= 1
    return order


class _Search:
    """Depth-first label assignment with collision pruning on completed edges."""

    def __init__(self, h: Hypergraph, node_budget: int | None):
        self.h = h
        self.order = _static_vertex_order(h)
        self.incident = [sorted(h.incidence[v]) for v in range(h.vertex_count)]
        self.node_budget = node_budget
        self.nodes = 0

    def decide(self, max_label: int) -> Labeling | None:
        h = self.h
        n = h.vertex_count
        values = [0] * n
        partial = [0] * h.edge_count
        remaining = [len(e) for e in h.edges]
        sum_count: dict[int, int] = {}

        def assign(depth: int) -> bool:
            if depth == n:
                return True
            v = self.order[depth]
            inc = self.incident[v]
            for label in range(1, max_label + 1):
                self.nodes += 1
                if self.node_budget is not None and self.nodes > self.node_budget:
                    raise BudgetExhausted(
                        f"node budget {self.node_budget} exhausted", detail={"nodes": self.nodes}
                    )
                values[v] = label
                touched = 0
                completed = []
                ok = True
                for i in inc:
                    partial[i] += label
                    remaining[i] -= 1
                    touched += 1
                    if remaining[i] == 0:
                        s = partial[i]
                        c = sum_count.get(s, 0)
                        sum_count[s] = c + 1
                        completed.append(i)
                        if c:
                            ok = False
                            break
                if ok and assign(depth + 1):
                    return True
                for i in completed:
                    s = partial[i]
                    if sum_count[s] == 1:
                        del sum_count[s]
                    else:
                        sum_count[s] -= 1
                for i in inc[:touched]:
                    partial[i] -= label
                    remaining[i] += 1
            values[v] = 0
            return False

        if assign(0):
            return Labeling(values)
        return None


def decide_labeling(h: Hypergraph, max_label: int,
                    node_budget: int | None = None) -> Labeling | None:
    """Return a verified distinguishing labeling with all labels <= max_label,
    or None when none exists.  Deterministic for fixed inputs."""
    if max_label < 1:
        raise ValueError("max_label must be >= 1")
    found = _Search(h, node_budget).decide(max_label)
    if found is not None:
        assert is_distinguishing(h, found)
    return found


def _quick_lower_bound(h: Hypergraph) -> int:
    """All m sums are distinct integers inside [min_size, max_size * N]."""
    if h.edge_count == 0:
        return 1
    sizes = [len(e) for e in h.edges]
    lo, hi = min(sizes), max(sizes)
    need = h.edge_count + lo - 1
    return max(1, -(-need // hi))


def exact_s(h: Hypergraph, node_budget: int | None = DEFAULT_NODE_BUDGET,
            lower_bound: int = 1) -> SolveResult:
    """Smallest N such that a distinguishing labeling with labels in [N]
    exists, with a verified witness.

    Practical only at desk scale (roughly n <= 12 or few edges).  When the
    node budget runs out, raises :class:`BudgetExhausted` carrying the
    bracket of N values still in play.
    """
    start = time.perf_counter()
    ceiling = 1 << (h.vertex_count - 1)
    lo = max(lower_bound, _quick_lower_bound(h))
    search = _Search(h, node_budget)
    for bound in range(lo, ceiling + 1):
        try:
            witness = search.decide(bound)
        except BudgetExhausted as exc:
            raise BudgetExhausted(
                f"node budget exhausted while testing N={bound}",
                bracket=(bound, ceiling),
                detail={"nodes": search.nodes},
            ) from exc
        if witness is not None:
            assert is_distinguishing(h, witness)
            return SolveResult(bound, witness, search.nodes, time.perf_counter() - start)
    raise AssertionError("unreachable: powers of two give a labeling at the ceiling")


def exact_s_star(g: Graph, node_budget: int | None = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Smallest max label of a vertex sum-distinguishing labeling of ``g``.

    Equals ``exact_s`` of the closed-neighborhood hypergraph; the degree
    lower bound (n' + delta) / (Delta + 1) seeds the search when the
    graph has edges.
    """
    h = closed_neighborhood_hypergraph(g)
    lb = s_star_bounds(g).lower if g.edge_count > 0 else 1
    return exact_s(h, node_budget, lower_bound=lb)


def exact_irr(h: Hypergraph, node_budget: int | None = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Irregularity strength: minimum max edge-label making all per-vertex
    incident sums distinct.  Computed as ``exact_s`` of the dual; a
    degenerate dual (two vertices in exactly the same edges) propagates
    :class:`DualDegenerate` since no irregular labeling can exist."""
    return exact_s(dual(h), node_budget)


def oracle_enumerate(h: Hypergraph, max_label: int) -> Labeling | None:
    """Scan all max_label**n labelings in lexicographic order and return the
    first distinguishing one, or None.  Ground-truth oracle for
    :func:`decide_labeling`; guarded to at most 10**8 candidates."""
    n = h.vertex_count
    if max_label**n > ORACLE_GUARD:
        raise OracleTooLarge(f"{max_label}**{n} labelings exceed the enumeration guard")
    for values in product(range(1, max_label + 1), repeat=n):
        f = Labeling(values)
        if is_distinguishing(h, f):
            return f
    return None
