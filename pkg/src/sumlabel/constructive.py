"""Deterministic constructive labelers for graphs.

``repair_labeler`` starts from all-ones and repeatedly relabels one
vertex so that the number of bad pairs (distinct closed neighborhoods,
equal sums) strictly decreases; the relabeled value avoids every sum
equation that could create a new bad pair, and the degree bound xi =
max_v (n - d(v) - 1)(d(v) + 1) + 2 always leaves an admissible value.

``tree_labeler`` peels leaves off a maximum-leaf-degree vertex down to a
star, labels the star directly, and reattaches each leaf with the
smallest value avoiding all collision equations, staying within
2n - 2 - L where L is the maximum number of leaves on one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .hypergraph import Graph, Labeling, closed_sums, is_vertex_sum_distinguishing
from .transforms import closed_neighborhood_groups


@dataclass(frozen=True)
class DegreeBoundsReport:
    """Degree-based bracket for the minimum max label of a vertex
    sum-distinguishing labeling."""

    distinct_neighborhood_count: int
    min_degree: int
    max_degree: int
    xi: int
    lower: int
    upper_loose: int


def s_star_bounds(g: Graph) -> DegreeBoundsReport:
    """Bracket ceil((n' + delta) / (Delta + 1)) <= s*(G) <= xi <= (Delta+1) n.

    n' counts the distinct closed neighborhoods.  The lower bound is
    meaningful for graphs with at least one edge, but all fields are
    computed regardless.
    """
    n = g.vertex_count
    if n < 1:
        raise ValueError("bounds need at least one vertex")
    degrees = [g.degree(v) for v in range(n)]
    dmin, dmax = min(degrees), max(degrees)
    n_distinct = len(closed_neighborhood_groups(g))
    xi = max((n - d - 1) * (d + 1) + 2 for d in degrees)
    lower = -(-(n_distinct + dmin) // (dmax + 1))
    return DegreeBoundsReport(n_distinct, dmin, dmax, xi, lower, (dmax + 1) * n)


@dataclass(frozen=True)
class RepairStep:
    bad_pairs_before: int
    vertex: int
    old_label: int
    new_label: int


@dataclass
class RepairResult:
    labeling: Labeling
    xi: int
    steps: tuple[RepairStep, ...]


def repair_labeler(g: Graph) -> RepairResult:
    """Vertex sum-distinguishing labeling with max label at most xi, by
    strictly-decreasing bad-pair repair from the all-ones start.

    Fully deterministic: the lexicographically smallest bad pair is
    repaired, the relabeled vertex is the pair's first element when the
    two are non-adjacent and otherwise the smallest vertex in the
    closed-neighborhood symmetric difference, and the smallest
    admissible new value is used.
    """
    n = g.vertex_count
    if n < 1:
        raise ValueError("repair needs at least one vertex")
    xi = s_star_bounds(g).xi
    closed = [g.closed_neighborhood(v) for v in range(n)]
    checkable = [
        (u, v) for u in range(n) for v in range(u + 1, n) if closed[u] != closed[v]
    ]
    values = [1] * n
    steps: list[RepairStep] = []
    prev_bad: int | None = None
    max_iterations = n * (n - 1) // 2 + 1
    for _ in range(max_iterations):
        sums = closed_sums(g, Labeling(values))
        bad = [(u, v) for u, v in checkable if sums[u] == sums[v]]
        if prev_bad is not None:
            assert len(bad) < prev_bad, "bad-pair count failed to decrease"
        if not bad:
            f = Labeling(values)
            assert is_vertex_sum_distinguishing(g, f) and f.max_label <= xi
            return RepairResult(f, xi, tuple(steps))
        prev_bad = len(bad)
        u, v = bad[0]
        if v not in g.adjacency[u]:
            x = u
        else:
            x = min(closed[u] ^ closed[v])
        inside = closed[x]
        outside = [y for y in range(n) if y not in inside]
        # forbidden values: the old label, and every t that would equate a
        # shifted inside sum with an unshifted outside sum
        forbidden = {values[x]}
        for y in inside:
            for y2 in outside:
                forbidden.add(sums[y2] - sums[y] + values[x])
        t = next((t for t in range(1, xi + 1) if t not in forbidden), None)
        assert t is not None, "forbidden set covered the whole label range"
        steps.append(RepairStep(prev_bad, x, values[x], t))
        values[x] = t
    raise AssertionError("repair exceeded the bad-pair iteration bound")


@dataclass(frozen=True)
class LeafStat:
    """Largest number of leaf neighbors over all vertices, with the
    smallest vertex attaining it."""

    max_leaf_neighbors: int
    vertex: int


def _check_tree(g: Graph) -> None:
    n = g.vertex_count
    if n < 2:
        raise ShapeError("tree operations need at least two vertices")
    if g.edge_count != n - 1:
        raise ShapeError(f"a tree on {n} vertices has {n - 1} edges, got {g.edge_count}")
    seen = {0}
    stack = [0]
    while stack:
        w = stack.pop()
        for x in g.adjacency[w]:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    if len(seen) != n:
        raise ShapeError("graph is not connected")


def _leaf_stat_from_adj(adj: dict[int, set[int]]) -> tuple[int, int]:
    best_v, best_count = -1, -1
    for v in sorted(adj):
        count = sum(1 for w in adj[v] if len(adj[w]) == 1)
        if count > best_count:
            best_v, best_count = v, count
    return best_count, best_v


def leaf_stat(t: Graph) -> LeafStat:
    _check_tree(t)
    adj = {v: set(t.adjacency[v]) for v in range(t.vertex_count)}
    count, vertex = _leaf_stat_from_adj(adj)
    return LeafStat(count, vertex)


def _is_star(adj: dict[int, set[int]]) -> bool:
    return sum(1 for v in adj if len(adj[v]) >= 2) <= 1


def tree_labeler(t: Graph) -> Labeling:
    """Vertex sum-distinguishing labeling of a tree; for n >= 3 the max
    label stays within 2n - 2 - L(T).

    Stars are the base case: leaves get 1..n-1 in index order and the
    center gets 1.  Otherwise a leaf hanging off a maximum-leaf-degree
    vertex is removed, the smaller tree is labeled, and the leaf
    receives the smallest value avoiding every equation that could
    create an equal-sum pair.
    """
    _check_tree(t)
    n = t.vertex_count
    adj = {v: set(t.adjacency[v]) for v in range(n)}

    # peel to a star, remembering (leaf, anchor, value cap) per removal
    removals: list[tuple[int, int, int]] = []
    while not _is_star(adj):
        l_value, u = _leaf_stat_from_adj(adj)
        v = min(w for w in adj[u] if len(adj[w]) == 1)
        removals.append((v, u, 2 * len(adj) - 2 - l_value))
        adj[u].discard(v)
        del adj[v]

    values: dict[int, int] = {}
    star_vertices = sorted(adj)
    center = max(star_vertices, key=lambda v: (len(adj[v]), -v))
    values[center] = 1
    for rank, v in enumerate(w for w in star_vertices if w != center):
        values[v] = rank + 1

    for v, u, cap in reversed(removals):
        sums = {w: values[w] + sum(values[x] for x in adj[w]) for w in adj}
        # leaves of u once v is back: v itself plus u's current leaf neighbors
        leaves_of_u = {w for w in adj[u] if len(adj[w]) == 1}
        forbidden = set()
        for w in adj:
            if w == u:
                continue
            forbidden.add(sums[w] - values[u])
            if w not in leaves_of_u:
                forbidden.add(sums[w] - sums[u])
        value = next((x for x in range(1, cap + 1) if x not in forbidden), None)
        assert value is not None, "no admissible label within the tree bound"
        values[v] = value
        adj[u].add(v)
        adj[v] = {u}

    f = Labeling(values[v] for v in range(n))
    assert is_vertex_sum_distinguishing(t, f)
    return f
