"""Las Vegas randomized labelers.

``quadratic_random_labeling`` draws labels uniformly from [m**2]; a
union bound over edge pairs makes each attempt fail with probability
below 1/2, so a handful of retries suffices.

``two_step_labeling`` targets the much smaller range [ceil(m**2 / C)].
Edge pairs are first classified by the size and popularity structure of
their symmetric differences; step one fixes the labels of the popular
vertices until every special pair is forced apart and near-ties among
newly dangerous pairs are rare, then step two draws the remaining
labels until verification succeeds.  Both procedures only ever return
verified labelings; the probabilistic analysis is replaced by
verify-and-retry, so budgets, not tail bounds, are the failure mode.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, exp

from .errors import BudgetExhausted
from .hypergraph import Hypergraph, Labeling, is_distinguishing

DEFAULT_SEED = 0xD15C0

PAIR_TYPES = ("a", "b", "c", "d", "e")


@dataclass(frozen=True)
class TwoStepConfig:
    """Constants of the two-step labeler.

    ``label_divisor`` (CLI flag --C) sets the label range ceil(m**2 / C);
    ``dangerous_cutoff`` (--K) bounds the symmetric-difference size of a
    dangerous pair; ``stray_limit`` (--P) caps the non-popular vertices a
    newly dangerous pair may have.  The ordering K > P > C is required.
    """

    label_divisor: float = 4.0
    dangerous_cutoff: int = 64
    stray_limit: int = 16
    seed: int = DEFAULT_SEED
    step1_budget: int = 1000
    step2_budget: int = 1000

    def __post_init__(self):
        if not self.label_divisor > 0:
            raise ValueError("label_divisor must be positive")
        if not self.dangerous_cutoff > self.stray_limit > self.label_divisor:
            raise ValueError("need dangerous_cutoff > stray_limit > label_divisor")
        if self.step1_budget < 1 or self.step2_budget < 1:
            raise ValueError("budgets must be positive")

    def label_cap(self, edge_count: int) -> int:
        """ceil(m**2 / C), computed exactly."""
        return max(1, ceil(Fraction(edge_count * edge_count) / Fraction(self.label_divisor)))


@dataclass(frozen=True)
class PairData:
    """Symmetric-difference decomposition of one unordered edge pair.

    ``only_first`` / ``only_second`` are e \\ e' and e' \\ e; the popular_*
    and stray_* fields split them by membership in the popular vertex
    set.
    """

    only_first: frozenset[int]
    only_second: frozenset[int]
    popular_first: frozenset[int]
    popular_second: frozenset[int]
    stray_first: frozenset[int]
    stray_second: frozenset[int]
    dangerous: bool
    special: bool
    newly_dangerous: bool
    special_class: int | None

    @property
    def difference_size(self) -> int:
        return len(self.only_first) + len(self.only_second)


@dataclass(frozen=True)
class PairClassification:
    """Popularity set and per-pair structure for all unordered edge pairs."""

    edge_count: int
    dangerous_cutoff: int
    stray_limit: int
    popular: frozenset[int]
    pairs: dict[tuple[int, int], PairData]


def classify_pairs(h: Hypergraph, dangerous_cutoff: int, stray_limit: int) -> PairClassification:
    """Classify every unordered pair of hyperedges.

    A pair is dangerous when its symmetric difference has at most
    ``dangerous_cutoff`` vertices; a vertex is popular when it lies in
    the symmetric difference of at least m**2 / dangerous_cutoff**3
    dangerous pairs (compared exactly); a pair is special when its whole
    symmetric difference is popular; a non-dangerous, non-special pair
    is newly dangerous when at most ``stray_limit`` of its
    symmetric-difference vertices are non-popular.
    """
    if not dangerous_cutoff > stray_limit:
        raise ValueError("need dangerous_cutoff > stray_limit")
    edges = h.edges
    m = len(edges)
    keys = [(i, j) for i in range(m) for j in range(i + 1, m)]
    only: dict[tuple[int, int], tuple[frozenset[int], frozenset[int]]] = {}
    dangerous_count = [0] * h.vertex_count
    for i, j in keys:
        a, b = edges[i] - edges[j], edges[j] - edges[i]
        only[(i, j)] = (a, b)
        if len(a) + len(b) <= dangerous_cutoff:
            for v in a | b:
                dangerous_count[v] += 1

    # popularity threshold m**2 / K**3, exact comparison
    cube = dangerous_cutoff**3
    popular = frozenset(
        v for v in range(h.vertex_count) if dangerous_count[v] * cube >= m * m
    )
    assert len(popular) <= dangerous_cutoff**4, "popularity bound violated"

    class_ids: dict[frozenset[frozenset[int]], int] = {}
    pairs: dict[tuple[int, int], PairData] = {}
    for key in keys:
        a, b = only[key]
        dangerous = len(a) + len(b) <= dangerous_cutoff
        ya, yb = a & popular, b & popular
        za, zb = a - popular, b - popular
        special = not za and not zb
        newly = (not dangerous) and (not special) and len(za | zb) <= stray_limit
        cls_id = None
        if special:
            signature = frozenset({a, b})
            cls_id = class_ids.setdefault(signature, len(class_ids))
        pairs[key] = PairData(a, b, ya, yb, za, zb, dangerous, special, newly, cls_id)
    return PairClassification(m, dangerous_cutoff, stray_limit, popular, pairs)


def pair_skew(data: PairData, partial: dict[int, int]) -> int:
    """f(e,e') - f(e',e): the popular-side sum difference under a partial
    assignment of the popular vertices."""
    return sum(partial[v] for v in data.popular_first) - sum(
        partial[v] for v in data.popular_second
    )


def pair_type(data: PairData, skew: int, stray_cap: int) -> str:
    """One of the five pair types: (a) special, (b)/(c) newly dangerous with
    popular-side skew above/at most stray_limit * N, (d) remaining
    non-dangerous, (e) dangerous non-special."""
    if data.special:
        return "a"
    if data.newly_dangerous:
        return "b" if abs(skew) > stray_cap else "c"
    if data.dangerous:
        return "e"
    return "d"


@dataclass
class QuadraticResult:
    labeling: Labeling
    attempts: int


def quadratic_random_labeling(h: Hypergraph, seed: int = DEFAULT_SEED,
                              budget: int = 64) -> QuadraticResult:
    """Uniform labels from [m**2], redrawn until verification succeeds.

    Each attempt fails with probability at most binom(m,2)/m**2 < 1/2, so
    the budget is hit with probability below 2**-budget.  Instances with
    fewer than two edges have nothing to distinguish and get all-ones.
    """
    m = h.edge_count
    if m <= 1:
        return QuadraticResult(Labeling.all_ones(h.vertex_count), 0)
    cap = m * m
    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        f = Labeling(rng.randint(1, cap) for _ in range(h.vertex_count))
        if is_distinguishing(h, f):
            return QuadraticResult(f, attempt)
    raise BudgetExhausted(f"no distinguishing labeling in {budget} quadratic attempts")


def step_one(h: Hypergraph, cls: PairClassification, cfg: TwoStepConfig,
             rng: random.Random) -> dict[int, int]:
    """Independently uniform values in [ceil(m**2/C)] for the popular vertices,
    drawn in vertex order for reproducibility."""
    cap = cfg.label_cap(h.edge_count)
    return {v: rng.randint(1, cap) for v in sorted(cls.popular)}


@dataclass
class StepOneDiagnostics:
    special_ok: bool
    near_ties_ok: bool
    special_violations: list[tuple[int, int]]
    near_tie_count: int
    near_tie_allowance: float

    @property
    def ok(self) -> bool:
        return self.special_ok and self.near_ties_ok


def step_one_successful(h: Hypergraph, cls: PairClassification, cfg: TwoStepConfig,
                        partial: dict[int, int]) -> tuple[bool, StepOneDiagnostics]:
    """Check the two step-one success conditions.

    (1) every special pair has nonzero popular-side skew, and (2) at most
    m**2 * e**(-4C) newly dangerous pairs have |skew| <= stray_limit * N.
    """
    m = h.edge_count
    cap = cfg.label_cap(m)
    stray_cap = cfg.stray_limit * cap
    violations = []
    near_ties = 0
    for key, data in cls.pairs.items():
        if data.special:
            if pair_skew(data, partial) == 0:
                violations.append(key)
        elif data.newly_dangerous:
            if abs(pair_skew(data, partial)) <= stray_cap:
                near_ties += 1
    allowance = m * m * exp(-4.0 * cfg.label_divisor)
    diag = StepOneDiagnostics(
        special_ok=not violations,
        near_ties_ok=near_ties <= allowance,
        special_violations=violations,
        near_tie_count=near_ties,
        near_tie_allowance=allowance,
    )
    return diag.ok, diag


@dataclass
class TwoStepResult:
    labeling: Labeling
    label_cap: int
    step1_attempts: int
    step2_attempts: int
    collision_census: dict[str, int] = field(default_factory=dict)


def _check_protected_pairs(sums: tuple[int, ...], cls: PairClassification,
                           skews: dict[tuple[int, int], int], stray_cap: int) -> None:
    """After a successful step one, special pairs differ by exactly their
    skew and high-skew newly dangerous pairs cannot tie; both facts are
    label-independent, so a violation is an internal error."""
    for (i, j), data in cls.pairs.items():
        if data.special:
            if sums[i] - sums[j] != skews[(i, j)]:
                raise AssertionError(f"special pair {(i, j)}: sum gap does not equal its skew")
            if sums[i] == sums[j]:
                raise AssertionError(f"special pair {(i, j)} collided after a successful step one")
        elif data.newly_dangerous and abs(skews[(i, j)]) > stray_cap:
            if sums[i] == sums[j]:
                raise AssertionError(
                    f"high-skew newly dangerous pair {(i, j)} collided after a successful step one"
                )


def two_step_labeling(h: Hypergraph, cfg: TwoStepConfig | None = None) -> TwoStepResult:
    """Verified distinguishing labeling with max label at most ceil(m**2/C).

    Step one is redrawn until successful (at most step1_budget draws in
    total); after each success, step two draws the non-popular labels up
    to step2_budget times and verifies.  The colliding pairs of every
    failed verification are tallied by type in ``collision_census``.
    Raises :class:`BudgetExhausted` (census attached) if the budgets run
    out.
    """
    cfg = cfg or TwoStepConfig()
    m = h.edge_count
    if m <= 1:
        return TwoStepResult(Labeling.all_ones(h.vertex_count), cfg.label_cap(m), 0, 0)

    cls = classify_pairs(h, cfg.dangerous_cutoff, cfg.stray_limit)
    cap = cfg.label_cap(m)
    stray_cap = cfg.stray_limit * cap
    rng = random.Random(cfg.seed)
    free = sorted(set(range(h.vertex_count)) - cls.popular)
    census: dict[str, int] = {t: 0 for t in PAIR_TYPES}
    edges = h.edges

    step1_attempts = 0
    step2_attempts = 0
    while step1_attempts < cfg.step1_budget:
        step1_attempts += 1
        partial = step_one(h, cls, cfg, rng)
        ok, _ = step_one_successful(h, cls, cfg, partial)
        if not ok:
            continue
        skews = {key: pair_skew(data, partial) for key, data in cls.pairs.items()}
        # with no free vertices, redrawing step two cannot change anything
        inner_budget = cfg.step2_budget if free else 1
        for _ in range(inner_budget):
            step2_attempts += 1
            values = dict(partial)
            for v in free:
                values[v] = rng.randint(1, cap)
            f = Labeling(values[v] for v in range(h.vertex_count))
            sums = tuple(sum(f.values[v] for v in e) for e in edges)
            _check_protected_pairs(sums, cls, skews, stray_cap)
            groups: dict[int, list[int]] = {}
            for idx, s in enumerate(sums):
                groups.setdefault(s, []).append(idx)
            colliding = [g for g in groups.values() if len(g) > 1]
            if not colliding:
                result = TwoStepResult(f, cap, step1_attempts, step2_attempts, census)
                assert is_distinguishing(h, f) and f.max_label <= cap
                return result
            for g in colliding:
                for x in range(len(g)):
                    for y in range(x + 1, len(g)):
                        key = (g[x], g[y])
                        census[pair_type(cls.pairs[key], skews[key], stray_cap)] += 1
    raise BudgetExhausted(
        f"two-step labeler exhausted budgets (step1={step1_attempts}, step2={step2_attempts})",
        detail={"collision_census": census, "step1_attempts": step1_attempts,
                "step2_attempts": step2_attempts},
    )
