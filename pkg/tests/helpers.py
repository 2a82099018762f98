"""Shared instance generators and independent brute-force oracles.

The oracles here deliberately re-derive answers from first principles
(full enumeration over labelings) so that solver tests never check the
search against itself.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb
from random import Random

from sumlabel import Graph, Hypergraph, Labeling, is_distinguishing


def complete_hypergraph(n: int) -> Hypergraph:
    edges = [c for k in range(1, n + 1) for c in combinations(range(n), k)]
    return Hypergraph(n, edges)


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    return Graph(n, [(0, v) for v in range(1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def random_hypergraph(rng: Random, n: int, m: int, max_size: int | None = None) -> Hypergraph:
    """m distinct nonempty random subsets of [0, n)."""
    limit = min(max_size or n, n)
    available = sum(comb(n, k) for k in range(1, limit + 1))
    if m > available:
        raise ValueError(f"only {available} distinct edges exist, asked for {m}")
    edges: set[frozenset[int]] = set()
    while len(edges) < m:
        k = rng.randint(1, limit)
        edges.add(frozenset(rng.sample(range(n), k)))
    return Hypergraph(n, sorted(edges, key=lambda e: (len(e), sorted(e))))


def random_graph(rng: Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_tree(rng: Random, n: int) -> Graph:
    """Uniform labeled tree via a random Pruefer sequence."""
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    import heapq

    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = sorted(leaves)[:2]
    edges.append((u, w))
    return Graph(n, edges)


def all_graphs(n: int):
    """Every graph on n vertices (raw enumeration over edge subsets)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def brute_force_min_max_label(h: Hypergraph) -> int:
    """Smallest N admitting a distinguishing labeling, by raw enumeration."""
    n = h.vertex_count
    bound = 1 << (n - 1)
    for cap in range(1, bound + 1):
        for values in product(range(1, cap + 1), repeat=n):
            if max(values) == cap and is_distinguishing(h, Labeling(values)):
                return cap
    raise AssertionError("powers of two should always work")


def brute_force_decide(h: Hypergraph, cap: int) -> tuple[int, ...] | None:
    """First distinguishing labeling with labels <= cap, in lexicographic
    order, by raw enumeration."""
    for values in product(range(1, cap + 1), repeat=h.vertex_count):
        if is_distinguishing(h, Labeling(values)):
            return values
    return None
