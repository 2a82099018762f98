"""Core data model: hypergraphs, simple graphs, and vertex labelings.

A labeling with positive integer values is *sum distinguishing* for a
hypergraph when all hyperedge label-sums are pairwise distinct, and
*vertex sum distinguishing* for a graph when closed-neighborhood sums
differ for every pair of vertices whose closed neighborhoods differ.

Vertex indices are 0-based everywhere; label values are 1-based
positive integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DimensionError


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on vertices ``0..vertex_count-1`` with an ordered
    sequence of distinct, nonempty hyperedges.

    Duplicate edges are rejected at construction: two equal edges can
    never receive distinct sums, so instances containing them have no
    distinguishing labeling at all.
    """

    vertex_count: int
    edges: tuple[frozenset[int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]]):
        if vertex_count < 1:
            raise ValueError("hypergraph needs at least one vertex")
        normalized = []
        seen: set[frozenset[int]] = set()
        for pos, raw in enumerate(edges):
            edge = frozenset(raw)
            if not edge:
                raise ValueError(f"edge {pos} is empty")
            for v in edge:
                if not (0 <= v < vertex_count):
                    raise ValueError(f"edge {pos}: vertex {v} out of range [0, {vertex_count})")
            if edge in seen:
                raise ValueError(f"duplicate edge {sorted(edge)} at position {pos}")
            seen.add(edge)
            normalized.append(edge)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[frozenset[int], ...]:
        """For each vertex, the set of edge indices containing it."""
        inc: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].add(i)
        return tuple(frozenset(s) for s in inc)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph; edges are unordered distinct pairs."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        normalized: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range [0, {vertex_count})")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class Labeling:
    """Positive integer labels, one per vertex."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("labeling must be nonempty")
        if any(v < 1 for v in vals):
            raise ValueError("labels must be positive integers")
        object.__setattr__(self, "values", vals)

    @property
    def max_label(self) -> int:
        return max(self.values)

    def __len__(self) -> int:
        return len(self.values)

    @staticmethod
    def all_ones(n: int) -> "Labeling":
        return Labeling((1,) * n)


def _check_length(n: int, f: Labeling) -> None:
    if len(f) != n:
        raise DimensionError(f"labeling has {len(f)} values, instance has {n} vertices")


def edge_sums(h: Hypergraph, f: Labeling) -> tuple[int, ...]:
    """Label-sum of every hyperedge, in edge order."""
    _check_length(h.vertex_count, f)
    vals = f.values
    return tuple(sum(vals[v] for v in e) for e in h.edges)


def is_distinguishing(h: Hypergraph, f: Labeling) -> bool:
    """True iff all hyperedge sums are pairwise distinct."""
    sums = edge_sums(h, f)
    return len(set(sums)) == len(sums)


def closed_sums(g: Graph, f: Labeling) -> tuple[int, ...]:
    """Closed-neighborhood label-sum of every vertex."""
    _check_length(g.vertex_count, f)
    vals = f.values
    return tuple(vals[v] + sum(vals[u] for u in g.adjacency[v]) for v in range(g.vertex_count))


def is_vertex_sum_distinguishing(g: Graph, f: Labeling) -> bool:
    """True iff closed-neighborhood sums differ for every pair of vertices
    with distinct closed neighborhoods.

    Pairs sharing the same closed neighborhood automatically share the
    same sum and are exempt.
    """
    sums = closed_sums(g, f)
    by_class: dict[frozenset[int], int] = {}
    for v in range(g.vertex_count):
        by_class[g.closed_neighborhood(v)] = sums[v]
    return len(set(by_class.values())) == len(by_class)


def power_of_two_labeling(n: int) -> Labeling:
    """Labels 1, 2, 4, ..., 2**(n-1).

    Distinguishing for every duplicate-free hypergraph on n vertices,
    since distinct vertex subsets then have distinct binary sums.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    return Labeling(tuple(1 << i for i in range(n)))
