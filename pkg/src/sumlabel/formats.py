"""Text formats for instances and JSON payloads for labelings.

Hypergraph (".hg"): first line "n m", then m lines "k v_1 ... v_k".
Graph (".g"): first line "n m", then m lines "u v".
All tokens are whitespace-separated ASCII decimals; vertex indices are
0-based.  Serialization is canonical (edges in stored order, vertices
sorted within an edge), so parse(serialize(x)) == x.
"""

from __future__ import annotations

from typing import Any

from .errors import ParseError, ValidationError
from .hypergraph import Graph, Hypergraph, Labeling


def _int_fields(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise ParseError(f"non-integer token in {line!r}", lineno) from exc


def _data_lines(text: str) -> list[tuple[int, str]]:
    return [(i, line) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty input")
    lineno, header = lines[0]
    head = _int_fields(header, lineno)
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = head
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}", lineno)
    if n < 1:
        raise ValidationError("need at least one vertex", lineno)
    edges: list[frozenset[int]] = []
    seen: dict[frozenset[int], int] = {}
    for lineno, line in lines[1:]:
        fields = _int_fields(line, lineno)
        if not fields:
            raise ParseError("empty edge line", lineno)
        k, vertices = fields[0], fields[1:]
        if k != len(vertices):
            raise ParseError(f"edge declares {k} vertices but lists {len(vertices)}", lineno)
        edge = frozenset(vertices)
        if not edge:
            raise ValidationError("empty edge", lineno)
        if len(edge) != len(vertices):
            raise ValidationError("repeated vertex inside an edge", lineno)
        for v in edge:
            if not 0 <= v < n:
                raise ValidationError(f"vertex {v} out of range [0, {n})", lineno)
        if edge in seen:
            raise ValidationError(f"duplicate edge (first seen on line {seen[edge]})", lineno)
        seen[edge] = lineno
        edges.append(edge)
    return Hypergraph(n, edges)


def serialize_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.vertex_count} {h.edge_count}"]
    for e in h.edges:
        vs = sorted(e)
        lines.append(f"{len(vs)} " + " ".join(map(str, vs)))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty input")
    lineno, header = lines[0]
    head = _int_fields(header, lineno)
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = head
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}", lineno)
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, line in lines[1:]:
        fields = _int_fields(line, lineno)
        if len(fields) != 2:
            raise ParseError("graph edge line must be 'u v'", lineno)
        u, v = fields
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}", lineno)
        for w in (u, v):
            if not 0 <= w < n:
                raise ValidationError(f"vertex {w} out of range [0, {n})", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValidationError(f"duplicate edge (first seen on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def labeling_payload(f: Labeling, verified: bool, **extra: Any) -> dict[str, Any]:
    """The canonical JSON object for a labeling result."""
    payload: dict[str, Any] = {
        "labels": list(f.values),
        "max_label": f.max_label,
        "verified": bool(verified),
    }
    payload.update(extra)
    return payload
