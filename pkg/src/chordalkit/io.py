"""Edge-list and DIMACS graph files, and JSON certificate records.

Edge-list text::

    # comment
    n 7        (declares a vertex, needed for isolated ones)
    1 2        (one edge per line)

DIMACS text::

    c comment
    p edge 4 3
    e 1 2

Writers are deterministic: sorted edges, lowest endpoint first.
"""

from __future__ import annotations

import os
from typing import Any

from .errors import ParseError
from .graph import Graph, graph_from_edges
from .nested import NestedSequence, format_sequence, parse_strategy, strategy_name
from .recognition import (
    Chordal,
    ChordalityCertificate,
    ChordlessCycle,
    NotChordal,
    format_cycle,
)

__all__ = [
    "parse_edge_list",
    "format_edge_list",
    "parse_dimacs",
    "format_dimacs",
    "detect_format",
    "read_graph",
    "write_graph",
    "certificate_to_dict",
    "certificate_from_dict",
]


def _label(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"bad vertex label {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative vertex label {value}", lineno)
    return value


def parse_edge_list(text: str) -> Graph:
    vertices: dict[int, None] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2:
                raise ParseError("expected 'n <label>'", lineno)
            vertices.setdefault(_label(tokens[1], lineno))
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _label(tokens[0], lineno), _label(tokens[1], lineno)
        if u == v:
            raise ParseError(f"loop edge at vertex {u}", lineno)
        vertices.setdefault(u)
        vertices.setdefault(v)
        edges.append((u, v))
    return graph_from_edges(vertices, edges)


def format_edge_list(g: Graph) -> str:
    """Isolated vertices as ``n`` lines, then every edge, all ascending."""
    lines = [f"n {x}" for x in g.vertices if not g.degree(x)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "".join(line + "\n" for line in lines)


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            n = _label(tokens[2], lineno)
            _label(tokens[3], lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before 'p edge' header", lineno)
            if len(tokens) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            u, v = _label(tokens[1], lineno), _label(tokens[2], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex {x} outside 1..{n}", lineno)
            if u == v:
                raise ParseError(f"loop edge at vertex {u}", lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' header")
    return graph_from_edges(range(1, n + 1), edges)


def format_dimacs(g: Graph) -> str:
    """DIMACS text; labels are replaced by their 1-based rank when not already 1..n."""
    rank = {x: i + 1 for i, x in enumerate(g.vertices)}
    edges = g.edges()
    lines = [f"p edge {len(g)} {len(edges)}"]
    lines.extend(f"e {rank[u]} {rank[v]}" for u, v in edges)
    return "".join(line + "\n" for line in lines)


def detect_format(path: str | os.PathLike, override: str | None = None) -> str:
    if override:
        if override not in ("edges", "dimacs"):
            raise ValueError(f"unknown format {override!r}")
        return override
    return "dimacs" if str(path).lower().endswith(".col") else "edges"


def read_graph(path: str | os.PathLike, fmt: str | None = None) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if detect_format(path, fmt) == "dimacs":
        return parse_dimacs(text)
    return parse_edge_list(text)


def write_graph(g: Graph, path: str | os.PathLike, fmt: str | None = None) -> None:
    text = format_dimacs(g) if detect_format(path, fmt) == "dimacs" else format_edge_list(g)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def certificate_to_dict(cert: ChordalityCertificate) -> dict[str, Any]:
    if isinstance(cert, Chordal):
        seq = cert.sequence
        return {
            "kind": "sequence",
            "strategy": strategy_name(seq.strategy),
            "levels": [sorted(u) for u in seq.levels],
            "text": format_sequence(seq),
        }
    return {
        "kind": "cycle",
        "cycle": list(cert.cycle.vertices),
        "text": format_cycle(cert.cycle),
    }


def certificate_from_dict(data: dict[str, Any]) -> ChordalityCertificate:
    kind = data.get("kind")
    if kind == "sequence":
        strategy = data.get("strategy")
        parsed = None if strategy in (None, "unknown") else parse_strategy(strategy)
        return Chordal(NestedSequence(tuple(frozenset(u) for u in data["levels"]), parsed))
    if kind == "cycle":
        return NotChordal(ChordlessCycle(tuple(data["cycle"])))
    raise ParseError(f"unknown certificate kind {kind!r}")
