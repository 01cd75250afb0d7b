"""Chordality decision with two-sided certificates, plus two independent oracles.

:func:`is_chordal` answers with either a stationary perfectly nested sequence
(the graph is chordal) or an induced cycle of length at least four (it is
not). Both witnesses are cheap to re-check with :func:`verify_certificate`.

:func:`is_chordal_mcs` and :func:`brute_force_chordal` share no code with the
sequence builder and exist to cross-validate it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import NotStalled, ParseError, TooLarge
from .graph import Graph, induced_subgraph
from .nested import (
    AllPerfect,
    NestedSequence,
    RemovalStrategy,
    Stalled,
    build_stationary_sequence,
    verify_peo,
    verify_perfectly_nested,
)
from .perfection import perfect_set

__all__ = [
    "ChordlessCycle",
    "Chordal",
    "NotChordal",
    "ChordalityCertificate",
    "is_chordal",
    "find_chordless_cycle",
    "mcs_ordering",
    "is_chordal_mcs",
    "iter_cycles",
    "find_induced_cycle",
    "brute_force_chordal",
    "verify_certificate",
    "format_cycle",
    "parse_cycle",
]

BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True)
class ChordlessCycle:
    """An induced cycle, listed in traversal order."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self):
        return len(self.vertices)

    def problems(self, g: Graph) -> list[str]:
        """Reasons this is not a chordless cycle of ``g`` (empty when valid)."""
        cyc = self.vertices
        k = len(cyc)
        out = []
        if k < 4:
            out.append(f"length {k} < 4")
        if len(set(cyc)) != k:
            out.append("repeated vertex")
        missing = [x for x in cyc if x not in g]
        if missing:
            return out + [f"unknown vertices {missing}"]
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                joined = g.has_edge(cyc[i], cyc[j])
                if consecutive and not joined:
                    out.append(f"{cyc[i]} and {cyc[j]} are consecutive but not adjacent")
                elif not consecutive and joined and k >= 4:
                    out.append(f"chord {{{cyc[i]}, {cyc[j]}}}")
        return out

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)


@dataclass(frozen=True)
class Chordal:
    sequence: NestedSequence
    chordal = True


@dataclass(frozen=True)
class NotChordal:
    cycle: ChordlessCycle
    chordal = False


ChordalityCertificate = Union[Chordal, NotChordal]


def is_chordal(g: Graph, strategy: RemovalStrategy | None = None) -> ChordalityCertificate:
    """Decide chordality and return a self-verifying certificate.

    >>> from chordalkit.generators import gen_cycle
    >>> is_chordal(gen_cycle(4))
    NotChordal(cycle=ChordlessCycle(vertices=(0, 1, 2, 3)))
    """
    result = build_stationary_sequence(g, strategy or AllPerfect())
    if isinstance(result, Stalled):
        return NotChordal(find_chordless_cycle(g, result.core))
    return Chordal(result)


def _shortest_path(g: Graph, allowed: frozenset[int], src: int, dst: int) -> list[int] | None:
    parent = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            return path[::-1]
        for y in sorted(g.neighbors(x) & allowed):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def find_chordless_cycle(g: Graph, core: Iterable[int]) -> ChordlessCycle:
    """Extract an induced cycle of length >= 4 from a stalled core.

    ``core`` must be non-empty with ``P(core) = ∅``. For a vertex ``v`` with
    non-adjacent neighbours ``x, y`` inside the core, a shortest ``x``-``y``
    path avoiding ``v`` and the rest of its neighbourhood closes into an
    induced cycle through ``v``. Vertices and pairs are tried in ascending
    label order until one such path exists.
    """
    core = g.check_subset(core)
    if not core or perfect_set(g, core):
        raise NotStalled("core must be non-empty and have no perfect vertex")
    sub = induced_subgraph(g, core)
    for v in sub.vertices:
        nbrs = sorted(sub.neighbors(v))
        outside = core - sub.neighbors(v) - {v}
        for i, x in enumerate(nbrs):
            nx_ = sub.neighbors(x)
            for y in nbrs[i + 1:]:
                if y in nx_:
                    continue
                path = _shortest_path(sub, outside | {x, y}, x, y)
                if path is not None:
                    return ChordlessCycle((v, *path))
    # unreachable for a genuine stalled core: such a core is not chordal
    raise NotStalled("no induced cycle found through any vertex of the core")


def mcs_ordering(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties broken by lowest label)."""
    weight = {x: 0 for x in g.vertices}
    order = []
    while weight:
        best = max(weight, key=lambda x: (weight[x], -x))
        order.append(best)
        del weight[best]
        for y in g.neighbors(best):
            if y in weight:
                weight[y] += 1
    return order


def is_chordal_mcs(g: Graph) -> bool:
    """Oracle: reversed MCS order is a perfect elimination ordering iff chordal."""
    return verify_peo(g, mcs_ordering(g)[::-1])


def iter_cycles(g: Graph, min_length: int = 3) -> Iterator[tuple[int, ...]]:
    """Every elementary cycle of ``g`` exactly once.

    Each cycle is emitted in canonical form: it starts at its least vertex
    and its second vertex is smaller than its last.
    """
    for s in g.vertices:
        stack = [(s, iter(sorted(y for y in g.neighbors(s) if y > s)))]
        path = [s]
        on_path = {s}
        while stack:
            x, it = stack[-1]
            for y in it:
                if y == s:
                    continue
                if y in on_path:
                    continue
                path.append(y)
                on_path.add(y)
                if len(path) >= min_length and s in g.neighbors(y) and path[1] < y:
                    yield tuple(path)
                stack.append((y, iter(sorted(z for z in g.neighbors(y) if z > s))))
                break
            else:
                stack.pop()
                on_path.discard(path.pop())


def _has_chord(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    for i in range(k):
        ni = g.neighbors(cycle[i])
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if cycle[j] in ni:
                return True
    return False


def find_induced_cycle(g: Graph) -> tuple[int, ...] | None:
    """An induced cycle of length >= 4, or None.

    Depth-first search over induced paths rooted at the cycle's least
    vertex ``s``: a path grows only by a vertex adjacent to its tip and to no
    earlier path vertex, except that touching ``s`` closes the cycle.
    """

    def extend(s: int, path: list[int]) -> tuple[int, ...] | None:
        for y in sorted(g.neighbors(path[-1])):
            if y <= s or y in path:
                continue
            ny = g.neighbors(y)
            if any(p in ny for p in path[1:-1]):
                continue
            if s in ny:
                if len(path) >= 3:
                    return (*path, y)
                continue
            found = extend(s, path + [y])
            if found:
                return found
        return None

    for s in g.vertices:
        for x in sorted(g.neighbors(s)):
            if x > s:
                found = extend(s, [s, x])
                if found:
                    return found
    return None


def brute_force_chordal(g: Graph, *, enumerate_all: bool | None = None) -> bool:
    """Oracle: check every cycle of length >= 4 for a chord, by enumeration.

    Two searches are run and must agree: a direct enumeration of all
    elementary cycles (:func:`iter_cycles`) and a search for an induced cycle
    (:func:`find_induced_cycle`). The full enumeration is exponential in the
    number of cycles, so by default it only runs for graphs with at most 8
    vertices; pass ``enumerate_all=True`` to force it.
    """
    if len(g) > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {len(g)}")
    induced = find_induced_cycle(g)
    if enumerate_all is None:
        enumerate_all = len(g) <= 8
    if enumerate_all:
        chordless = next((c for c in iter_cycles(g, 4) if not _has_chord(g, c)), None)
        if (chordless is None) != (induced is None):
            raise AssertionError("cycle enumeration and induced-cycle search disagree")
    return induced is None


def verify_certificate(g: Graph, cert: ChordalityCertificate) -> bool:
    if isinstance(cert, Chordal):
        return verify_perfectly_nested(g, cert.sequence).ok
    if isinstance(cert, NotChordal):
        return cert.cycle.is_valid(g)
    return False


def format_cycle(cycle: ChordlessCycle) -> str:
    return "cycle: " + " ".join(map(str, cycle.vertices)) + "\n"


def parse_cycle(text: str) -> ChordlessCycle:
    line = text.strip()
    if not line.startswith("cycle:"):
        raise ParseError("expected 'cycle: v1 v2 ...'", 1)
    try:
        return ChordlessCycle(tuple(int(t) for t in line[len("cycle:"):].split()))
    except ValueError:
        raise ParseError(f"bad vertex label in {line!r}", 1) from None
