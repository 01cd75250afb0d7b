"""Clique number, maximal cliques and colorings.

On a chordal graph a perfect elimination ordering gives all of these in
polynomial time: every maximal clique is some vertex together with its later
neighbours, and coloring greedily in reverse elimination order uses exactly
``ω`` colors, so ``χ = ω``. The exact routines (exponential, capped at 12
vertices) serve as oracles and as the fallback for non-chordal input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from .errors import NotAPeo, NotAPermutation, TooLarge
from .graph import Graph
from .nested import verify_peo

__all__ = [
    "Coloring",
    "R1Report",
    "clique_number_chordal",
    "maximal_cliques_chordal",
    "greedy_coloring",
    "maximal_cliques_exact",
    "clique_number_exact",
    "exact_coloring",
    "chromatic_number_exact",
    "check_r1",
    "format_coloring",
]

EXACT_LIMIT = 12


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring with dense 0-based color indices.

    Construction fails unless every edge of ``graph`` joins two different
    colors and every vertex is colored.
    """

    graph: Graph
    assignment: Mapping[int, int]

    def __post_init__(self):
        assignment = dict(self.assignment)
        if set(assignment) != set(self.graph.vertices):
            raise ValueError("coloring must assign every vertex exactly once")
        for x, y in self.graph.edges():
            if assignment[x] == assignment[y]:
                raise ValueError(f"improper coloring: {x} and {y} share color {assignment[x]}")
        object.__setattr__(self, "assignment", assignment)

    @property
    def color_count(self) -> int:
        return len(set(self.assignment.values()))

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for x in self.graph.vertices:
            out.setdefault(self.assignment[x], []).append(x)
        return [out[c] for c in sorted(out)]


def _require_peo(g: Graph, peo: Sequence[int]) -> list[int]:
    peo = list(peo)
    try:
        ok = verify_peo(g, peo)
    except NotAPermutation as exc:
        raise NotAPeo(str(exc)) from None
    if not ok:
        raise NotAPeo("ordering is not a perfect elimination ordering")
    return peo


def _later_neighbourhoods(g: Graph, peo: list[int]) -> list[frozenset[int]]:
    position = {x: i for i, x in enumerate(peo)}
    return [
        frozenset(y for y in g.neighbors(x) if position[y] > i) | {x}
        for i, x in enumerate(peo)
    ]


def clique_number_chordal(g: Graph, peo: Sequence[int]) -> int:
    """ω(G) as the largest ``1 + |later neighbours|`` along a PEO."""
    peo = _require_peo(g, peo)
    return max((len(c) for c in _later_neighbourhoods(g, peo)), default=0)


def maximal_cliques_chordal(g: Graph, peo: Sequence[int]) -> list[frozenset[int]]:
    """All maximal cliques of a chordal graph, at most ``|V|`` of them.

    Candidates are each vertex with its later neighbours; the inclusion-
    maximal ones are returned, sorted by their sorted member tuples.
    """
    peo = _require_peo(g, peo)
    candidates = set(_later_neighbourhoods(g, peo))
    maximal = [c for c in candidates if not any(c < d for d in candidates)]
    return sorted(maximal, key=lambda c: sorted(c))


def greedy_coloring(g: Graph, order: Sequence[int]) -> Coloring:
    """First-fit coloring in the given vertex order.

    Fed the reverse of a perfect elimination ordering of a chordal graph,
    this uses exactly ``ω(G)`` colors.
    """
    order = list(order)
    if len(order) != len(g) or set(order) != set(g.vertices):
        raise NotAPermutation("coloring order must be a permutation of the vertices")
    color: dict[int, int] = {}
    for x in order:
        taken = {color[y] for y in g.neighbors(x) if y in color}
        c = 0
        while c in taken:
            c += 1
        color[x] = c
    return Coloring(g, color)


# -- exact oracles -----------------------------------------------------------

def _guard(g: Graph) -> None:
    if len(g) > EXACT_LIMIT:
        raise TooLarge(f"exact search limited to {EXACT_LIMIT} vertices, got {len(g)}")


def maximal_cliques_exact(g: Graph) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting; works on any graph (guarded at 12 vertices)."""
    _guard(g)
    out: list[frozenset[int]] = []

    def expand(r: frozenset[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(p | x, key=lambda u: (len(g.neighbors(u) & p), -u))
        for v in sorted(p - g.neighbors(pivot)):
            nv = g.neighbors(v)
            expand(r | {v}, p & nv, x & nv)
            p.discard(v)
            x.add(v)

    if len(g):
        expand(frozenset(), set(g.vertices), set())
    return sorted(out, key=lambda c: sorted(c))


def clique_number_exact(g: Graph) -> int:
    return max((len(c) for c in maximal_cliques_exact(g)), default=0)


def exact_coloring(g: Graph) -> Coloring:
    """A minimum coloring by iterative-deepening backtracking on the color count."""
    _guard(g)
    if not len(g):
        return Coloring(g, {})
    order = sorted(g.vertices, key=lambda x: (-g.degree(x), x))
    for k in range(1, len(g) + 1):
        color: dict[int, int] = {}

        def place(i: int) -> bool:
            if i == len(order):
                return True
            x = order[i]
            taken = {color[y] for y in g.neighbors(x) if y in color}
            # symmetry breaking: never open more than one new color at a time
            opened = max(color.values(), default=-1) + 1
            for c in range(min(k, opened + 1)):
                if c not in taken:
                    color[x] = c
                    if place(i + 1):
                        return True
                    del color[x]
            return False

        if place(0):
            return Coloring(g, color)
    raise AssertionError("unreachable: |V| colors always suffice")


def chromatic_number_exact(g: Graph) -> int:
    """χ(G); 0 for the empty graph."""
    return exact_coloring(g).color_count


class R1Report(NamedTuple):
    chi: int
    omega: int
    equal: bool


def check_r1(g: Graph) -> R1Report:
    """Compute χ and ω exactly and confirm ``χ >= ω``."""
    chi = chromatic_number_exact(g)
    omega = clique_number_exact(g)
    if chi < omega:
        raise AssertionError(f"chi={chi} < omega={omega}: exact routines are inconsistent")
    return R1Report(chi, omega, chi == omega)


def format_coloring(coloring: Coloring) -> str:
    """One ``vertex color`` line per vertex, ascending by vertex."""
    return "".join(f"{x} {coloring.assignment[x]}\n" for x in coloring.graph.vertices)
