"""Perfect (simplicial) vertices and the perfect set P(A)."""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, induced_subgraph

__all__ = ["is_perfect_vertex", "perfect_set"]


def is_perfect_vertex(g: Graph, x: int) -> bool:
    """True iff ``x`` is isolated or its neighbourhood is a clique in ``g``.

    The neighbourhood test is pairwise: for each neighbour ``y`` every other
    neighbour must be adjacent to ``y``.
    """
    nbrs = g.neighbors(x)
    for y in nbrs:
        ny = g.neighbors(y)
        for z in nbrs:
            if z != y and z not in ny:
                return False
    return True


def perfect_set(g: Graph, a: Iterable[int] | None = None) -> frozenset[int]:
    """P(A): members of ``a`` that are perfect in the induced subgraph G(A).

    With ``a`` omitted the whole vertex set is used.
    """
    sub = g if a is None else induced_subgraph(g, a)
    return frozenset(x for x in sub.vertices if is_perfect_vertex(sub, x))
