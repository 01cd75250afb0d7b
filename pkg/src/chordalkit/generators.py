"""Named graph families and seeded random graphs.

All randomness comes from :class:`~chordalkit.rng.SplitMix64`, so a
``(parameters, seed)`` pair always produces the same graph.
"""

from __future__ import annotations

import itertools

from .errors import BadProbability, BadSize
from .graph import Graph, graph_from_edges
from .rng import SplitMix64

__all__ = [
    "gen_path",
    "gen_cycle",
    "gen_complete",
    "gen_star",
    "gen_complete_multipartite",
    "gen_random_chordal",
    "gen_random_graph",
]


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise BadSize(message)


def gen_path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return graph_from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return graph_from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return graph_from_edges(range(n), itertools.combinations(range(n), 2))


def gen_star(n: int) -> Graph:
    """Star on ``n`` vertices: centre 0 joined to leaves ``1..n-1``."""
    _need(n >= 1, f"star needs n >= 1, got {n}")
    return graph_from_edges(range(n), [(0, i) for i in range(1, n)])


def gen_complete_multipartite(r: int, n: int) -> Graph:
    """K_r(n): ``r`` parts of ``n`` vertices each, part ``i`` holding ``i*n .. i*n+n-1``."""
    _need(r >= 1 and n >= 1, f"multipartite graph needs r, n >= 1, got r={r}, n={n}")
    part = lambda x: x // n  # noqa: E731
    labels = range(r * n)
    return graph_from_edges(
        labels, [(x, y) for x, y in itertools.combinations(labels, 2) if part(x) != part(y)]
    )


def gen_random_chordal(n: int, clique_bound: int, seed: int) -> Graph:
    """Random chordal graph grown one vertex at a time.

    Vertex ``v`` picks a uniformly random maximal clique ``C`` of the graph
    on ``0..v-1``, then a uniform random size ``1..min(clique_bound, |C|)``
    and a uniform subset ``S`` of ``C`` of that size, and is joined to ``S``.
    Each new vertex is simplicial when added, so ``n-1, ..., 0`` is a perfect
    elimination ordering. The distribution is not uniform over chordal graphs.
    """
    _need(n >= 1 and clique_bound >= 1,
          f"random chordal graph needs n, clique_bound >= 1, got n={n}, bound={clique_bound}")
    rng = SplitMix64(seed)
    cliques: list[tuple[int, ...]] = [(0,)]
    edges = []
    for v in range(1, n):
        c = cliques[rng.below(len(cliques))]
        k = 1 + rng.below(min(clique_bound, len(c)))
        s = tuple(sorted(rng.sample(c, k)))
        edges.extend((u, v) for u in s)
        if s == c:
            cliques.remove(c)
        cliques.append(s + (v,))
        cliques.sort()
    return graph_from_edges(range(n), edges)


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p); pairs are drawn in lexicographic order."""
    _need(n >= 0, f"random graph needs n >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise BadProbability(f"edge probability must lie in [0, 1], got {p}")
    rng = SplitMix64(seed)
    return graph_from_edges(
        range(n), [pair for pair in itertools.combinations(range(n), 2) if rng.random() < p]
    )
