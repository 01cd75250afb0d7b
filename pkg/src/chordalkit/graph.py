"""Immutable finite simple undirected graphs.

Every algorithm in the package takes a :class:`Graph` and never mutates it;
"removing" vertices is always expressed as :func:`induced_subgraph`.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

from .errors import LoopEdge, UnknownVertex

__all__ = [
    "Graph",
    "graph_from_edges",
    "adjacency",
    "is_clique",
    "induced_subgraph",
    "connected_components",
]


class Graph:
    """A finite simple undirected graph on non-negative integer labels.

    Instances are immutable and hashable. Equality is label-wise: two graphs
    are equal when they have the same vertex labels and the same edges.

    Use :func:`graph_from_edges` to build one from an edge list.
    """

    __slots__ = ("_adj", "_index", "_labels", "_hash")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj = {}
        for x, nbrs in adjacency.items():
            _check_label(x)
            adj[x] = frozenset(nbrs)
        for x, nbrs in adj.items():
            if x in nbrs:
                raise LoopEdge(f"loop at vertex {x}")
            for y in nbrs:
                if y not in adj:
                    raise UnknownVertex(y)
                if x not in adj[y]:
                    raise ValueError(f"adjacency is not symmetric for {{{x}, {y}}}")
        self._labels = tuple(sorted(adj))
        # dense index, built once; used for deterministic ordering and serialization
        self._index = {x: i for i, x in enumerate(self._labels)}
        self._adj = {x: adj[x] for x in self._labels}
        self._hash = None

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertex labels in ascending order."""
        return self._labels

    @property
    def order(self) -> int:
        return len(self._labels)

    @property
    def size(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list, lowest endpoint first."""
        return [(x, y) for x in self._labels for y in sorted(self._adj[x]) if x < y]

    def neighbors(self, x: int) -> frozenset[int]:
        try:
            return self._adj[x]
        except KeyError:
            raise UnknownVertex(x) from None

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.neighbors(x)

    def degree(self, x: int) -> int:
        return len(self.neighbors(x))

    def index(self, x: int) -> int:
        """Dense position of ``x`` in ``vertices``."""
        try:
            return self._index[x]
        except KeyError:
            raise UnknownVertex(x) from None

    def check_subset(self, labels: Iterable[int]) -> frozenset[int]:
        """Return ``labels`` as a frozenset, raising UnknownVertex on strangers."""
        members = frozenset(labels)
        for x in members:
            if x not in self._adj:
                raise UnknownVertex(x)
        return members

    def __contains__(self, x) -> bool:
        return x in self._adj

    def __iter__(self):
        return iter(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._labels, tuple(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def _check_label(x) -> None:
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise ValueError(f"vertex labels must be non-negative integers, got {x!r}")


def graph_from_edges(vertex_labels: Iterable[int], edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph from its vertex labels and unordered edge pairs.

    Isolated vertices are kept; duplicate edges (in either orientation) are
    merged. A pair ``(x, x)`` raises :class:`LoopEdge` and an endpoint missing
    from ``vertex_labels`` raises :class:`UnknownVertex`.

    >>> g = graph_from_edges([1, 2, 3], [(1, 2), (2, 3), (2, 1)])
    >>> g.edges()
    [(1, 2), (2, 3)]
    """
    adj: dict[int, set[int]] = {}
    for x in vertex_labels:
        _check_label(x)
        adj.setdefault(x, set())
    for pair in edges:
        x, y = pair
        if x == y:
            raise LoopEdge(f"loop edge {{{x}, {x}}}")
        if x not in adj:
            raise UnknownVertex(x)
        if y not in adj:
            raise UnknownVertex(y)
        adj[x].add(y)
        adj[y].add(x)
    return Graph(adj)


def adjacency(g: Graph, x: int) -> frozenset[int]:
    """Adj(x): the set of vertices joined to ``x`` by an edge."""
    return g.neighbors(x)


def is_clique(g: Graph, c: Iterable[int]) -> bool:
    """True iff every pair of distinct members of ``c`` is an edge of ``g``."""
    members = sorted(g.check_subset(c))
    for i, x in enumerate(members):
        nx_ = g.neighbors(x)
        for y in members[i + 1:]:
            if y not in nx_:
                return False
    return True


def induced_subgraph(g: Graph, a: Iterable[int]) -> Graph:
    """G(A): the vertices of ``a`` with every edge of ``g`` inside ``a``."""
    members = g.check_subset(a)
    return Graph({x: g.neighbors(x) & members for x in members})


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their least label."""
    seen: set[int] = set()
    parts = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        parts.append(frozenset(comp))
    return parts


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1
