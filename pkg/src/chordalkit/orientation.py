"""Acyclic orientations and dependent arcs.

An arc ``u -> v`` of an acyclic orientation is *dependent* when reversing it
would close a directed cycle, which happens exactly when ``v`` can also be
reached from ``u`` along a directed walk of length at least two. A graph is
*fully orientable* when every count of dependent arcs between the minimum and
maximum over its acyclic orientations is attained by some orientation.

:func:`orientation_spectrum` enumerates all ``2^|E|`` direction assignments
with numpy bitmask arithmetic. :func:`spectrum_by_enumeration` does the same
one :class:`Orientation` at a time and is kept as its cross-check.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CyclicInput, NotAPermutation, TooLarge
from .graph import Graph

__all__ = [
    "Orientation",
    "SpectrumReport",
    "orient_by_ordering",
    "is_acyclic",
    "dependent_arcs",
    "dependent_arcs_by_reversal",
    "iter_orientations",
    "orientation_spectrum",
    "spectrum_by_enumeration",
    "format_orientation",
    "format_spectrum",
]

MAX_SPECTRUM_EDGES = 20
_CHUNK = 1 << 15

Arc = tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    """A direction on every edge of ``base``; ``arcs`` holds ``(tail, head)`` pairs."""

    base: Graph
    arcs: frozenset[Arc]

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        seen = set()
        for u, v in arcs:
            if not self.base.has_edge(u, v):
                raise ValueError(f"arc {u} -> {v} is not an edge of the base graph")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"edge {{{u}, {v}}} is oriented twice")
            seen.add(key)
        if len(seen) != self.base.size:
            raise ValueError("every edge of the base graph needs exactly one direction")
        object.__setattr__(self, "arcs", arcs)

    def successors(self) -> dict[int, set[int]]:
        out: dict[int, set[int]] = {x: set() for x in self.base.vertices}
        for u, v in self.arcs:
            out[u].add(v)
        return out

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


def orient_by_ordering(g: Graph, order: Sequence[int]) -> Orientation:
    """Direct every edge from its earlier to its later endpoint in ``order``."""
    order = list(order)
    if len(order) != len(g) or set(order) != set(g.vertices):
        raise NotAPermutation("orientation order must be a permutation of the vertices")
    position = {x: i for i, x in enumerate(order)}
    arcs = frozenset((u, v) if position[u] < position[v] else (v, u) for u, v in g.edges())
    return Orientation(g, arcs)


def _has_cycle(succ: dict[int, set[int]]) -> bool:
    white, grey, black = 0, 1, 2
    state = dict.fromkeys(succ, white)
    for root in sorted(succ):
        if state[root] != white:
            continue
        state[root] = grey
        stack = [(root, iter(sorted(succ[root])))]
        while stack:
            x, it = stack[-1]
            for y in it:
                if state[y] == grey:
                    return True
                if state[y] == white:
                    state[y] = grey
                    stack.append((y, iter(sorted(succ[y]))))
                    break
            else:
                state[x] = black
                stack.pop()
    return False


def is_acyclic(d: Orientation) -> bool:
    return not _has_cycle(d.successors())


def _reaches(succ: dict[int, set[int]], src: int, dst: int, skip: Arc | None = None) -> bool:
    seen = {src}
    stack = [src]
    while stack:
        x = stack.pop()
        for y in succ[x]:
            if (x, y) == skip or y in seen:
                continue
            if y == dst:
                return True
            seen.add(y)
            stack.append(y)
    return False


def _dependent_by_reachability(d: Orientation) -> frozenset[Arc]:
    succ = d.successors()
    return frozenset(a for a in d.arcs if _reaches(succ, a[0], a[1], skip=a))


def dependent_arcs_by_reversal(d: Orientation) -> frozenset[Arc]:
    """Arcs whose reversal (alone) produces a directed cycle."""
    out = []
    for u, v in d.arcs:
        flipped = (d.arcs - {(u, v)}) | {(v, u)}
        succ: dict[int, set[int]] = {x: set() for x in d.base.vertices}
        for a, b in flipped:
            succ[a].add(b)
        if _has_cycle(succ):
            out.append((u, v))
    return frozenset(out)


def dependent_arcs(d: Orientation, *, cross_check: bool = True) -> frozenset[Arc]:
    """Dependent arcs of an acyclic orientation.

    ``u -> v`` is dependent iff ``v`` stays reachable from ``u`` once that arc
    is deleted. With ``cross_check`` the result is compared against the
    reversal formulation and an AssertionError is raised on disagreement.
    """
    if not is_acyclic(d):
        raise CyclicInput("dependent arcs are only defined for acyclic orientations")
    found = _dependent_by_reachability(d)
    if cross_check and found != dependent_arcs_by_reversal(d):
        raise AssertionError("reachability and reversal criteria disagree")
    return found


def iter_orientations(g: Graph) -> Iterator[Orientation]:
    """All ``2^|E|`` orientations; bit ``i`` of the counter flips edge ``i``."""
    edges = g.edges()
    for flips in itertools.product((False, True), repeat=len(edges)):
        yield Orientation(g, frozenset((v, u) if f else (u, v) for (u, v), f in zip(edges, flips)))


@dataclass(frozen=True)
class SpectrumReport:
    achievable_d: tuple[int, ...]
    acyclic_count: int = 0

    @property
    def d_min(self) -> int:
        return self.achievable_d[0]

    @property
    def d_max(self) -> int:
        return self.achievable_d[-1]

    @property
    def fully_orientable(self) -> bool:
        return self.achievable_d == tuple(range(self.d_min, self.d_max + 1))

    def missing(self) -> tuple[int, ...]:
        return tuple(sorted(set(range(self.d_min, self.d_max + 1)) - set(self.achievable_d)))


def _guard(g: Graph) -> None:
    if g.size > MAX_SPECTRUM_EDGES:
        raise TooLarge(f"spectrum enumeration limited to {MAX_SPECTRUM_EDGES} edges, got {g.size}")


def spectrum_by_enumeration(g: Graph) -> SpectrumReport:
    """Reference spectrum: one Orientation object per direction assignment."""
    _guard(g)
    values = set()
    count = 0
    for d in iter_orientations(g):
        if is_acyclic(d):
            count += 1
            values.add(len(_dependent_by_reachability(d)))
    return SpectrumReport(tuple(sorted(values)), count)


def _chunk_counts(edges: list[tuple[int, int]], n: int, lo: int, hi: int):
    """Dependent-arc counts and acyclicity for assignment codes ``lo..hi-1``.

    Vertices are dense indices ``0..n-1`` and each vertex set is a uint64
    bitmask per code. Bit ``i`` of a code set means edge ``i = (a, b)`` with
    ``a < b`` points ``b -> a``.
    """
    codes = np.arange(lo, hi, dtype=np.uint64)
    one = np.uint64(1)
    zero = np.zeros_like(codes)
    succ = [zero.copy() for _ in range(n)]
    flips = []
    for i, (a, b) in enumerate(edges):
        f = ((codes >> np.uint64(i)) & one).astype(bool)
        flips.append(f)
        succ[a] |= np.where(f, zero, np.uint64(1 << b))
        succ[b] |= np.where(f, np.uint64(1 << a), zero)

    nbrs = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    bit = [np.uint64(1 << v) for v in range(n)]

    # strict reachability by fixed-point iteration; n rounds always suffice
    reach = [s.copy() for s in succ]
    for _ in range(n):
        changed = False
        for v in range(n):
            acc = succ[v].copy()
            for u in nbrs[v]:
                has_u = (succ[v] & bit[u]) != 0
                acc |= np.where(has_u, reach[u], zero)
            if not changed and not np.array_equal(acc, reach[v]):
                changed = True
            reach[v] = acc
        if not changed:
            break

    acyclic = np.ones(codes.shape, dtype=bool)
    for v in range(n):
        acyclic &= (reach[v] & bit[v]) == 0

    # vertices reachable from v by a walk of length >= 2
    far = []
    for v in range(n):
        acc = zero.copy()
        for u in nbrs[v]:
            has_u = (succ[v] & bit[u]) != 0
            acc |= np.where(has_u, reach[u], zero)
        far.append(acc)

    counts = np.zeros(codes.shape, dtype=np.int64)
    for (a, b), f in zip(edges, flips):
        forward = (far[a] & bit[b]) != 0
        backward = (far[b] & bit[a]) != 0
        counts += np.where(f, backward, forward)
    return counts[acyclic], int(acyclic.sum())


def orientation_spectrum(g: Graph, threads: int = 1) -> SpectrumReport:
    """Achievable dependent-arc counts over every acyclic orientation of ``g``.

    Enumerates all ``2^|E|`` assignments (guarded at 20 edges). ``threads``
    splits the enumeration into blocks; the result does not depend on it.
    """
    _guard(g)
    active = [x for x in g.vertices if g.degree(x)]
    index = {x: i for i, x in enumerate(active)}
    edges = [(index[u], index[v]) for u, v in g.edges()]
    total = 1 << len(edges)
    blocks = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]

    def run(block):
        return _chunk_counts(edges, len(active), *block)

    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, blocks))
    else:
        results = [run(b) for b in blocks]

    values: set[int] = set()
    count = 0
    for counts, k in results:
        values.update(np.unique(counts).tolist())
        count += k
    return SpectrumReport(tuple(sorted(values)), count)


def format_orientation(d: Orientation) -> str:
    return "".join(f"{u} -> {v}\n" for u, v in d.sorted_arcs())


def format_spectrum(report: SpectrumReport) -> str:
    achievable = ",".join(map(str, report.achievable_d))
    flag = "true" if report.fully_orientable else "false"
    return f"{report.d_min} {report.d_max} achievable:{{{achievable}}} fully_orientable:{flag}\n"
