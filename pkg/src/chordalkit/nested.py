"""Perfectly nested sequences: construction, verification and PEO extraction.

A perfectly nested sequence on ``G = (V, E)`` is a decreasing chain
``U_0 = V ⊇ U_1 ⊇ ...`` where every level has a perfect vertex and only
perfect vertices of ``G(U_n)`` are dropped when passing to ``U_{n+1}``. It is
stationary once ``P(U_n) = U_n``, i.e. the remaining graph is a disjoint union
of cliques. A finite graph is chordal exactly when such a stationary sequence
exists, so the sequence itself is a positive chordality certificate.

Sequences are stored finitely: ``levels`` stops at the first stationary level
and the mathematical sequence continues as the constant tail.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import InvalidSequence, NotAPermutation, ParseError
from .graph import Graph, connected_components, induced_subgraph
from .perfection import is_perfect_vertex, perfect_set
from .rng import SplitMix64

__all__ = [
    "AllPerfect",
    "SingleLowest",
    "RandomSubset",
    "RemovalStrategy",
    "parse_strategy",
    "strategy_name",
    "NestedSequence",
    "Stalled",
    "Condition",
    "Violation",
    "VerificationReport",
    "build_stationary_sequence",
    "verify_perfectly_nested",
    "peo_from_sequence",
    "verify_peo",
    "format_sequence",
    "parse_sequence",
]


# -- removal strategies ------------------------------------------------------

@dataclass(frozen=True)
class AllPerfect:
    """Drop every perfect vertex at each step (fewest levels)."""

    name = "all"

    def choose(self, perfect: list[int], rng: SplitMix64 | None) -> list[int]:
        return perfect


@dataclass(frozen=True)
class SingleLowest:
    """Drop exactly one perfect vertex, the one with the lowest label."""

    name = "single"

    def choose(self, perfect: list[int], rng: SplitMix64 | None) -> list[int]:
        return perfect[:1]


@dataclass(frozen=True)
class RandomSubset:
    """Drop a uniformly random non-empty subset of the perfect vertices."""

    seed: int = 0
    name = "random"

    def choose(self, perfect: list[int], rng: SplitMix64 | None) -> list[int]:
        # independent fair coins, rejecting the empty draw: uniform over
        # the 2^k - 1 non-empty subsets
        while True:
            picked = [x for x in perfect if rng.coin()]
            if picked:
                return picked


RemovalStrategy = Union[AllPerfect, SingleLowest, RandomSubset]


def parse_strategy(text: str) -> RemovalStrategy:
    """Parse ``all``, ``single`` or ``random:<seed>``."""
    text = text.strip().lower()
    if text == "all":
        return AllPerfect()
    if text == "single":
        return SingleLowest()
    if text.startswith("random"):
        _, _, seed = text.partition(":")
        try:
            return RandomSubset(int(seed) if seed else 0)
        except ValueError:
            raise ValueError(f"bad random seed in strategy {text!r}") from None
    raise ValueError(f"unknown strategy {text!r}; expected all, single or random:<seed>")


def strategy_name(strategy) -> str:
    if strategy is None:
        return "unknown"
    if isinstance(strategy, RandomSubset):
        return f"random:{strategy.seed}"
    return strategy.name


# -- sequence types ----------------------------------------------------------

@dataclass(frozen=True)
class NestedSequence:
    """Levels ``U_0, ..., U_k`` of a perfectly nested sequence.

    ``strategy`` records how the builder chose removal sets; it is ``None`` for
    sequences supplied from outside (parsed certificates, hand-written tests).
    """

    levels: tuple[frozenset[int], ...]
    strategy: RemovalStrategy | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(frozenset(u) for u in self.levels))
        if not self.levels:
            raise InvalidSequence("a nested sequence needs at least one level")

    @property
    def terminal(self) -> frozenset[int]:
        return self.levels[-1]

    def removals(self) -> list[frozenset[int]]:
        """The removal sets ``U_n \\ U_{n+1}`` for each non-terminal level."""
        return [u - v for u, v in zip(self.levels, self.levels[1:])]

    def __len__(self):
        return len(self.levels)


@dataclass(frozen=True)
class Stalled:
    """Builder outcome when some level has no perfect vertex at all."""

    core: frozenset[int]
    levels: tuple[frozenset[int], ...] = ()


def build_stationary_sequence(
    g: Graph, strategy: RemovalStrategy | None = None
) -> NestedSequence | Stalled:
    """Peel perfect vertices off ``g`` until the rest is a union of cliques.

    Starting from ``U = V``: stop with a :class:`NestedSequence` as soon as
    ``P(U) = U``; stop with :class:`Stalled` if ``P(U)`` is empty; otherwise
    remove the strategy's choice of perfect vertices and repeat. At most
    ``|V|`` rounds are needed since every round removes at least one vertex.

    >>> from chordalkit.generators import gen_path
    >>> build_stationary_sequence(gen_path(3)).levels
    (frozenset({0, 1, 2}), frozenset({1}))
    """
    strategy = AllPerfect() if strategy is None else strategy
    rng = SplitMix64(strategy.seed) if isinstance(strategy, RandomSubset) else None
    current = frozenset(g.vertices)
    levels = [current]
    while True:
        sub = induced_subgraph(g, current)
        perfect = sorted(x for x in sub.vertices if is_perfect_vertex(sub, x))
        if len(perfect) == len(current):
            return NestedSequence(tuple(levels), strategy)
        if not perfect:
            return Stalled(current, tuple(levels))
        current = current - frozenset(strategy.choose(perfect, rng))
        levels.append(current)


# -- verification ------------------------------------------------------------

class Condition(str, enum.Enum):
    NOT_START_V = "NotStartV"
    NOT_NESTED = "NotNested"
    EMPTY_PERFECT = "EmptyPerfect"
    REMOVAL_NOT_PERFECT = "RemovalNotPerfect"
    NOT_STATIONARY = "NotStationary"


class Violation(NamedTuple):
    level: int
    condition: Condition
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def _fmt(s: Iterable[int]) -> str:
    return "{" + ", ".join(map(str, sorted(s))) + "}"


def verify_perfectly_nested(
    g: Graph, seq: NestedSequence | Sequence[Iterable[int]]
) -> VerificationReport:
    """Check every defining condition of a stationary perfectly nested sequence.

    All violations are collected rather than stopping at the first. The
    empty graph with the single level ``[∅]`` is accepted as the degenerate
    stationary case.
    """
    levels = seq.levels if isinstance(seq, NestedSequence) else tuple(map(frozenset, seq))
    if not levels:
        raise InvalidSequence("a nested sequence needs at least one level")
    for u in levels:
        g.check_subset(u)

    vertex_set = frozenset(g.vertices)
    out: list[Violation] = []
    if levels[0] != vertex_set:
        out.append(Violation(0, Condition.NOT_START_V,
                             f"U_0 = {_fmt(levels[0])} differs from V = {_fmt(vertex_set)}"))

    perfect = [perfect_set(g, u) for u in levels]
    last = len(levels) - 1
    for n in range(last):
        u, v = levels[n], levels[n + 1]
        if not v <= u:
            out.append(Violation(n, Condition.NOT_NESTED,
                                 f"U_{n + 1} has extra vertices {_fmt(v - u)}"))
        if not perfect[n]:
            out.append(Violation(n, Condition.EMPTY_PERFECT, f"P(U_{n}) is empty"))
        bad = (u - v) - perfect[n]
        if bad:
            out.append(Violation(n, Condition.REMOVAL_NOT_PERFECT,
                                 f"removed {_fmt(bad)} not in P(U_{n}) = {_fmt(perfect[n])}"))

    terminal = levels[last]
    if perfect[last] != terminal:
        out.append(Violation(last, Condition.NOT_STATIONARY,
                             f"P(U_{last}) = {_fmt(perfect[last])} differs from U_{last}"))
    elif not terminal and vertex_set:
        # the constant tail would have P(U_n) = ∅ forever
        out.append(Violation(last, Condition.EMPTY_PERFECT,
                             f"terminal level U_{last} is empty"))
    return VerificationReport(tuple(out))


# -- perfect elimination orderings -------------------------------------------

def _check_permutation(g: Graph, order: Sequence[int]) -> None:
    if len(order) != len(g) or set(order) != set(g.vertices):
        raise NotAPermutation(
            f"ordering of length {len(order)} is not a permutation of the {len(g)} vertices"
        )


def verify_peo(g: Graph, order: Sequence[int]) -> bool:
    """True iff each ``order[i]`` is perfect among ``order[i:]``."""
    order = list(order)
    _check_permutation(g, order)
    position = {x: i for i, x in enumerate(order)}
    for i, x in enumerate(order):
        later = [y for y in g.neighbors(x) if position[y] > i]
        for j, y in enumerate(later):
            ny = g.neighbors(y)
            for z in later[j + 1:]:
                if z not in ny:
                    return False
    return True


def peo_from_sequence(g: Graph, seq: NestedSequence) -> list[int]:
    """Read a perfect elimination ordering off a verified nested sequence.

    Removal batches come first, level by level and ascending within a batch;
    the terminal level follows component by component (each component is a
    clique, so any internal order works and ascending is used).
    """
    report = verify_perfectly_nested(g, seq)
    if not report.ok:
        raise InvalidSequence("; ".join(v.detail for v in report.violations))
    order: list[int] = []
    for batch in seq.removals():
        order.extend(sorted(batch))
    for comp in connected_components(induced_subgraph(g, seq.terminal)):
        order.extend(sorted(comp))
    return order


# -- text serialization ------------------------------------------------------

def format_sequence(seq: NestedSequence) -> str:
    """``levels k+1`` followed by one ascending line per level."""
    lines = [f"levels {len(seq.levels)}"]
    lines.extend(" ".join(map(str, sorted(u))) for u in seq.levels)
    return "\n".join(lines) + "\n"


def parse_sequence(text: str) -> NestedSequence:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty certificate", 1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "levels":
        raise ParseError("expected 'levels <count>'", 1)
    try:
        count = int(head[1])
    except ValueError:
        raise ParseError(f"bad level count {head[1]!r}", 1) from None
    if count < 1 or len(lines) < count + 1:
        raise ParseError(f"expected {count} level lines", len(lines))
    levels = []
    for lineno, line in enumerate(lines[1:count + 1], start=2):
        try:
            levels.append(frozenset(int(t) for t in line.split()))
        except ValueError:
            raise ParseError(f"bad vertex label in {line!r}", lineno) from None
    return NestedSequence(tuple(levels))
