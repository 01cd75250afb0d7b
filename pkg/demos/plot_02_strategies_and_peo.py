"""
Removal strategies and elimination orderings
============================================

The builder may drop any non-empty set of perfect vertices at each step.
Here the three strategies are compared, and a perfect elimination ordering
is read off the one-vertex-at-a-time sequence.
"""

from chordalkit import (
    AllPerfect,
    RandomSubset,
    SingleLowest,
    build_stationary_sequence,
    gen_random_chordal,
    gen_random_graph,
    peo_from_sequence,
    verify_peo,
    verify_perfectly_nested,
)

g = gen_random_chordal(25, 4, seed=3)
for strategy in (AllPerfect(), SingleLowest(), RandomSubset(seed=9)):
    seq = build_stationary_sequence(g, strategy)
    sizes = [len(r) for r in seq.removals()]
    print(f"{strategy.name:>7}: {len(seq)} levels, removal sizes {sizes}")
    assert verify_perfectly_nested(g, seq).ok

seq = build_stationary_sequence(g, SingleLowest())
order = peo_from_sequence(g, seq)
print("\nelimination ordering:", order)
print("is a PEO:", verify_peo(g, order))

# On a non-chordal graph every strategy stalls, on the same kind of core.
h = gen_random_graph(12, 0.4, seed=5)
for strategy in (AllPerfect(), SingleLowest(), RandomSubset(seed=1)):
    out = build_stationary_sequence(h, strategy)
    print(f"{strategy.name:>7} on G(12, 0.4): stalled with core of size {len(out.core)}")
