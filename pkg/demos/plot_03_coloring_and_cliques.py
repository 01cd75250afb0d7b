"""
Coloring and cliques on chordal graphs
======================================

Along a perfect elimination ordering the clique number, all maximal cliques
and an optimal coloring come out directly. A 5-cycle shows that the
chromatic number can exceed the clique number when the graph is not chordal.
"""

from chordalkit import (
    build_stationary_sequence,
    check_r1,
    clique_number_chordal,
    gen_cycle,
    gen_random_chordal,
    greedy_coloring,
    maximal_cliques_chordal,
    peo_from_sequence,
)

g = gen_random_chordal(30, 5, seed=11)
peo = peo_from_sequence(g, build_stationary_sequence(g))

omega = clique_number_chordal(g, peo)
cliques = maximal_cliques_chordal(g, peo)
coloring = greedy_coloring(g, peo[::-1])

print(f"{len(g)} vertices, {g.size} edges")
print(f"clique number {omega}, {len(cliques)} maximal cliques (at most {len(g)})")
print(f"greedy coloring on the reversed ordering uses {coloring.color_count} colors")
for c, members in enumerate(coloring.classes()):
    print(f"  color {c}: {members}")

small = gen_random_chordal(10, 4, seed=2)
print("\nexact check on a 10-vertex chordal graph:", check_r1(small))
print("exact check on C_5:", check_r1(gen_cycle(5)))
