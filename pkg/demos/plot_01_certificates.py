"""
Chordality with certificates
============================

Decide whether a graph is chordal and look at the evidence either way.
"""

from chordalkit import (
    gen_complete_multipartite,
    gen_cycle,
    gen_random_chordal,
    graph_from_edges,
    is_chordal,
    verify_certificate,
)
from chordalkit.nested import format_sequence
from chordalkit.recognition import format_cycle

# A "house": a square with a roof. The square has no chord, so it is not chordal.
house = graph_from_edges(range(5), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])
cert = is_chordal(house)
print("house chordal?", cert.chordal)
print(format_cycle(cert.cycle), end="")
print("witness checks out:", verify_certificate(house, cert))

# Add the diagonal and the same call returns a nested sequence instead.
house_with_chord = graph_from_edges(house.vertices, house.edges() + [(0, 2)])
cert = is_chordal(house_with_chord)
print("\nwith chord, chordal?", cert.chordal)
print(format_sequence(cert.sequence), end="")

# Each level drops only vertices whose neighbourhood is a clique. The last
# level is a disjoint union of cliques, where every vertex is perfect.
big = gen_random_chordal(40, 5, seed=1)
cert = is_chordal(big)
print("\n40-vertex random chordal graph:", len(cert.sequence), "levels,",
      "terminal level size", len(cert.sequence.terminal))

for name, g in [("C_6", gen_cycle(6)), ("octahedron", gen_complete_multipartite(3, 2))]:
    cert = is_chordal(g)
    print(f"{name}: chordless cycle {cert.cycle.vertices}")
