"""
Dependent arcs and full orientability
=====================================

Enumerate every acyclic orientation of a graph and collect how many
dependent arcs each one has. Chordal graphs attain every count between the
extremes; the octahedron K_3(2) skips one.
"""

from chordalkit import (
    dependent_arcs,
    gen_complete,
    gen_complete_multipartite,
    gen_random_chordal,
    orient_by_ordering,
    orientation_spectrum,
)
from chordalkit.orientation import format_orientation, format_spectrum

k4 = gen_complete(4)
d = orient_by_ordering(k4, [2, 0, 3, 1])
print(format_orientation(d), end="")
print("dependent:", sorted(dependent_arcs(d)))

for name, g in [
    ("K_4", k4),
    ("random chordal", gen_random_chordal(8, 3, seed=4)),
    ("octahedron", gen_complete_multipartite(3, 2)),
]:
    report = orientation_spectrum(g)
    print(f"{name:>15} ({g.size:2d} edges, {report.acyclic_count:5d} acyclic): "
          + format_spectrum(report), end="")

octa = orientation_spectrum(gen_complete_multipartite(3, 2))
print("octahedron never has exactly", octa.missing(), "dependent arcs")
