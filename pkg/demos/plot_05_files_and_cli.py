"""
Graph files and the command line
================================

Write generated graphs as edge lists and DIMACS, read them back, and run the
``chordalkit`` command on them.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from chordalkit import gen_complete_multipartite, gen_random_chordal
from chordalkit.io import format_edge_list, read_graph, write_graph

tmp = Path(tempfile.mkdtemp())
chordal = gen_random_chordal(12, 3, seed=7)
write_graph(chordal, tmp / "chordal.txt")
write_graph(gen_complete_multipartite(3, 2), tmp / "octahedron.col")

print((tmp / "octahedron.col").read_text())
assert read_graph(tmp / "chordal.txt") == chordal
print(format_edge_list(chordal))

for args in (
    ["check", str(tmp / "chordal.txt")],
    ["check", "--output", "json", str(tmp / "octahedron.col")],
    ["peo", str(tmp / "chordal.txt")],
    ["clique", str(tmp / "chordal.txt")],
    ["orient", "spectrum", str(tmp / "octahedron.col")],
):
    proc = subprocess.run([sys.executable, "-m", "chordalkit.cli", *args],
                          capture_output=True, text=True)
    print(f"$ chordalkit {' '.join(args)}   (exit {proc.returncode})")
    print(proc.stdout)
