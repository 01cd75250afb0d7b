import json
import subprocess
import sys

import pytest

from chordalkit import gen_complete_multipartite, gen_random_chordal, graph_from_edges
from chordalkit.cli import main
from chordalkit.io import certificate_from_dict, format_dimacs, format_edge_list
from chordalkit.recognition import verify_certificate


@pytest.fixture
def write(tmp_path):
    def _write(g_or_text, name="g.txt"):
        path = tmp_path / name
        text = g_or_text if isinstance(g_or_text, str) else format_edge_list(g_or_text)
        path.write_text(text)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


C4 = "0 1\n1 2\n2 3\n3 0\n"
K3 = "0 1\n1 2\n0 2\n"
P3 = "0 1\n1 2\n"


def test_check_c4(capsys, write):
    code, out, _ = run(capsys, "check", write(C4))
    assert code == 1
    assert out == "chordal: false\ncycle: 0 1 2 3\n"


def test_check_k3(capsys, write):
    code, out, _ = run(capsys, "check", write(K3))
    assert code == 0
    assert out == "chordal: true\nstrategy: all\nlevels 1\n0 1 2\n"


def test_check_malformed(capsys, write):
    code, _, err = run(capsys, "check", write("0 1\n1 x\n"))
    assert code == 2
    assert "line 2" in err


def test_check_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "check", str(tmp_path / "nope.txt"))
    assert code == 2


def test_check_bad_strategy(capsys, write):
    code, _, err = run(capsys, "check", "--strategy", "fastest", write(K3))
    assert code == 2 and "strategy" in err


@pytest.mark.parametrize("strategy", ["all", "single", "random:3"])
def test_check_json_round_trip(capsys, write, strategy):
    g = gen_random_chordal(25, 4, 9)
    path = write(g)
    code, out, _ = run(capsys, "check", "--output", "json", "--strategy", strategy, path)
    assert code == 0
    data = json.loads(out)
    assert data["chordal"] is True
    assert data["certificate"]["strategy"] == strategy
    assert verify_certificate(g, certificate_from_dict(data["certificate"]))


def test_check_json_negative(capsys, write):
    g = gen_complete_multipartite(3, 2)
    code, out, _ = run(capsys, "check", "--output", "json", write(g))
    data = json.loads(out)
    assert code == 1 and data["chordal"] is False
    assert verify_certificate(g, certificate_from_dict(data["certificate"]))


def test_check_dimacs(capsys, write):
    path = write("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n", "c4.col")
    code, out, _ = run(capsys, "check", path)
    assert code == 1 and out.endswith("cycle: 1 2 3 4\n")
    path = write("p edge 3 2\ne 1 2\ne 2 3\n", "p3.dat")
    assert run(capsys, "check", "--format", "dimacs", path)[0] == 0


def test_output_is_deterministic(capsys, write):
    path = write(gen_random_chordal(30, 5, 2))
    first = run(capsys, "check", "--output", "json", "--strategy", "random:5", path)
    second = run(capsys, "check", "--output", "json", "--strategy", "random:5", path)
    assert first == second


def test_peo(capsys, write):
    assert run(capsys, "peo", write(P3))[:2] == (0, "0 2 1\n")
    assert run(capsys, "peo", write("0 1\n"))[:2] == (0, "0 1\n")
    code, out, _ = run(capsys, "peo", write(C4))
    assert code == 1 and "cycle:" in out
    code, out, _ = run(capsys, "peo", "--output", "json", write(P3))
    assert json.loads(out) == {"chordal": True, "peo": [0, 2, 1]}


def test_color(capsys, write):
    code, out, _ = run(capsys, "color", write("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"))
    assert code == 0 and out.startswith("colors 4\n")
    code, out, _ = run(capsys, "color", write("0 1\n1 2\n2 3\n"))
    assert out == "colors 2\n0 0\n1 1\n2 0\n3 1\n"


def test_color_and_clique_fallback(capsys, write):
    c5 = "0 1\n1 2\n2 3\n3 4\n4 0\n"
    code, out, err = run(capsys, "color", "--output", "json", write(c5))
    assert code == 0 and json.loads(out)["colors"] == 3 and "exact" in err
    code, out, _ = run(capsys, "clique", "--output", "json", write(c5))
    assert code == 0 and json.loads(out)["omega"] == 2


def test_color_refuses_large_non_chordal(capsys, write):
    big = graph_from_edges(range(13), [(i, (i + 1) % 13) for i in range(13)])
    code, _, err = run(capsys, "color", write(big))
    assert code == 1 and "12" in err


def test_clique(capsys, write):
    code, out, _ = run(capsys, "clique", write("0 1\n1 2\n2 3\n"))
    assert (code, out) == (0, "omega 2\ncliques 3\n0 1\n1 2\n2 3\n")


def test_orient_spectrum(capsys, write):
    assert run(capsys, "orient", "spectrum", write(K3))[:2] == (
        0, "1 1 achievable:{1} fully_orientable:true\n")
    code, out, _ = run(capsys, "orient", "spectrum", "--threads", "2",
                       write(gen_complete_multipartite(3, 2)))
    assert code == 0 and out.endswith("fully_orientable:false\n")


def test_orient_spectrum_too_large(capsys, write):
    k7 = graph_from_edges(range(7), [(i, j) for i in range(7) for j in range(i + 1, 7)])
    assert run(capsys, "orient", "spectrum", write(k7))[0] == 2


def test_orient_analyze(capsys, write):
    code, out, _ = run(capsys, "orient", "analyze", "--order", "0 1 2 3", write("0 1\n1 2\n1 3\n"))
    assert code == 0 and out.startswith("d 0\n")
    code, out, _ = run(capsys, "orient", "analyze", "--order", "0,1,2", write(K3))
    assert out == "d 1\ndependent:\n0 -> 2\narcs:\n0 -> 1\n0 -> 2\n1 -> 2\n"
    assert run(capsys, "orient", "analyze", "--order", "0 1", write(K3))[0] == 2
    assert run(capsys, "orient", "analyze", write(K3))[0] == 2


def test_gen(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "cycle", "4")
    assert (code, out) == (0, "0 1\n0 3\n1 2\n2 3\n")
    code, out, _ = run(capsys, "gen", "kpartite", "3", "2")
    assert out == format_edge_list(gen_complete_multipartite(3, 2))
    a, b = tmp_path / "a.col", tmp_path / "b.col"
    assert run(capsys, "gen", "chordal", "20", "4", "--seed", "7", "-o", str(a))[0] == 0
    assert run(capsys, "gen", "chordal", "20", "4", "--seed", "7", "-o", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text() == format_dimacs(gen_random_chordal(20, 4, 7))


@pytest.mark.parametrize("argv", [
    ["gen", "cycle", "2"], ["gen", "random", "5", "1.5"], ["gen", "cycle"], ["gen", "path", "x"],
])
def test_gen_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "chordalkit" in err


def test_console_script(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text(C4)
    proc = subprocess.run([sys.executable, "-m", "chordalkit.cli", "check", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert proc.stdout == "chordal: false\ncycle: 0 1 2 3\n"
