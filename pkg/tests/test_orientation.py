import itertools

import pytest

from chordalkit import (
    CyclicInput,
    NotAPermutation,
    Orientation,
    TooLarge,
    dependent_arcs,
    dependent_arcs_by_reversal,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_path,
    gen_random_chordal,
    gen_star,
    is_acyclic,
    orient_by_ordering,
    orientation_spectrum,
)
from chordalkit.orientation import (
    SpectrumReport,
    format_orientation,
    format_spectrum,
    iter_orientations,
    spectrum_by_enumeration,
)

from corpus import mixed_graphs

A, B, C = 0, 1, 2


def test_orient_examples():
    assert orient_by_ordering(gen_path(3), [A, B, C]).arcs == {(A, B), (B, C)}
    assert orient_by_ordering(gen_complete(3), [A, B, C]).arcs == {(A, B), (A, C), (B, C)}
    with pytest.raises(NotAPermutation):
        orient_by_ordering(gen_path(3), [A, B])


def test_orientation_must_cover_every_edge_once():
    with pytest.raises(ValueError):
        Orientation(gen_path(3), frozenset({(0, 1)}))
    with pytest.raises(ValueError):
        Orientation(gen_path(2), frozenset({(0, 1), (1, 0)}))
    with pytest.raises(ValueError):
        Orientation(gen_path(3), frozenset({(0, 1), (1, 2), (0, 2)}))


def test_is_acyclic_examples():
    tri = gen_complete(3)
    assert not is_acyclic(Orientation(tri, frozenset({(A, B), (B, C), (C, A)})))
    assert is_acyclic(Orientation(gen_path(2), frozenset({(1, 0)})))


def test_ordering_orientations_are_topological():
    for g in mixed_graphs(60, 2, 8, seed=1):
        for order in itertools.islice(itertools.permutations(g.vertices), 30):
            d = orient_by_ordering(g, order)
            assert is_acyclic(d)
            pos = {x: i for i, x in enumerate(order)}
            assert all(pos[u] < pos[v] for u, v in d.arcs)


def test_dependent_arcs_examples():
    tri = orient_by_ordering(gen_complete(3), [A, B, C])
    assert dependent_arcs(tri) == {(A, C)}
    assert dependent_arcs(orient_by_ordering(gen_path(3), [A, B, C])) == frozenset()


def test_dependent_arcs_rejects_cycles():
    d = Orientation(gen_complete(3), frozenset({(A, B), (B, C), (C, A)}))
    with pytest.raises(CyclicInput):
        dependent_arcs(d)


def test_octahedron_both_criteria():
    g = gen_complete_multipartite(3, 2)
    seen = 0
    for d in iter_orientations(g):
        if is_acyclic(d):
            assert dependent_arcs(d, cross_check=False) == dependent_arcs_by_reversal(d)
            seen += 1
    assert seen == 426


def test_spectrum_examples():
    k3 = orientation_spectrum(gen_complete(3))
    assert k3.achievable_d == (1,) and k3.acyclic_count == 6 and k3.fully_orientable
    for g in [gen_path(n) for n in range(1, 7)] + [gen_star(n) for n in range(1, 7)]:
        report = spectrum_by_enumeration(g)
        assert report.achievable_d == (0,)
        assert orientation_spectrum(g) == report


def test_spectrum_routes_agree():
    for g in mixed_graphs(80, 2, 7, seed=6):
        if g.size <= 11:
            assert orientation_spectrum(g) == spectrum_by_enumeration(g)


def test_threads_do_not_change_result():
    g = gen_random_chordal(9, 4, 16)
    assert g.size == 20  # 2^20 assignments: 32 blocks
    assert orientation_spectrum(g, threads=4) == orientation_spectrum(g)


def test_acyclic_count_matches_chromatic_polynomial():
    # |P(C_n, -1)| = 2^n - 2 acyclic orientations of the n-cycle
    for n in range(3, 9):
        assert orientation_spectrum(gen_cycle(n)).acyclic_count == 2 ** n - 2


def test_spectrum_guard():
    with pytest.raises(TooLarge):
        orientation_spectrum(gen_complete(7))


def test_spectrum_report_properties():
    r = SpectrumReport((4, 6, 7))
    assert (r.d_min, r.d_max, r.fully_orientable, r.missing()) == (4, 7, False, (5,))


def test_formats():
    d = orient_by_ordering(gen_complete(3), [2, 0, 1])
    assert format_orientation(d) == "0 -> 1\n2 -> 0\n2 -> 1\n"
    assert format_spectrum(SpectrumReport((1,))) == "1 1 achievable:{1} fully_orientable:true\n"
    assert format_spectrum(SpectrumReport((4, 6, 7))) == "4 7 achievable:{4,6,7} fully_orientable:false\n"
