import pytest

from chordalkit import (
    BadProbability,
    BadSize,
    brute_force_chordal,
    connected_components,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_path,
    gen_random_chordal,
    gen_random_graph,
    gen_star,
    is_chordal,
    verify_peo,
)
from chordalkit.rng import SplitMix64


def test_splitmix_reference_vector():
    # published SplitMix64 output for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_rng_helpers():
    rng = SplitMix64(3)
    draws = [rng.below(6) for _ in range(600)]
    assert set(draws) == set(range(6))
    assert all(0.0 <= rng.random() < 1.0 for _ in range(100))
    picked = rng.sample(range(10), 4)
    assert len(set(picked)) == 4
    with pytest.raises(ValueError):
        rng.below(0)


def test_named_families():
    c4 = gen_cycle(4)
    assert c4.size == 4 and not is_chordal(c4).chordal
    assert is_chordal(gen_complete(5)).chordal
    assert gen_path(2).edges() == [(0, 1)]
    assert gen_star(4).edges() == [(0, 1), (0, 2), (0, 3)]


@pytest.mark.parametrize("call", [
    lambda: gen_path(0), lambda: gen_cycle(2), lambda: gen_complete(0), lambda: gen_star(0),
    lambda: gen_complete_multipartite(0, 2), lambda: gen_random_chordal(0, 1, 0),
    lambda: gen_random_chordal(3, 0, 0), lambda: gen_random_graph(-1, 0.5, 0),
])
def test_bad_sizes(call):
    with pytest.raises(BadSize):
        call()


def test_bad_probability():
    with pytest.raises(BadProbability):
        gen_random_graph(4, 1.5, 0)


def test_multipartite():
    octa = gen_complete_multipartite(3, 2)
    assert (octa.order, octa.size) == (6, 12)
    assert gen_complete_multipartite(2, 1) == gen_complete(2)
    assert gen_complete_multipartite(1, 4).size == 0


def test_random_chordal_small_cases():
    assert gen_random_chordal(1, 3, 5).vertices == (0,)
    for seed in range(30):
        g = gen_random_chordal(15, 1, seed)
        assert g.size == 14 and len(connected_components(g)) == 1  # a tree


def test_random_chordal_is_chordal():
    for seed in range(200):
        g = gen_random_chordal(2 + seed % 40, 1 + seed % 7, seed)
        assert is_chordal(g).chordal
        assert verify_peo(g, list(g.vertices)[::-1])
        if len(g) <= 12:
            assert brute_force_chordal(g)


def test_random_graph_extremes():
    assert gen_random_graph(7, 0.0, 1).size == 0
    assert gen_random_graph(7, 1.0, 1) == gen_complete(7)
    assert gen_random_graph(0, 0.5, 1).order == 0


def test_generators_are_deterministic():
    assert gen_random_graph(6, 0.5, 42) == gen_random_graph(6, 0.5, 42)
    assert gen_random_chordal(20, 4, 7) == gen_random_chordal(20, 4, 7)
    assert gen_random_chordal(20, 4, 7) != gen_random_chordal(20, 4, 8)


def test_frozen_outputs():
    # regression values: any change to the PRNG or draw order shows up here
    assert gen_random_graph(6, 0.5, 42).edges() == FROZEN_RANDOM
    assert gen_random_chordal(8, 3, 7).edges() == FROZEN_CHORDAL


FROZEN_RANDOM = [(0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (2, 4), (2, 5)]
FROZEN_CHORDAL = [
    (0, 1), (0, 2), (0, 3), (0, 5), (0, 6), (1, 2), (1, 4), (1, 5), (2, 5), (6, 7),
]
