import itertools

from hypothesis import given, strategies as st

from chordalkit import (
    brute_force_chordal,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_path,
    graph_from_edges,
    induced_subgraph,
    is_perfect_vertex,
    perfect_set,
)

from corpus import chordal_graphs, mixed_graphs
from test_graph import graphs


def test_isolated_vertex_is_perfect():
    assert is_perfect_vertex(graph_from_edges([3, 4], []), 3)


def test_p3_centre_not_perfect():
    assert not is_perfect_vertex(gen_path(3), 1)


def test_complete_graph_all_perfect():
    for n in range(1, 6):
        g = gen_complete(n)
        assert all(is_perfect_vertex(g, x) for x in g.vertices)


def test_perfect_sets():
    assert perfect_set(gen_cycle(4)) == frozenset()
    assert perfect_set(gen_path(4)) == {0, 3}
    assert perfect_set(gen_path(4), [1, 2, 3]) == {1, 3}


def test_octahedron_has_no_perfect_vertex():
    g = gen_complete_multipartite(3, 2)
    # oracle: a vertex is perfect iff no two of its neighbours are non-adjacent
    for x in g.vertices:
        nbrs = g.neighbors(x)
        bad = [(y, z) for y, z in itertools.combinations(sorted(nbrs), 2) if not g.has_edge(y, z)]
        assert bad, x
    assert perfect_set(g) == frozenset()


@given(graphs(), st.data())
def test_perfection_is_local(g, data):
    if not len(g):
        return
    x = data.draw(st.sampled_from(g.vertices))
    closed = g.neighbors(x) | {x}
    # a new vertex joined only to vertices outside the closed neighbourhood
    far = [y for y in g.vertices if y not in closed]
    attach = data.draw(st.sets(st.sampled_from(far))) if far else set()
    new = max(g.vertices) + 1
    bigger = graph_from_edges(list(g.vertices) + [new], g.edges() + [(new, y) for y in attach])
    assert is_perfect_vertex(bigger, x) == is_perfect_vertex(g, x)


@given(graphs(), st.data())
def test_perfect_set_definition(g, data):
    a = data.draw(st.sets(st.sampled_from(g.vertices))) if len(g) else set()
    sub = induced_subgraph(g, a)
    assert perfect_set(g, a) == {x for x in a if is_perfect_vertex(sub, x)}


def test_chordal_graphs_have_perfect_vertices():
    corpus = chordal_graphs(300, 1, 25) + [g for g in mixed_graphs(300, 1, 10) if len(g)]
    for g in corpus:
        if len(g) <= 12 and not brute_force_chordal(g):
            continue
        assert perfect_set(g), g.edges()
