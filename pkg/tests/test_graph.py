from itertools import combinations, permutations

import pytest
from hypothesis import given

from conftest import graphs
from powdom.errors import InvalidParameterError, InvalidVertexError
from powdom.families import complete, complete_bipartite, cycle, path, star, wheel
from powdom.graph import (
    Graph,
    closed_neighborhood,
    components,
    induced_subgraph,
    is_bipartite,
    is_connected,
    open_neighborhood,
    universal_vertices,
)


def test_open_neighborhood_examples():
    assert open_neighborhood(path(3), 1) == {0, 2}
    assert open_neighborhood(complete(4), 0) == {1, 2, 3}
    assert open_neighborhood(star(3), 2) == {0}


def test_open_neighborhood_rejects_bad_vertex():
    with pytest.raises(InvalidVertexError):
        open_neighborhood(path(3), 3)
    with pytest.raises(InvalidVertexError):
        open_neighborhood(path(3), -1)


def test_closed_neighborhood_examples():
    assert closed_neighborhood(cycle(4), {0}) == {3, 0, 1}
    assert closed_neighborhood(cycle(4), set()) == frozenset()
    assert closed_neighborhood(complete_bipartite(2, 3), {2}) == {0, 1, 2}
    with pytest.raises(InvalidVertexError):
        closed_neighborhood(cycle(4), {4})


def test_induced_subgraph_examples():
    assert induced_subgraph(complete(4), {0, 1, 2}) == complete(3)
    assert induced_subgraph(cycle(5), {0, 1, 2}) == path(3)
    two = induced_subgraph(cycle(4), {0, 2})
    assert (two.n, two.m) == (2, 0)


def test_induced_subgraph_relabels_by_increasing_id():
    sub = induced_subgraph(cycle(6), {5, 0, 3, 4})
    # 0->0, 3->1, 4->2, 5->3; C6 edges among them: 3-4, 4-5, 5-0
    assert sub.edges() == [(0, 3), (1, 2), (2, 3)]


def test_is_connected_examples():
    assert is_connected(path(5))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert not is_connected(Graph(2))
    assert is_connected(Graph(1))
    assert not is_connected(Graph(0))


def test_universal_vertices_examples():
    assert universal_vertices(wheel(4)) == {4}
    assert universal_vertices(complete(3)) == {0, 1, 2}
    assert universal_vertices(cycle(5)) == frozenset()


def test_is_bipartite_examples():
    assert is_bipartite(cycle(6))
    assert not is_bipartite(cycle(3))
    assert is_bipartite(complete_bipartite(2, 3))


def test_graph_rejects_loops_and_bad_ids():
    with pytest.raises(InvalidParameterError):
        Graph(3, [(1, 1)])
    with pytest.raises(InvalidVertexError):
        Graph(3, [(0, 3)])
    with pytest.raises(InvalidParameterError):
        Graph(-1)


def test_duplicate_edges_collapse():
    G = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.m == 1 and G.edges() == [(0, 1)]


def test_components():
    assert components(Graph(5, [(0, 1), (3, 4)])) == [{0, 1}, {2}, {3, 4}]


@given(graphs(min_n=1, max_n=7))
def test_neighborhood_identities(G):
    for v in G.vertices():
        closed = closed_neighborhood(G, {v})
        assert v in closed
        assert open_neighborhood(G, v) == closed - {v}
        assert v not in open_neighborhood(G, v)


@given(graphs(min_n=0, max_n=7))
def test_symmetry_and_degree_sum(G):
    for u in G.vertices():
        for v in G.vertices():
            assert G.has_edge(u, v) == G.has_edge(v, u)
        assert not G.has_edge(u, u)
    assert sum(G.degree(v) for v in G.vertices()) == 2 * G.m


@given(graphs(min_n=0, max_n=7))
def test_induced_on_everything_is_identity(G):
    assert induced_subgraph(G, range(G.n)) == G


def _has_odd_cycle(G: Graph) -> bool:
    # enumerate simple cycles of every odd length directly
    for size in range(3, G.n + 1, 2):
        for verts in combinations(range(G.n), size):
            first, *rest = verts
            for perm in permutations(rest):
                cyc = (first, *perm)
                if all(G.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    return True
    return False


@given(graphs(min_n=1, max_n=6))
def test_bipartite_iff_no_odd_cycle(G):
    assert is_bipartite(G) == (not _has_odd_cycle(G))
