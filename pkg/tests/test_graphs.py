from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from degreg.graphs import (
    Component,
    GraphShape,
    SimpleGraph,
    common_neighbor_graph,
    complete_graph,
    edge_graph,
    fingerprint,
    graph_shape,
)
from degreg.standard import octahedron, tetrahedron


def _cycle_edges(seq):
    return {tuple(sorted((a, b))) for a, b in zip(seq, seq[1:] + seq[:1])}


def test_simple_graph_rejects_loops():
    with pytest.raises(ValueError):
        SimpleGraph(3, [(1, 1)])
    with pytest.raises(ValueError):
        SimpleGraph(3, [(0, 5)])
    assert SimpleGraph(3, [(0, 1), (1, 0)]).edges == {(0, 1)}


def test_edge_graphs(catalog):
    assert edge_graph(tetrahedron()) == complete_graph(4)
    oct_eg = edge_graph(octahedron())
    assert len(oct_eg.edges) == 12
    missing = set(complete_graph(6).edges) - oct_eg.edges
    assert len(missing) == 3 and len({v for e in missing for v in e}) == 6
    for e in catalog.values():
        g = edge_graph(e.complex)
        assert g.n == 12 and len(g.edges) == 42


def test_common_neighbor_small():
    k4 = complete_graph(4)
    assert common_neighbor_graph(k4, 2) == k4
    assert not common_neighbor_graph(k4, 1).edges
    path = SimpleGraph(3, [(0, 1), (1, 2)])
    # adjacency of u, v is irrelevant; only the count of common neighbours
    assert common_neighbor_graph(path, 1).edges == {(0, 2)}
    assert common_neighbor_graph(path, 0).edges == {(0, 1), (1, 2)}


def test_shapes_of_simple_graphs():
    assert str(graph_shape(SimpleGraph(5))) == "5×I"
    assert str(graph_shape(SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))) == "C4"
    assert str(graph_shape(SimpleGraph(5, [(0, 1), (1, 2)]))) == "P3+2×I"
    star = graph_shape(SimpleGraph(4, [(0, 1), (0, 2), (0, 3)]))
    assert star.components[0].kind == "X"


def test_shape_parse_roundtrip():
    for text in ("C12", "12×I", "P3+9×I", "3×P2+6×I", "4×P2+4×I", "2×C6", "3×C4"):
        assert str(GraphShape.parse(text)) == text
    with pytest.raises(ValueError):
        GraphShape.parse("Q5")


def test_catalog_g2_g5_shapes(catalog):
    g = {name: fingerprint(e.complex) for name, e in catalog.items()}
    assert str(g["N1"][2]) == "C12"
    assert str(g["N2"][2]) == "12×I"
    assert str(g["N3"][2]) == "C12"
    assert str(g["N4"][2]) == "P3+9×I"
    assert str(g["N5"][2]) == "3×P2+6×I"
    assert str(g["N6"][2]) == "4×P2+4×I"
    assert str(g["N1"][5]) == "2×C6"
    assert str(g["N3"][5]) == "2×C6"
    assert str(g["N5"][5]) == "3×C4"
    assert str(g["N4"][6]) == "2×P2+8×I"
    # N1 and N3 are not told apart by any G_n
    assert g["N1"] == g["N3"]


def test_reference_labelled_edge_sets(reference_labelled):
    def e(name, k):
        return common_neighbor_graph(edge_graph(reference_labelled[name]), k).edges

    assert e("N1", 2) == _cycle_edges(list(range(12)))
    assert e("N1", 5) == _cycle_edges([1, 3, 5, 7, 9, 11]) | _cycle_edges([0, 2, 4, 6, 8, 10])
    assert e("N3", 2) == _cycle_edges([0, 11, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9])
    assert e("N2", 2) == set()
    assert e("N4", 2) == {(9, 11), (10, 11)}
    assert e("N4", 6) == {(3, 4), (9, 10)}
    assert e("N4", 5) == {
        (1, 11), (2, 11), (3, 11), (4, 11), (0, 3), (0, 4), (0, 7), (0, 8),
        (1, 2), (7, 8), (5, 9), (5, 10), (6, 9), (6, 10),
    }
    assert e("N5", 2) == {(0, 2), (4, 6), (8, 10)}
    assert e("N5", 6) == {(0, 10), (2, 4), (6, 8)}
    assert e("N5", 5) == _cycle_edges([0, 3, 10, 5]) | _cycle_edges([4, 7, 2, 9]) | _cycle_edges([8, 11, 6, 1])
    assert e("N6", 2) == {(5, 8), (6, 7), (9, 11), (0, 10)}
    assert e("N6", 3) == {
        (0, 1), (1, 9), (1, 5), (1, 7), (3, 5), (3, 7), (3, 10), (3, 11),
        (2, 10), (2, 11), (2, 6), (2, 8), (4, 6), (4, 8), (0, 4), (4, 9),
    }


# -- properties -------------------------------------------------------------

graphs = st.integers(min_value=1, max_value=9).flatmap(
    lambda n: st.builds(
        lambda es: SimpleGraph(n, es),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1])),
    )
)


@given(graphs, st.data())
def test_common_neighbor_commutes_with_relabelling(G, data):
    perm = data.draw(st.permutations(range(G.n)))
    for k in range(G.n):
        assert common_neighbor_graph(G.relabel(perm), k) == common_neighbor_graph(G, k).relabel(perm)


@given(graphs)
def test_every_pair_in_exactly_one_gn(G):
    total = sum(len(common_neighbor_graph(G, k).edges) for k in range(G.n + 1))
    assert total == G.n * (G.n - 1) // 2


@given(graphs, st.data())
def test_shape_invariant_under_relabelling(G, data):
    perm = data.draw(st.permutations(range(G.n)))
    assert graph_shape(G.relabel(perm)) == graph_shape(G)
    assert graph_shape(G).n == G.n


@given(graphs, graphs)
def test_shape_certificate_agrees_with_networkx(G, H):
    # equal shapes iff isomorphic, for graphs small enough for exact certificates
    def nxg(g):
        x = nx.Graph()
        x.add_nodes_from(g.vertices)
        x.add_edges_from(g.edges)
        return x

    assert (graph_shape(G) == graph_shape(H)) == nx.is_isomorphic(nxg(G), nxg(H))


def test_component_rendering():
    assert str(Component("P", 2)) == "P2"
    assert str(GraphShape.of([Component("I", 1)] * 2 + [Component("C", 3)])) == "C3+2×I"


def test_fingerprint_length():
    K = octahedron()
    fp = fingerprint(K)
    assert len(fp) == K.n - 1
    pairs = sum(len(common_neighbor_graph(edge_graph(K), k).edges) for k in range(K.n - 1))
    assert pairs == len(list(combinations(range(K.n), 2)))
