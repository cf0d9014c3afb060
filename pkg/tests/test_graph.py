from __future__ import annotations

import itertools

import pytest

from corpus import random_graph, random_matrix, rng
from geomgrid.errors import GraphFormatError, InvalidOrientation, NegativeCycle, NotAnEdge
from geomgrid.graph import (
    Orientation,
    SignedGraph,
    consistent_orientation,
    cycle_graph,
    disjoint_union,
    parity_report,
    parse_edge_list,
    path_graph,
    refine_graph,
    render_edge_list,
    row_column_graph,
)
from geomgrid.matching import matching_polynomial
from geomgrid.matrix import GridMatrix, double_refinement

NEG_EXAMPLE = GridMatrix.from_rows([[1, 0, -1], [1, -1, 1]])
POS_EXAMPLE = GridMatrix.from_rows([[-1, 0, -1], [1, -1, 1]])


def test_row_column_graph_of_worked_example():
    g = row_column_graph(NEG_EXAMPLE)
    assert g.vertices == ("c1", "c2", "c3", "r1", "r2")
    assert set(g.edges) == {
        ("c1", "r1", 1),
        ("c1", "r2", 1),
        ("c2", "r1", -1),
        ("c3", "r1", 1),
        ("c3", "r2", -1),
    }


def test_graph_validation():
    with pytest.raises(ValueError):
        SignedGraph.from_edges([("a", "a")])
    with pytest.raises(ValueError):
        SignedGraph.from_edges([("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        SignedGraph(("a", "b"), (("a", "b", 2),))
    g = path_graph(3)
    with pytest.raises(NotAnEdge):
        g.sign("p1", "p3")


def test_components_and_rank():
    g = disjoint_union(cycle_graph(4), path_graph(3))
    assert len(g.components()) == 2
    assert g.cycle_rank() == 1
    assert not g.is_forest() and g.is_bipartite()
    assert not cycle_graph(5).is_bipartite()


def _brute_negative_cycle(g: SignedGraph) -> bool:
    """Some simple cycle with an odd number of negative edges."""
    import networkx as nx

    for cyc in nx.simple_cycles(g.to_networkx()):
        if len(cyc) < 3:
            continue
        prod = 1
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            prod *= g.sign(a, b)
        if prod < 0:
            return True
    return False


def test_parity_against_cycle_enumeration():
    r = rng(1)
    for _ in range(300):
        g = random_graph(r, 8)
        rep = parity_report(g)
        assert rep.has_negative_cycle == _brute_negative_cycle(g)
        assert rep.has_cycle == (g.cycle_rank() > 0)
        assert rep.has_odd_cycle == (not g.is_bipartite())
        if rep.has_negative_cycle:
            w = rep.witness
            prod = 1
            for a, b in zip(w, w[1:] + w[:1]):
                prod *= g.sign(a, b)
            assert prod == -1 and len(set(w)) == len(w)
        else:
            for a, b, s in g.edges:
                assert rep.switching[a] * rep.switching[b] == s


def test_worked_example_negative_cycle():
    rep = parity_report(row_column_graph(NEG_EXAMPLE))
    assert rep.has_negative_cycle and rep.connected
    with pytest.raises(NegativeCycle) as info:
        consistent_orientation(NEG_EXAMPLE)
    assert len(info.value.cycle) == 4


def test_orientation_of_positive_matrix():
    o = consistent_orientation(POS_EXAMPLE)
    assert o.columns == (1, -1, 1) and o.rows == (1, -1)
    o.flipped().check(POS_EXAMPLE)
    with pytest.raises(InvalidOrientation):
        Orientation((1, 1, 1), (1, 1)).check(POS_EXAMPLE)


def test_refined_matrices_always_orientable():
    r = rng(2)
    for _ in range(200):
        m = random_matrix(r, 4, 4)
        d = double_refinement(m)
        assert not parity_report(row_column_graph(d)).has_negative_cycle
        Orientation.towards_centre(d.t, d.u).check(d)
        consistent_orientation(d).check(d)


def test_refine_graph_matches_double_refinement():
    r = rng(3)
    for _ in range(100):
        m = random_matrix(r, 4, 4)
        a = refine_graph(row_column_graph(m))
        b = row_column_graph(double_refinement(m))
        assert matching_polynomial(a) == matching_polynomial(b)
        assert sorted(len(c) for c in a.components()) == sorted(len(c) for c in b.components())


def test_refine_graph_component_structure():
    # no negative cycle: two copies; a negative cycle lifts to one doubled cycle
    pos = refine_graph(cycle_graph(4))
    assert sorted(len(c) for c in pos.components()) == [4, 4]
    neg = SignedGraph.from_edges([("v1", "v2", -1), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")])
    lifted = refine_graph(neg)
    assert [len(c) for c in lifted.components()] == [8]
    assert all(s == 1 for *_, s in lifted.edges)


def test_edge_list_round_trip():
    text = "a b\nb c -\n# comment\n\nc a +  # trailing\n"
    g = parse_edge_list(text)
    assert g.sign("b", "c") == -1 and g.sign("a", "c") == 1
    assert parse_edge_list(render_edge_list(g)) == g


@pytest.mark.parametrize("text", ["a\n", "a b c\n", "", "a a\n", "a b\nb a\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_unused_rows_and_columns_are_isolated():
    g = row_column_graph(GridMatrix.from_rows([[1, 0], [0, 0]]))
    assert g.n == 4 and g.m == 1
    assert len(g.components()) == 3
    assert sorted(itertools.chain.from_iterable(g.components())) == sorted(g.vertices)
