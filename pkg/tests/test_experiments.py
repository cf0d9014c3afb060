from __future__ import annotations

import networkx as nx
import pytest

from geomgrid.errors import Disconnected, NotAnEdge, PreconditionViolated
from geomgrid.experiments import (
    CASE_A,
    CASE_B,
    ENDPATH,
    FAMILY_EDGE,
    FAMILY_SEPARATOR,
    INTERNAL_ACYCLIC,
    NEITHER,
    ON_CYCLE,
    classify_edge,
    cycle_table,
    decorated_cycle,
    family_graph,
    family_matrix,
    subdivision_case,
    negate_cell_sweep,
    run_subdivision,
    separating_vertices,
    squared_root,
    subdivide_edge,
    verdict,
)
from geomgrid.graph import SignedGraph, cycle_graph, path_graph, row_column_graph
from geomgrid.growth import geom_growth_rate
from geomgrid.matching import matching_root, spectral_radius
from geomgrid.matrix import GridMatrix


def h_graph(middle: int) -> SignedGraph:
    """Two cherries joined by a path with ``middle`` internal vertices."""
    spine = ["x"] + [f"m{k}" for k in range(middle)] + ["y"]
    edges = list(zip(spine, spine[1:])) + [("x", "a1"), ("x", "a2"), ("y", "b1"), ("y", "b2")]
    return SignedGraph.from_edges(edges)


def test_subdivide_keeps_parity():
    g = SignedGraph.from_edges([("a", "b", -1), ("b", "c"), ("c", "a")])
    h = subdivide_edge(g, "a", "b", 2)
    assert h.n == 5 and h.m == 5
    prod = 1
    for *_, s in h.edges:
        prod *= s
    assert prod == -1
    with pytest.raises(NotAnEdge):
        subdivide_edge(g, "a", "z")


def test_classify_edge():
    g = SignedGraph.from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e")])
    assert classify_edge(g, "a", "b") == ON_CYCLE
    assert classify_edge(g, "d", "e") == ENDPATH
    assert classify_edge(g, "c", "d") == ENDPATH
    h = h_graph(1)
    assert classify_edge(h, "x", "m0") == INTERNAL_ACYCLIC
    assert classify_edge(h, "x", "a1") == ENDPATH
    with pytest.raises(Disconnected):
        classify_edge(SignedGraph.from_edges([("a", "b"), ("c", "d")]), "a", "b")


def test_h_graph_internal_subdivision_preserves_rho():
    base = h_graph(1)
    longer = subdivide_edge(base, "x", "m0")
    assert spectral_radius(longer).value == pytest.approx(spectral_radius(base).value, abs=1e-12)
    assert spectral_radius(base).value == pytest.approx(2.0, abs=1e-12)


def test_endpath_subdivision_increases_lambda():
    g = SignedGraph.from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
    exp = run_subdivision(g, ("c", "d"), 3, bipartite=False)
    assert exp.edge_class == ENDPATH and exp.verdict == "increasing"


def test_internal_acyclic_subdivision_decreases_lambda():
    # not an H graph, so subdividing an internal tree edge lowers rho
    g = SignedGraph.from_edges([("x", "y"), ("x", "a1"), ("x", "a2"), ("x", "a3"), ("y", "b1"), ("y", "b2")])
    exp = run_subdivision(g, ("x", "y"), 3, bipartite=False)
    assert exp.edge_class == INTERNAL_ACYCLIC and exp.verdict == "decreasing"


def test_separating_vertices():
    g = decorated_cycle(2, 1, 1)
    assert separating_vertices(g, "v3", "v4") == ["v1", "v2"]


def test_subdivision_cases():
    assert subdivision_case(family_graph("increasing", 2), FAMILY_EDGE, FAMILY_SEPARATOR) == CASE_A
    assert subdivision_case(family_graph("constant", 2), FAMILY_EDGE, FAMILY_SEPARATOR) == NEITHER
    assert subdivision_case(family_graph("decreasing", 2), FAMILY_EDGE, FAMILY_SEPARATOR) == CASE_B
    g = family_graph("increasing", 2)
    with pytest.raises(PreconditionViolated):
        subdivision_case(g, FAMILY_EDGE, "v3")
    with pytest.raises(PreconditionViolated):
        subdivision_case(g, ("v1", "a1"), "v2")


@pytest.mark.parametrize("name", ["increasing", "constant", "decreasing"])
def test_family_matrices_match_graphs(name):
    for index, k in enumerate((2, 3, 4)):
        m = family_matrix(name, index)
        g = family_graph(name, k)
        assert nx.is_isomorphic(row_column_graph(m).to_networkx(), g.to_networkx())
        assert geom_growth_rate(m).growth_rate == pytest.approx(squared_root(g)[0], abs=1e-10)


def test_family_series():
    expected = {"increasing": "increasing", "constant": "constant", "decreasing": "decreasing"}
    for name, want in expected.items():
        exp = run_subdivision(family_graph(name, 2), FAMILY_EDGE, 2, u=FAMILY_SEPARATOR)
        assert exp.verdict == want
        base = family_graph(name, 2).n
        assert [h.n for h in exp.graphs] == [base, base + 2, base + 4]
        assert exp.row_column


def test_subdivision_series_equals_family_growth():
    exp = run_subdivision(family_graph("decreasing", 2), FAMILY_EDGE, 2)
    direct = [squared_root(family_graph("decreasing", k))[0] for k in (2, 3, 4)]
    assert exp.series == pytest.approx(direct, abs=1e-10)


def test_raw_mode_flags_non_bipartite():
    exp = run_subdivision(cycle_graph(4), ("v1", "v2"), 1, bipartite=False)
    assert not exp.row_column


def test_verdict():
    assert verdict([1, 2, 3]) == "increasing"
    assert verdict([3, 2, 1]) == "decreasing"
    assert verdict([1, 1 + 1e-12]) == "constant"
    assert verdict([1, 2, 1]) == "mixed"


def test_negate_cell_sweep_positive_cycle():
    m = GridMatrix.from_rows([[1, 1], [1, 1]])
    rows = negate_cell_sweep(m)
    assert len(rows) == 4
    assert all(r["on_cycle"] and r["new_negative_cycle"] and r["change"] == "increase" for r in rows)


def test_cycle_table_agrees():
    for row in cycle_table(12):
        assert row["positive_pipeline"] == pytest.approx(row["positive_formula"], abs=1e-9)
        assert row["negative_pipeline"] == pytest.approx(row["negative_formula"], abs=1e-9)


def test_cycle_lambda_is_path_rho():
    for n in (4, 6, 8):
        assert matching_root(cycle_graph(n)).value == pytest.approx(spectral_radius(path_graph(2 * n - 1)).value, abs=1e-12)
