import pytest
from hypothesis import given, settings, strategies as st

from knesertw.graph import Graph, complete_graph, path_graph
from knesertw.kneser import (
    brute_force_alpha,
    build_graph,
    max_degree_formula,
    pencil_independent_set,
    validate_params,
)
from knesertw.tdecomp import (
    TreeDecomposition,
    star_decomposition,
    upper_bound_formula,
    upper_bound_not_tight,
    validate_decomposition,
)
from knesertw.exactsolver import decomposition_from_ordering

PETERSEN = build_graph(validate_params(5, 2, 1)).graph


def test_trivial_decomposition():
    td = TreeDecomposition((tuple(range(10)),), ())
    rep = validate_decomposition(PETERSEN, td)
    assert rep.valid and rep.width == 9


def test_petersen_star():
    pencil = pencil_independent_set(validate_params(5, 2, 1), [1])
    td = star_decomposition(PETERSEN, pencil)
    rep = validate_decomposition(PETERSEN, td)
    assert rep.valid
    assert rep.width == max(3, 10 - 4 - 1) == 5
    assert td.bags[0] == tuple(v for v in range(10) if v not in pencil)


def test_k632_star():
    p = validate_params(6, 3, 2)
    g = build_graph(p).graph
    td = star_decomposition(g, pencil_independent_set(p, [1, 2]))
    rep = validate_decomposition(g, td)
    assert rep.valid and rep.width == 15


def test_empty_independent_set():
    td = star_decomposition(PETERSEN, [])
    assert td.num_nodes == 1
    assert validate_decomposition(PETERSEN, td).width == 9


def test_star_rejects_dependent_set():
    with pytest.raises(ValueError):
        star_decomposition(PETERSEN, [0, PETERSEN.neighbors(0)[0]])


def test_uncovered_edge():
    g = path_graph(3)
    td = TreeDecomposition(((0, 1), (1,), (2,)), ((0, 1), (1, 2)))
    rep = validate_decomposition(g, td)
    assert [v.kind for v in rep.violations] == ["uncovered edge"]
    assert rep.violations[0].detail == (1, 2)


def test_missing_vertex_and_disconnected_trace():
    g = Graph.from_edges(3, [(0, 1)])
    td = TreeDecomposition(((0, 1), (2,), (0,)), ((0, 1), (1, 2)))
    kinds = {v.kind for v in validate_decomposition(g, td).violations}
    assert kinds == {"disconnected trace"}
    td2 = TreeDecomposition(((0, 1),), ())
    assert [v.kind for v in validate_decomposition(g, td2).violations] == ["missing vertex"]


@pytest.mark.parametrize(
    "edges,nodes",
    [(((0, 1), (1, 2), (2, 0)), 3), (((0, 1),), 3), (((0, 5),), 2), (((0, 0),), 1)],
)
def test_structural_violations(edges, nodes):
    td = TreeDecomposition(tuple((0,) for _ in range(nodes)), edges)
    rep = validate_decomposition(complete_graph(1), td)
    assert rep.violations and all(v.kind == "structure" for v in rep.violations)


def test_upper_bound_formula():
    assert upper_bound_formula(validate_params(6, 3, 2)) == 15
    assert upper_bound_formula(validate_params(5, 2, 1)) == 5
    p = validate_params(5, 3, 2)
    assert upper_bound_formula(p) == 6
    assert upper_bound_not_tight(p)
    assert not upper_bound_not_tight(validate_params(6, 3, 2))


@pytest.mark.parametrize("params", [(5, 2, 1), (6, 2, 1), (5, 3, 2), (6, 3, 2), (6, 4, 3)])
def test_star_width_from_maximum_independent_set(params):
    p = validate_params(*params)
    g = build_graph(p).graph
    alpha, witness = brute_force_alpha(g)
    td = star_decomposition(g, witness)
    rep = validate_decomposition(g, td)
    assert rep.valid
    assert rep.width == max(max_degree_formula(p), g.n - alpha - 1)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_breaking_coverage_is_detected(data):
    # fill-in decompositions of Petersen; delete one vertex from every bag
    # that covers a chosen edge
    order = data.draw(st.permutations(range(10)))
    td = decomposition_from_ordering(PETERSEN, order)
    assert validate_decomposition(PETERSEN, td).valid
    u, v = data.draw(st.sampled_from(PETERSEN.edges()))
    victim = data.draw(st.sampled_from([u, v]))
    bags = [
        tuple(x for x in b if x != victim) if (u in b and v in b) else b for b in td.bags
    ]
    broken = TreeDecomposition(tuple(bags), td.tree_edges)
    assert validate_decomposition(PETERSEN, broken).violations
