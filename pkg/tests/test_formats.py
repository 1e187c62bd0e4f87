import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from knesertw.corpus import graph_corpus
from knesertw.exactsolver import exact_treewidth
from knesertw.formats import (
    FormatError,
    build_report,
    canonical_bytes,
    emit_gr,
    emit_td,
    parse_gr,
    parse_td,
    to_jsonable,
)
from knesertw.graph import Graph
from knesertw.kneser import build_graph, validate_params
from knesertw.tdecomp import TreeDecomposition
from knesertw.verify import check_theorem9

CORPUS = graph_corpus(20)


def test_gr_petersen_bytes():
    g = build_graph(validate_params(5, 2, 1)).graph
    text = emit_gr(g)
    lines = text.split("\n")
    assert lines[0] == "p tw 10 15"
    assert text.endswith("\n") and len(lines) == 17
    edges = [tuple(map(int, line.split())) for line in lines[1:-1]]
    assert edges == sorted(edges) and all(u < v for u, v in edges)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_gr_round_trip(name):
    g = CORPUS[name]
    assert parse_gr(emit_gr(g, ["corpus " + name])) == g


@pytest.mark.parametrize("name", ["K(5,2,1)", "K(6,3,2)", "grid_4x4", "gnp_3"])
def test_td_round_trip(name):
    g = CORPUS[name]
    td = exact_treewidth(g).certificate
    parsed, n = parse_td(emit_td(td, g.n))
    assert parsed == td and n == g.n


def test_td_header():
    td = TreeDecomposition(((0, 1), (1, 2)), ((0, 1),))
    assert emit_td(td, 3).splitlines() == ["s td 2 2 3", "b 1 1 2", "b 2 2 3", "1 2"]


@pytest.mark.parametrize(
    "text",
    [
        "",
        "p tw 3 2\n1 2\n",
        "p tw 3 1\n1 4\n",
        "p tw 3 1\n1 1\n",
        "1 2\np tw 3 1\n",
        "p td 3 1\n1 2\n",
        "p tw 3 1\n1 x\n",
        "p tw 3 1\np tw 3 1\n1 2\n",
    ],
)
def test_gr_rejects(text):
    with pytest.raises(FormatError):
        parse_gr(text)


@pytest.mark.parametrize(
    "text",
    [
        "b 1 1\n",
        "s td 2 1 2\nb 1 1\n",
        "s td 1 2 2\nb 1 1\n",
        "s td 1 1 2\nb 1 3\n",
        "s td 1 1 2\nb 1 1\nb 1 2\n",
    ],
)
def test_td_rejects(text):
    with pytest.raises(FormatError):
        parse_td(text)


def test_comments_ignored():
    g = parse_gr("c hello\np tw 2 1\nc mid\n1 2\n")
    assert g == Graph.from_edges(2, [(0, 1)])


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12).flatmap(
    lambda n: st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
        max_size=30,
    ).map(lambda es: Graph.from_edges(n, es))
))
def test_gr_round_trip_random(g):
    assert parse_gr(emit_gr(g)) == g


def test_report_is_exact_and_canonical():
    rep = build_report("0", ["x"], {"p": Fraction(2, 3)}, check_theorem9(36, 3, 2), None, {"a": 0.5})
    assert rep["params"]["p"] == "2/3"
    assert rep["checks"][2]["lhs"] == "34/3"
    assert rep["timings"] == {"a_ms": "500"}
    other = build_report("0", ["x"], {"p": Fraction(2, 3)}, check_theorem9(36, 3, 2), None, {"a": 9.0})
    assert canonical_bytes(rep) == canonical_bytes(other)
    assert b"timings" not in canonical_bytes(rep)
    json.loads(canonical_bytes(rep))


def test_no_floats_in_reports():
    with pytest.raises(TypeError):
        to_jsonable({"x": 0.1})
