from math import comb

import pytest
from hypothesis import given, settings

from conftest import graphs
from weightgraph.corpus import corpus
from weightgraph.criteria import (
    CHECK_NAMES,
    bound_table,
    check_weight_graph,
    f,
    f_difference,
    f_step,
    min_edges,
    naive_min_edges,
    power_fixed,
)
from weightgraph.errors import DomainError
from weightgraph.graph import SimpleGraph, diameter, is_connected, power
from weightgraph.lie import validate, weight_system_of
from weightgraph.weights import max_weight_sums, weight_graph


@pytest.mark.parametrize("p, expected", [(6, 5), (1, 0), (3, 2)])
def test_naive_min_edges(p, expected):
    assert naive_min_edges(p) == expected


@pytest.mark.parametrize("p, expected", [(6, 9), (3, 2), (4, 4)])
def test_min_edges(p, expected):
    assert min_edges(p) == expected


def test_f_values():
    assert f(3) == 0
    assert f(4) == 1
    assert f(8) == 28 - 7 - 12 == 9
    with pytest.raises(DomainError):
        f(2)


def test_f_difference_values():
    assert f_difference(3, 1) == f(4) - f(3) == 1
    assert f_difference(8, 1) == 3 == f(9) - f(8)
    with pytest.raises(DomainError):
        f_difference(2, 1)
    with pytest.raises(DomainError):
        f_difference(3, 0)


def test_f_difference_closed_form_grid():
    for p in range(3, 41):
        for k in range(1, 21):
            assert f_difference(p, k) == f(p + k) - f(p)


def test_f_recurrence():
    for p in range(3, 64):
        assert f(p + 1) - f(p) == p - 1 - p // 2 == f_step(p)


def test_f_positive_and_grows_past_p_plus_1():
    for p in range(4, 65):
        assert f(p) > 0
    for p in range(8, 65):
        assert f(p) >= p + 1
    assert f(8) == 9
    assert f(7) < 8  # the p >= 8 threshold is tight


def test_min_edges_decomposes():
    for p in range(3, 65):
        assert min_edges(p) == naive_min_edges(p) + f(p)
        assert min_edges(p) == comb(p, 2) - max_weight_sums(p)


def test_bound_table():
    rows = bound_table(10)
    r6 = rows[6 - 3]
    assert (r6.p, r6.naive, r6.sums, r6.sharp, r6.f) == (6, 5, 6, 9, 4)
    assert rows[0].f == 0 and rows[0].margin is None
    r8 = rows[8 - 3]
    assert r8.f == 9 and r8.margin == 0
    with pytest.raises(DomainError):
        bound_table(65)
    with pytest.raises(DomainError):
        bound_table(2)


def test_complete_graph_passes():
    for p in range(1, 9):
        rep = check_weight_graph(SimpleGraph.complete(p))
        assert rep.overall
        assert [c.name for c in rep.checks] == list(CHECK_NAMES)


def test_path4_fails_diameter_and_universal():
    rep = check_weight_graph(SimpleGraph.path(4))
    assert not rep["diameter_le_2"].passed
    assert rep["diameter_le_2"].witness == "d(1,4)=3"
    assert not rep["universal_vertex"].passed
    assert not rep.overall


def test_star_fails_only_edge_bound():
    rep = check_weight_graph(SimpleGraph.star(5))
    assert (rep.p, rep.q) == (6, 5)
    assert rep["diameter_le_2"].passed and rep["universal_vertex"].passed
    assert not rep["edge_lower_bound"].passed
    assert rep["edge_lower_bound"].witness == "q=5<9"
    assert [c.name for c in rep.failed()] == ["edge_lower_bound"]


def test_small_conventions():
    assert check_weight_graph(SimpleGraph(1)).overall
    assert check_weight_graph(SimpleGraph(2, [(1, 2)])).overall
    rep = check_weight_graph(SimpleGraph(2))
    assert not rep.overall and not rep["connected"].passed


@settings(max_examples=300)
@given(graphs(max_p=9))
def test_report_invariants(g):
    rep = check_weight_graph(g)
    assert rep.overall == all(c.passed for c in rep.checks)
    for c in rep.failed():
        assert c.witness
    assert rep["connected"].passed == is_connected(g)
    assert rep["diameter_le_2"].passed == (diameter(g) <= 2)


@settings(max_examples=300)
@given(graphs(max_p=9))
def test_powers_stationary_on_passing_graphs(g):
    if not check_weight_graph(g).overall:
        return
    sq = power(g, 2)
    for n in (2, 3, 4):
        assert power(g, n) == sq
    assert sq == SimpleGraph.complete(g.p)


def corpus_weight_graphs():
    out = {}
    for name, alg in corpus().items():
        if validate(alg).nilpotent:
            out[name] = weight_graph(weight_system_of(alg))
    return out


def test_corpus_weight_graphs_pass():
    for name, g in corpus_weight_graphs().items():
        rep = check_weight_graph(g)
        assert rep.overall, (name, rep.keyvalue_lines())


def test_literal_power_fixed_point_only_for_complete_graphs():
    # genuine weight graphs that are not complete are not equal to their square
    graphs_ = corpus_weight_graphs()
    assert not power_fixed(graphs_["h3"])
    assert not power_fixed(graphs_["L4"])
    assert power_fixed(graphs_["a4"])
    for g in graphs_.values():
        assert power_fixed(g) == (g == SimpleGraph.complete(g.p))


def test_render_keyvalue_and_text():
    rep = check_weight_graph(SimpleGraph.path(4))
    kv = rep.keyvalue_lines()
    assert "check.diameter_le_2=fail" in kv
    assert "witness.diameter_le_2=d(1,4)=3" in kv
    assert kv[-1] == "overall=fail"
    text = "\n".join(rep.text_lines())
    assert "d(1,4)=3" in text and "FAIL" in text
