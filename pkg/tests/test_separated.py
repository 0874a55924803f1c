from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from cubicmatch.exact import matching_number
from cubicmatch.generate import random_subcubic
from cubicmatch.graph import GraphError, Matching, Multigraph, cycle_graph, petersen_graph, theta_graph
from cubicmatch.separated import (
    PreconditionError,
    bad_triples,
    count_bad_pairs,
    improvement_step,
    improvement_step_traced,
    separated_maximum_matching,
    unsaturated_vertices,
)
from oracles import has_separated_maximum_matching

# a graph where the repair swaps the last path edge for an edge into the partner vertex
CASE2_GRAPH = Multigraph(
    10,
    ((0, 2), (0, 8), (1, 5), (1, 7), (1, 8), (2, 6), (2, 9), (3, 4), (3, 6), (3, 9), (4, 8), (5, 7)),
)
CASE2_START = frozenset({1, 5, 9, 11})

# a graph where the repair exchanges along the path after one lengthening
CASE1_GRAPH = Multigraph(
    12,
    (
        (0, 8), (0, 11), (1, 5), (1, 7), (2, 6), (2, 9), (2, 10),
        (3, 6), (3, 8), (4, 6), (4, 11), (5, 7), (5, 8), (9, 10),
    ),
)
CASE1_START = frozenset({1, 3, 4, 12, 13})


def test_bad_triples_listing():
    g = Multigraph(3, ((0, 1), (1, 2)))
    assert unsaturated_vertices(g, frozenset({0})) == [2]
    g = Multigraph(5, ((0, 2), (1, 2), (2, 3), (3, 4), (4, 0)))
    assert bad_triples(g, frozenset({3})) == [(0, 1, 2)]
    assert count_bad_pairs(g, frozenset({3})) == 1


def test_case_two_repair():
    g = CASE2_GRAPH
    assert bad_triples(g, CASE2_START)[0] == (1, 4, 8)
    tr = improvement_step_traced(g, Matching(g, CASE2_START), 1, 4, 8)
    assert tr.case == 2
    assert tr.path_vertices == (1, 8, 0, 2, 6, 3, 9)
    assert tr.result.is_valid() and len(tr.result) == matching_number(g)
    assert count_bad_pairs(g, tr.result.edges) < count_bad_pairs(g, CASE2_START)


def test_case_one_repair():
    g = CASE1_GRAPH
    assert bad_triples(g, CASE1_START)[0] == (3, 4, 6)
    tr = improvement_step_traced(g, Matching(g, CASE1_START), 3, 4, 6)
    assert tr.case == 1 and tr.lengthenings == 1
    assert tr.path_vertices == (3, 6, 2, 9, 10)
    assert tr.result.edges == frozenset({1, 3, 5, 7, 12})
    assert len(tr.result) == matching_number(g)
    assert count_bad_pairs(g, tr.result.edges) < count_bad_pairs(g, CASE1_START)


def test_step_rejects_saturated_endpoint():
    g = CASE2_GRAPH
    with pytest.raises(GraphError):
        improvement_step(g, Matching(g, CASE2_START), 0, 4, 8)


@given(st.integers(3, 14), st.integers(1, 10**6))
def test_result_is_maximum_and_separated(n, seed):
    g = random_subcubic(n, seed)
    res = separated_maximum_matching(g)
    assert res.matching.is_valid()
    assert len(res.matching) == matching_number(g)
    assert res.bad_pairs == 0 == count_bad_pairs(g, res.matching.edges)
    assert res.unsaturated == frozenset(unsaturated_vertices(g, res.matching.edges))


@pytest.mark.parametrize("g", [petersen_graph(), theta_graph(), cycle_graph(7)], ids=["petersen", "theta", "c7"])
def test_named_graphs(g):
    res = separated_maximum_matching(g)
    assert res.bad_pairs == 0 and len(res.matching) == matching_number(g)


@given(st.integers(3, 9), st.integers(1, 10**6))
def test_oracle_agrees_a_separated_matching_exists(n, seed):
    assert has_separated_maximum_matching(random_subcubic(n, seed))


def test_degree_precondition():
    with pytest.raises(PreconditionError):
        separated_maximum_matching(Multigraph(3, ((0, 1), (1, 2))))
