from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from cubicmatch.canon import canonical_form
from cubicmatch.generate import (
    enumerate_cubic,
    enumerate_cubic_pseudographs,
    random_cubic,
    random_subcubic,
)
from cubicmatch.graph import GraphError, Multigraph, is_connected
from oracles import cubic_classes


@pytest.mark.parametrize("n", [2, 4, 6])
def test_enumeration_matches_generate_and_group(n):
    got = {canonical_form(g) for g in enumerate_cubic(n)}
    oracle = {canonical_form(Multigraph(n, rep)) for rep in cubic_classes(n)}
    assert got == oracle


@pytest.mark.parametrize("n0", [2, 4])
def test_pseudograph_enumeration_matches_generate_and_group(n0):
    got = {canonical_form(g) for g in enumerate_cubic_pseudographs(n0)}
    oracle = {canonical_form(Multigraph(n0, rep, loops=True)) for rep in cubic_classes(n0, loops=True)}
    assert got == oracle


# counts of connected cubic multigraphs without loops, checked against the oracle for n <= 6
@pytest.mark.parametrize("n, count", [(2, 1), (4, 2), (6, 6), (8, 20)])
def test_known_counts(n, count):
    graphs = enumerate_cubic(n)
    assert len(graphs) == count
    assert all(g.is_regular(3) and not g.has_loops() and is_connected(g) for g in graphs)


def test_pseudograph_counts():
    assert [len(enumerate_cubic_pseudographs(k)) for k in (2, 4, 6)] == [2, 5, 17]


def test_triple_edge_is_only_graph_on_two_vertices():
    (g,) = enumerate_cubic(2)
    assert g.edges == ((0, 1), (0, 1), (0, 1))


@pytest.mark.parametrize("n", [0, 3, 7])
def test_odd_or_tiny_sizes_rejected(n):
    with pytest.raises(GraphError):
        enumerate_cubic(n)
    with pytest.raises(GraphError):
        random_cubic(n, 1)


def test_random_cubic_deterministic():
    assert random_cubic(10, 1) == random_cubic(10, 1)
    assert random_cubic(10, 1) != random_cubic(10, 2)


@given(st.integers(1, 6).map(lambda k: 2 * k), st.integers(0, 10**6))
def test_random_cubic_is_cubic(n, seed):
    g = random_cubic(n, seed)
    assert g.is_regular(3) and not g.has_loops()


@given(st.integers(3, 16), st.integers(0, 10**6))
def test_random_subcubic_degrees(n, seed):
    g = random_subcubic(n, seed)
    assert g.n == n and set(g.degrees) <= {2, 3}
    assert random_subcubic(n, seed) == g


def test_random_subcubic_needs_three_vertices():
    with pytest.raises(GraphError):
        random_subcubic(2, 0)
