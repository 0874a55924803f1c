from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from cubicmatch.exact import matching_number, nu_k
from cubicmatch.generate import enumerate_cubic, enumerate_cubic_pseudographs, random_subcubic
from cubicmatch.graph import (
    GraphError,
    Multigraph,
    complete_graph,
    cycle_graph,
    is_matching,
    petersen_graph,
    subdivide_edge,
    theta_graph,
)
from cubicmatch.pseudograph import realize
from cubicmatch.systems import (
    PreconditionError,
    SysCycle,
    PathCycleSystem,
    build_system,
    expected_path_count,
    lift_system,
    nu2_subdivision_value,
    system_alternating_pair,
    system_properties,
    transform_pair_through_subdivision,
)


def _uniform_subdivisions():
    out = []
    for n0 in (2, 4):
        for g0 in enumerate_cubic_pseudographs(n0):
            if not any(g0.is_loop(d) for d in range(g0.m)):
                out.append(realize(g0, [1] * g0.m).graph)
    out.append(realize(petersen_graph(), [1] * 15).graph)
    return out


def _check_witness(g, w):
    props = system_properties(w.system, w.included_max_matching.edges)
    assert all(props.values()), props
    assert len(w.system.paths) == expected_path_count(g)
    assert len(w.included_max_matching) == matching_number(g)
    a, b = w.pair
    assert not (a & b) and is_matching(g, a) and is_matching(g, b)


@pytest.mark.parametrize("g", _uniform_subdivisions())
def test_built_system_has_all_properties(g):
    w = build_system(g)
    _check_witness(g, w)
    assert sum(map(len, w.pair)) == nu_k(g, 2).value


def test_path_count_formula():
    g = realize(complete_graph(4), [1] * 6).graph
    assert expected_path_count(g) == 2
    # a degree-4 hub contributes two paths
    g4 = realize(Multigraph(2, ((0, 1),) * 4), [1] * 4).graph
    assert expected_path_count(g4) == 2


def test_bipartite_hypothesis_enforced():
    with pytest.raises(PreconditionError):
        build_system(complete_graph(4))
    with pytest.raises(PreconditionError):
        build_system(cycle_graph(4))


def test_alternating_pair_rejects_odd_cycle():
    g = cycle_graph(3)
    bad = PathCycleSystem(g, (), (SysCycle((0, 1, 2), (0, 1, 2)),))
    w = build_system(realize(complete_graph(4), [1] * 6).graph)
    with pytest.raises(GraphError):
        system_alternating_pair(type(w)(bad, w.pair, None))


@given(st.integers(0, 10**6), st.integers(1, 6))
def test_lifts_preserve_properties(seed, steps):
    rng = random.Random(seed)
    graphs = _uniform_subdivisions()
    g = graphs[rng.randrange(len(graphs))]
    w = build_system(g)
    r = len(w.system.paths)
    for _ in range(steps):
        e = rng.randrange(g.m)
        w = lift_system(g, w, e)
        g, _ = subdivide_edge(g, e, 1)
        assert w.system.host == g
        _check_witness(g, w)
        assert len(w.system.paths) == r


def test_lift_precondition():
    g = complete_graph(4)
    with pytest.raises(PreconditionError):
        lift_system(g, build_system(realize(g, [1] * 6).graph), 0)


def _valid_subdivision_hosts():
    hosts = [cycle_graph(3), cycle_graph(5), cycle_graph(7), theta_graph()]
    hosts += [g for g in _uniform_subdivisions() if g.n <= 16]
    return hosts


@pytest.mark.parametrize("g", _valid_subdivision_hosts())
def test_subdivision_value_matches_exact(g):
    for e in range(g.m):
        h, _ = subdivide_edge(g, e, 1)
        assert nu2_subdivision_value(g, e) == nu_k(h, 2).value


@pytest.mark.parametrize("length", [3, 5, 7])
def test_odd_cycle_gains_two(length):
    g = cycle_graph(length)
    assert nu2_subdivision_value(g, 0) == nu_k(g, 2).value + 2 == length + 1


def test_even_cycle_excluded():
    with pytest.raises(PreconditionError):
        nu2_subdivision_value(cycle_graph(6), 0)


@given(st.integers(0, 10**6))
def test_pair_transform_on_optimal_pairs(seed):
    rng = random.Random(seed)
    g = random_subcubic(rng.randrange(5, 11), seed)
    if any(g.degrees[a] == 3 and g.degrees[b] == 3 for a, b in g.edges):
        g = realize(enumerate_cubic(4)[seed % 2], [1] * 6).graph
    if not is_connected_graph(g):
        return
    if g.is_regular(2) and g.n % 2 == 0:
        return
    e = rng.randrange(g.m)
    a, b = nu_k(g, 2).witness.members
    h, _ = subdivide_edge(g, e, 1)
    x, y = transform_pair_through_subdivision(g, (a, b), e)
    assert not (x & y) and is_matching(h, x) and is_matching(h, y)
    assert len(x) + len(y) == len(a) + len(b) + 1


def is_connected_graph(g):
    from cubicmatch.graph import is_connected

    return is_connected(g)
