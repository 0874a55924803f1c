"""Maximum matchings whose unsaturated vertices pairwise share no neighbour.

The search starts from the lexicographically smallest maximum matching and
repeatedly repairs the smallest offending triple ``(u, w, q)`` (``u < w``
unsaturated, ``q`` a common neighbour) by an exchange along an alternating
path.  Each repair strictly lowers the number of offending pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import all_maximum_matchings, maximum_matching
from .graph import GraphError, Matching, Multigraph, path_cycle_components


class PreconditionError(GraphError):
    pass


@dataclass(frozen=True)
class SeparatedMatching:
    matching: Matching
    unsaturated: frozenset[int]
    bad_pairs: int
    used_fallback: bool = False
    steps: int = 0


@dataclass(frozen=True)
class StepTrace:
    """What one repair did: which exchange applied and the final alternating path."""

    result: Matching
    case: int
    path_vertices: tuple[int, ...]
    path_edges: tuple[int, ...]
    lengthenings: int


def _check_degrees(g: Multigraph) -> None:
    if g.has_loops():
        raise PreconditionError("graph must be loopless")
    if g.n == 0 or g.min_degree < 2 or g.max_degree > 3:
        raise PreconditionError("degrees must lie in [2, 3]")


def unsaturated_vertices(g: Multigraph, edges: frozenset[int]) -> list[int]:
    covered = {x for e in edges for x in g.edges[e]}
    return [v for v in range(g.n) if v not in covered]


def bad_triples(g: Multigraph, edges: frozenset[int]) -> list[tuple[int, int, int]]:
    """All ``(u, w, q)`` with ``u < w`` unsaturated and ``q`` adjacent to both, sorted."""
    free = unsaturated_vertices(g, edges)
    nbrs = {v: set(g.neighbors(v)) for v in free}
    out = []
    for u, w in combinations(free, 2):
        for q in sorted(nbrs[u] & nbrs[w]):
            out.append((u, w, q))
    return sorted(out)


def count_bad_pairs(g: Multigraph, edges: frozenset[int]) -> int:
    return len({(u, w) for u, w, _ in bad_triples(g, edges)})


def _matched_edge(g: Multigraph, edges: frozenset[int], v: int) -> int | None:
    for e in g.incidence[v]:
        if e in edges:
            return e
    return None


def _component_from(g: Multigraph, a: frozenset[int], b: frozenset[int], e: int, start: int):
    for comp in path_cycle_components(g, a ^ b):
        if e in comp.edges:
            if comp.closed:
                raise GraphError("alternating component through e is a cycle")
            vs, es = comp.vertices, comp.edges
            if vs[0] != start:
                vs, es = vs[::-1], es[::-1]
            if vs[0] != start:
                raise GraphError("alternating path does not start at u")
            return vs, es
    raise GraphError("edge is not in the symmetric difference")


def improvement_step_traced(g: Multigraph, F: Matching, u: int, w: int, q: int) -> StepTrace:
    edges = F.edges
    saturated = F.saturated()
    if u in saturated or w in saturated or u == w:
        raise GraphError("u and w must be distinct unsaturated vertices")
    if not (g.has_edge(u, q) and g.has_edge(w, q)):
        raise GraphError("q must be adjacent to both u and w")
    e_q = _matched_edge(g, edges, q)
    if e_q is None:
        raise GraphError("q must be saturated")
    e = min(g.edges_between(u, q))
    other = (edges - {e_q}) | {e}
    vs, es = _component_from(g, edges, other, e, u)
    grown = 0
    while True:
        v = vs[-1]
        on_path = set(vs)
        ext = next(
            (d for d in g.incidence[v] if g.other(d, v) not in on_path), None
        )
        if ext is None:
            break
        v2 = g.other(ext, v)
        f = _matched_edge(g, other, v2)
        if f is None:
            raise GraphError("matching is not maximum")
        other = (other - {f}) | {ext}
        old = len(es)
        vs, es = _component_from(g, edges, other, e, u)
        if len(es) <= old:
            raise GraphError("lengthening failed to extend the alternating path")
        grown += 1
    v = vs[-1]
    nbrs = set(g.neighbors(v))
    assert nbrs <= set(vs) and u not in nbrs and q not in nbrs
    assert len(es) >= 4 and len(es) % 2 == 0
    p = vs[-2]
    if not g.has_edge(p, w):
        result = (edges - set(es)) | (other & set(es))
        case = 1
    else:
        result = (edges - {es[-1]}) | {min(g.edges_between(p, w))}
        case = 2
    return StepTrace(Matching(g, frozenset(result)), case, tuple(vs), tuple(es), grown)


def improvement_step(g: Multigraph, F: Matching, u: int, w: int, q: int) -> Matching:
    """One repair of the offending pair ``(u, w)`` around their common neighbour ``q``."""
    return improvement_step_traced(g, F, u, w, q).result


def _exhaustive(g: Multigraph) -> frozenset[int]:
    best = None
    for mm in sorted(all_maximum_matchings(g), key=sorted):
        c = count_bad_pairs(g, mm)
        if best is None or c < best[0]:
            best = (c, mm)
        if c == 0:
            break
    assert best is not None
    return best[1]


def separated_maximum_matching(g: Multigraph) -> SeparatedMatching:
    _check_degrees(g)
    F = maximum_matching(g)
    bad = count_bad_pairs(g, F.edges)
    steps = 0
    fallback = False
    while bad:
        u, w, q = bad_triples(g, F.edges)[0]
        try:
            nxt = improvement_step(g, F, u, w, q)
            nb = count_bad_pairs(g, nxt.edges)
        except (GraphError, AssertionError):
            nxt, nb = None, bad
        if nxt is None or nb >= bad or len(nxt) != len(F):
            F = Matching(g, _exhaustive(g))
            bad = count_bad_pairs(g, F.edges)
            fallback = True
            break
        F, bad = nxt, nb
        steps += 1
    return SeparatedMatching(
        F, frozenset(unsaturated_vertices(g, F.edges)), bad, fallback, steps
    )
