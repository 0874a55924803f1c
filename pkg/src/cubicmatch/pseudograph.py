"""Cubic pseudo-graph skeletons, loop cutting, and bound-certifying constructions.

A subcubic graph with minimum degree 2 is a subdivision of a cubic
pseudo-graph: its degree-3 vertices are the skeleton vertices, each chain of
degree-2 vertices becomes an edge, and each cycle hanging at one vertex
becomes a loop.  The subdivision map ``k`` records how many interior vertices
each skeleton edge carries.

``certify_pair`` and ``certify_matching`` build explicit witnesses on the
realized graph by recursing over loop cuts; every extension step checks its
own size gain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import maximum_matching
from .graph import (
    GraphError,
    Matching,
    MatchingFamily,
    Multigraph,
    is_connected,
    is_matching,
    subdivide_edge,
)
from .systems import (
    _segments,
    alternate_system,
    build_system,
    lift_system,
    transform_pair_through_subdivision,
)

KMap = tuple[int, ...]


class NotApplicable(GraphError):
    """The loop cut cannot be performed."""


class PreconditionError(GraphError):
    pass


@dataclass(frozen=True)
class Chain:
    """Walk in a realized graph replacing one skeleton edge.

    Runs from the lower endpoint of the skeleton edge; for a loop it starts
    and ends at the loop's vertex.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class Realization:
    graph: Multigraph
    chains: tuple[Chain, ...]


@dataclass(frozen=True)
class Skeleton:
    pseudo: Multigraph
    kmap: KMap
    chains: tuple[Chain, ...]
    branch: tuple[int, ...]


@dataclass(frozen=True)
class LoopCut:
    """Outcome of cutting ``loop``; all ids except ``new_edge`` refer to the graph before the cut.

    ``bridge`` joins the loop's vertex to ``hub``; ``first_arm`` and
    ``second_arm`` are the hub's other edges, ending at ``first_end`` and
    ``second_end``.  ``new_edge`` joins the two ends in ``result``.
    """

    result: Multigraph
    new_edge: int
    loop: int
    bridge: int
    first_arm: int
    second_arm: int
    loop_vertex: int
    hub: int
    first_end: int
    second_end: int
    vertex_map: dict[int, int]
    edge_map: dict[int, int]


@dataclass(frozen=True)
class ClassMembership:
    in_M: bool
    tree: Multigraph | None
    internal_count: int | None


# ---------------------------------------------------------------- basics


def is_cubic_pseudograph(g0: Multigraph) -> bool:
    return g0.n > 0 and g0.is_regular(3)


def loop_ids(g0: Multigraph) -> list[int]:
    return [d for d in range(g0.m) if g0.is_loop(d)]


def is_trivial(g0: Multigraph) -> bool:
    """Two vertices, each with a loop, joined by one edge."""
    return g0.n == 2 and len(loop_ids(g0)) == 2 and g0.m == 3


def total_vertices(g0: Multigraph, k: Sequence[int]) -> int:
    return g0.n + sum(k)


def check_kmap(g0: Multigraph, k: Sequence[int], strict: bool = False) -> None:
    if len(k) != g0.m:
        raise PreconditionError("subdivision map must cover every skeleton edge")
    for d, kd in enumerate(k):
        if kd < 0:
            raise PreconditionError("subdivision counts are nonnegative")
        if g0.is_loop(d) and kd < 1:
            raise PreconditionError(f"loop {d} needs at least one interior vertex")
        if strict and not g0.is_loop(d) and kd < 2:
            raise PreconditionError(f"edge {d} needs at least two interior vertices")


def realize(g0: Multigraph, k: Sequence[int]) -> Realization:
    """Subdivide every skeleton edge ``d`` ``k[d]`` times.

    Skeleton vertices keep ids ``0..n0-1``.  The first segment of edge ``d``
    keeps id ``d``; further segments and interior vertices are appended in
    edge-id order.
    """
    check_kmap(g0, k)
    n = g0.n
    first: list[tuple[int, int]] = []
    extra: list[tuple[int, int]] = []
    chains = []
    for d, (a, b) in enumerate(g0.edges):
        inner = list(range(n, n + k[d]))
        n += k[d]
        seq = [a, *inner, b]
        first.append((seq[0], seq[1]))
        ids = [d]
        for i in range(1, k[d] + 1):
            ids.append(g0.m + len(extra))
            extra.append((seq[i], seq[i + 1]))
        chains.append(Chain(tuple(seq), tuple(ids)))
    return Realization(Multigraph(n, tuple(first + extra)), tuple(chains))


def to_cubic_pseudograph(g: Multigraph) -> Skeleton:
    """Contract the degree-2 chains of a connected graph with degrees in {2, 3}."""
    if g.has_loops():
        raise PreconditionError("graph must be loopless")
    if g.n == 0 or g.min_degree < 2 or g.max_degree != 3:
        raise PreconditionError("need 2 <= degree <= 3 with some degree-3 vertex")
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    branch = tuple(v for v in range(g.n) if g.degrees[v] == 3)
    index = {v: i for i, v in enumerate(branch)}
    used: set[int] = set()
    found = []
    for b in branch:
        for e0 in g.incidence[b]:
            if e0 in used:
                continue
            vs, es = [b], []
            cur, e = b, e0
            while True:
                used.add(e)
                es.append(e)
                cur = g.other(e, cur)
                vs.append(cur)
                if g.degrees[cur] == 3:
                    break
                e = next(d for d in g.incidence[cur] if d != e)
                if e == es[-1]:
                    e = [d for d in g.incidence[cur] if d == es[-1]][0]
            end = vs[-1]
            a, c = index[b], index[end]
            if a > c:
                vs, es = vs[::-1], es[::-1]
                a, c = c, a
            elif a == c and es[0] > es[-1]:
                vs, es = vs[::-1], es[::-1]
            found.append(((a, c, min(es)), vs, es))
    found.sort(key=lambda t: t[0])
    pseudo = Multigraph(len(branch), tuple((a, c) for (a, c, _), _, _ in found), loops=True)
    kmap = tuple(len(vs) - 2 for _, vs, _ in found)
    chains = tuple(Chain(tuple(vs), tuple(es)) for _, vs, es in found)
    return Skeleton(pseudo, kmap, chains, branch)


# ---------------------------------------------------------------- loop cut


def cut_loop(g0: Multigraph, e: int) -> LoopCut:
    """Delete the loop's vertex and its neighbour; join the two freed ends by a new edge."""
    if not g0.is_loop(e):
        raise NotApplicable(f"edge {e} is not a loop")
    u0 = g0.edges[e][0]
    f = next(d for d in g0.incidence[u0] if d != e)
    v0 = g0.other(f, u0)
    if any(g0.is_loop(d) for d in g0.incidence[v0]):
        raise NotApplicable("the neighbour across the loop's edge carries a loop")
    h, h2 = [d for d in g0.incidence[v0] if d != f]
    u, v = g0.other(h, v0), g0.other(h2, v0)
    keep = [x for x in range(g0.n) if x not in (u0, v0)]
    vmap = {x: i for i, x in enumerate(keep)}
    edges, emap = [], {}
    for d, (a, b) in enumerate(g0.edges):
        if d in (e, f, h, h2):
            continue
        emap[d] = len(edges)
        edges.append((vmap[a], vmap[b]))
    gid = len(edges)
    edges.append((vmap[u], vmap[v]))
    result = Multigraph(len(keep), tuple(edges), loops=True)
    return LoopCut(result, gid, e, f, h, h2, u0, v0, u, v, vmap, emap)


def applicable_loops(g0: Multigraph) -> list[int]:
    out = []
    for d in loop_ids(g0):
        try:
            cut_loop(g0, d)
        except NotApplicable:
            continue
        out.append(d)
    return out


def derive_k_after_cut(k: Sequence[int], cut: LoopCut) -> KMap:
    out = [0] * cut.result.m
    for d, d2 in cut.edge_map.items():
        out[d2] = k[d]
    out[cut.new_edge] = k[cut.first_arm] + k[cut.second_arm] - 2
    return tuple(out)


# ---------------------------------------------------------------- class M


def in_class_M(g0: Multigraph, k: Sequence[int]) -> ClassMembership:
    loops = set(loop_ids(g0))
    tree = Multigraph(g0.n, tuple(g0.edges[d] for d in range(g0.m) if d not in loops))
    is_tree = tree.m == g0.n - 1 and is_connected(tree)
    pattern = all(k[d] == (1 if d in loops else 2) for d in range(g0.m))
    if not (is_tree and pattern):
        return ClassMembership(False, None, None)
    internal = sum(1 for x in range(tree.n) if tree.degrees[x] > 1)
    return ClassMembership(True, tree, internal)


def premise_six_sevenths(g0: Multigraph, k: Sequence[int]) -> bool:
    """Some loop with at least two interior vertices, or some other edge with at least three."""
    return any(
        (g0.is_loop(d) and k[d] >= 2) or (not g0.is_loop(d) and k[d] >= 3) for d in range(g0.m)
    )


def pair_ratio(g0: Multigraph, k: Sequence[int]) -> Fraction:
    """The lower bound on the two-matching ratio that applies to ``(g0, k)``."""
    if not loop_ids(g0):
        return Fraction(7, 8)
    if is_trivial(g0):
        s = sum(k)
        return Fraction(s + 1, s + 2)
    if premise_six_sevenths(g0, k):
        return Fraction(6, 7)
    return Fraction(5, 6)


def matching_ratio(g0: Multigraph, k: Sequence[int]) -> Fraction:
    return Fraction(6, 13) if in_class_M(g0, k).in_M else Fraction(3, 7)


# ---------------------------------------------------------------- witnesses


def _chain_walk(ch: Chain, start: int) -> tuple[list[int], list[int]]:
    if ch.vertices[0] == start:
        return list(ch.vertices), list(ch.edges)
    if ch.vertices[-1] == start:
        return list(ch.vertices[::-1]), list(ch.edges[::-1])
    raise GraphError("chain does not start or end at the given vertex")


def place_path(g: Multigraph, pair: list[set[int]], edges: Sequence[int]) -> None:
    """Alternate ``edges`` between the two members, choosing the start colour that stays valid."""
    for start in (0, 1):
        trial = [set(pair[0]), set(pair[1])]
        for i, d in enumerate(edges):
            trial[(start + i) % 2].add(d)
        if is_matching(g, trial[0]) and is_matching(g, trial[1]):
            pair[0], pair[1] = trial
            return
    raise AssertionError("no valid colouring of the path")


def _translate(
    old: Realization, new: Realization, cut: LoopCut
) -> tuple[dict[int, int], set[int]]:
    """Edge ids of the smaller realization mapped into the larger one (except the new edge's chain)."""
    inverse = {d2: d for d, d2 in cut.edge_map.items()}
    emap: dict[int, int] = {}
    for d2, ch in enumerate(old.chains):
        if d2 == cut.new_edge:
            continue
        target = new.chains[inverse[d2]]
        for a, b in zip(ch.edges, target.edges):
            emap[a] = b
    return emap, set(old.chains[cut.new_edge].edges)


def grow_from_uniform(g0: Multigraph, k: Sequence[int], init, step):
    """Carry a state from ``realize(g0, 1)`` up to ``realize(g0, k)`` one subdivision at a time.

    ``init(graph)`` builds the starting state and ``step(graph, state, edge)``
    returns the state on the 1-subdivision of ``edge``.  Returns the target
    realization, the final state and the map from the grown graph's edge ids
    to the target's.
    """
    base = realize(g0, [1] * g0.m)
    g = base.graph
    state = init(g)
    chains = [(list(c.vertices), list(c.edges)) for c in base.chains]
    for d in range(g0.m):
        for _ in range(k[d] - 1):
            vs, es = chains[d]
            x = es[0]
            state = step(g, state, x)
            near, far = _segments(g, x, vs[0])
            g, trace = subdivide_edge(g, x, 1)
            chains[d] = ([vs[0], trace.vertices[1], *vs[1:]], [near, far, *es[1:]])
    target = realize(g0, k)
    emap: dict[int, int] = {}
    for (_, es), ch in zip(chains, target.chains):
        emap.update(zip(es, ch.edges))
    return target, state, emap


def _subdivided_pair(g0: Multigraph, k: Sequence[int]) -> tuple[Realization, frozenset[int], frozenset[int]]:
    """Loopless skeleton: system pair on the uniform 1-subdivision, grown one unit at a time."""
    target, (H, H2), emap = grow_from_uniform(
        g0, k, lambda g: build_system(g).pair, transform_pair_through_subdivision
    )
    return target, frozenset(emap[x] for x in H), frozenset(emap[x] for x in H2)


def system_pair_on_realization(g0: Multigraph, k: Sequence[int]) -> tuple[Realization, frozenset[int], frozenset[int], int]:
    """Alternation of a lifted path-cycle system on ``realize(g0, k)`` (every k at least 1).

    Also returns the size of the maximum matching the system includes.
    """
    check_kmap(g0, k)
    if min(k) < 1:
        raise PreconditionError("every skeleton edge needs an interior vertex")
    target, w, emap = grow_from_uniform(g0, k, build_system, lift_system)
    H, H2 = alternate_system(w.system)
    return (
        target,
        frozenset(emap[x] for x in H),
        frozenset(emap[x] for x in H2),
        len(w.included_max_matching),
    )


def skeleton_edge_map(skel: Skeleton) -> dict[int, int]:
    """Edge ids of ``realize(skel.pseudo, skel.kmap)`` mapped to the contracted graph's ids."""
    r = realize(skel.pseudo, skel.kmap)
    out: dict[int, int] = {}
    for mine, theirs in zip(r.chains, skel.chains):
        assert len(mine.edges) == len(theirs.edges)
        out.update(zip(mine.edges, theirs.edges))
    return out


def _trivial_path(g0: Multigraph, r: Realization) -> list[int]:
    loops = loop_ids(g0)
    f = next(d for d in range(g0.m) if not g0.is_loop(d))
    e = next(d for d in loops if g0.edges[d][0] == g0.edges[f][0])
    g = next(d for d in loops if d != e)
    u0, v0 = g0.edges[f]
    _, e_edges = _chain_walk(r.chains[e], u0)
    _, f_edges = _chain_walk(r.chains[f], u0)
    _, g_edges = _chain_walk(r.chains[g], v0)
    # walk the loop at u0 into u0, cross, then go round the loop at v0, skipping one end edge each
    return list(reversed(e_edges[:-1])) + f_edges + g_edges[:-1]


def _cut_choice(g0: Multigraph) -> int:
    loops = applicable_loops(g0)
    if not loops:
        raise NotApplicable("no loop can be cut")
    return loops[0]


def _ends(cut: LoopCut, r_old: Realization) -> tuple[int, int, bool]:
    """(first edge, last edge, chain starts on the u side) of the new edge's chain."""
    ch = r_old.chains[cut.new_edge]
    start = ch.vertices[0]
    u_new = cut.vertex_map[cut.first_end]
    return ch.edges[0], ch.edges[-1], start == u_new


def _pair_rec(g0: Multigraph, k: Sequence[int]) -> tuple[Realization, frozenset[int], frozenset[int]]:
    if not loop_ids(g0):
        return _subdivided_pair(g0, k)
    r = realize(g0, k)
    if is_trivial(g0):
        path = _trivial_path(g0, r)
        pair: list[set[int]] = [set(), set()]
        place_path(r.graph, pair, path)
        return r, frozenset(pair[0]), frozenset(pair[1])
    cut = cut_loop(g0, _cut_choice(g0))
    k2 = derive_k_after_cut(k, cut)
    r_old, A, B = _pair_rec(cut.result, k2)
    emap, kg = _translate(r_old, r, cut)
    first, last, starts_u = _ends(cut, r_old)
    coloured = A | B
    side_u = (first if starts_u else last) in coloured
    side_v = (last if starts_u else first) in coloured
    if cut.first_end == cut.second_end:
        side_u, side_v = first in coloured, last in coloured
    pair = [{emap[x] for x in A if x not in kg}, {emap[x] for x in B if x not in kg}]

    ch = r.chains
    _, he = _chain_walk(ch[cut.first_arm], cut.hub)  # hub to first end
    _, h2e = _chain_walk(ch[cut.second_arm], cut.hub)  # hub to second end
    _, fe = _chain_walk(ch[cut.bridge], cut.hub)  # hub to loop vertex
    _, ee = _chain_walk(ch[cut.loop], cut.loop_vertex)  # once round the loop
    if side_u + side_v <= 1:
        left = list(reversed(he if side_u else he[:-1]))
        right = list(h2e if side_v else h2e[:-1])
        place_path(r.graph, pair, left + right)
        place_path(r.graph, pair, fe[1:] + ee[:-1])
    else:
        hfe = list(reversed(he)) + fe + ee[:-1]
        place_path(r.graph, pair, hfe)
        place_path(r.graph, pair, list(reversed(h2e[1:])))
    gain = len(pair[0]) + len(pair[1]) - len(A) - len(B)
    assert gain >= k[cut.bridge] + k[cut.loop] + 3, (gain, k[cut.bridge], k[cut.loop])
    return r, frozenset(pair[0]), frozenset(pair[1])


def certify_pair(g0: Multigraph, k: Sequence[int]) -> MatchingFamily:
    """Two disjoint matchings on ``realize(g0, k)`` meeting the applicable ratio bound."""
    if not is_cubic_pseudograph(g0) or not is_connected(g0):
        raise PreconditionError("need a connected cubic pseudo-graph")
    check_kmap(g0, k, strict=True)
    r, A, B = _pair_rec(g0, k)
    members = tuple(sorted((A, B), key=lambda s: (-len(s), sorted(s))))
    return MatchingFamily(r.graph, members)


def _matching_rec(g0: Multigraph, k: Sequence[int]) -> tuple[Realization, frozenset[int]]:
    if not loop_ids(g0) or is_trivial(g0):
        fam = certify_pair(g0, k)
        return realize(g0, k), fam.members[0]
    r = realize(g0, k)
    cut = cut_loop(g0, _cut_choice(g0))
    k2 = derive_k_after_cut(k, cut)
    r_old, F_old = _matching_rec(cut.result, k2)
    emap, kg = _translate(r_old, r, cut)
    first, last, starts_u = _ends(cut, r_old)
    side_u = (first if starts_u else last) in F_old
    side_v = (last if starts_u else first) in F_old
    if cut.first_end == cut.second_end:
        side_u, side_v = first in F_old, last in F_old
    F = {emap[x] for x in F_old if x not in kg}
    ch = r.chains
    _, he = _chain_walk(ch[cut.first_arm], cut.hub)
    _, h2e = _chain_walk(ch[cut.second_arm], cut.hub)
    _, fe = _chain_walk(ch[cut.bridge], cut.hub)
    _, ee = _chain_walk(ch[cut.loop], cut.loop_vertex)
    hh = list(reversed(he if side_u else he[:-1])) + list(h2e if side_v else h2e[:-1])
    F |= set(hh[0::2])
    F |= set(fe[1:-1][0::2])
    F |= set(ee[:-1][0::2])
    assert is_matching(r.graph, F)
    gain = len(F) - len(F_old)
    assert gain >= k[cut.bridge] // 2 + (k[cut.loop] + 1) // 2 + 1
    return r, frozenset(F)


def certify_matching(g0: Multigraph, k: Sequence[int]) -> Matching:
    """A matching on ``realize(g0, k)`` of size at least the applicable ratio bound."""
    if not is_cubic_pseudograph(g0) or not is_connected(g0):
        raise PreconditionError("need a connected cubic pseudo-graph")
    check_kmap(g0, k, strict=True)
    r = realize(g0, k)
    if in_class_M(g0, k).in_M:
        return maximum_matching(r.graph)
    if not loop_ids(g0) or premise_six_sevenths(g0, k):
        return Matching(r.graph, certify_pair(g0, k).members[0])
    r, F = _matching_rec(g0, k)
    return Matching(r.graph, F)


# ---------------------------------------------------------------- cut sequences


def cut_sequence(g0: Multigraph, k: Sequence[int], order: Sequence[int] | None = None):
    """Yield ``(skeleton, kmap, cut)`` along a maximal sequence of loop cuts.

    ``order`` picks, at step ``i``, the ``order[i]``-th applicable loop
    (modulo how many there are); the default always takes the first.
    """
    step = 0
    cur, kc = g0, tuple(k)
    while True:
        loops = applicable_loops(cur)
        if not loops:
            yield cur, kc, None
            return
        pick = loops[(order[step] if order and step < len(order) else 0) % len(loops)]
        cut = cut_loop(cur, pick)
        yield cur, kc, cut
        cur, kc = cut.result, derive_k_after_cut(kc, cut)
        step += 1
