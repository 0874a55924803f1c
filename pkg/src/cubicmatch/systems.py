"""Path/cycle systems of graphs whose edges join degree 2 to degree >= 3.

A system is a set of vertex-disjoint paths (zero-length paths allowed) and
cycles.  Alternating the edges of every member between two colour classes
gives a pair of disjoint matchings; the structural properties checked here
are what make that pair large.  Systems can be carried through
1-subdivisions of an edge while keeping the number of paths fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exact import augment_to_maximum, matching_number, nu_k
from .graph import (
    GraphError,
    Matching,
    Multigraph,
    is_connected,
    is_cycle_graph,
    path_cycle_components,
    subdivide_edge,
)


@dataclass(frozen=True)
class SysPath:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SysCycle:
    """Cycle; edge ``i`` joins ``vertices[i]`` and ``vertices[(i + 1) % len]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class PathCycleSystem:
    host: Multigraph
    paths: tuple[SysPath, ...]
    cycles: tuple[SysCycle, ...]

    def edge_set(self) -> frozenset[int]:
        out: set[int] = set()
        for p in self.paths:
            out.update(p.edges)
        for c in self.cycles:
            out.update(c.edges)
        return frozenset(out)

    def path_vertices(self) -> set[int]:
        return {v for p in self.paths for v in p.vertices}


@dataclass(frozen=True)
class SystemWitness:
    system: PathCycleSystem
    pair: tuple[frozenset[int], frozenset[int]]
    included_max_matching: Matching | None


class PreconditionError(GraphError):
    pass


# ---------------------------------------------------------------- checks


def check_structure(s: PathCycleSystem) -> None:
    """Raise if members overlap or consecutive vertices are not joined by the recorded edge."""
    g = s.host
    seen: set[int] = set()
    used: set[int] = set()

    def claim(vs: Sequence[int], es: Sequence[int]) -> None:
        for v in vs:
            if v in seen:
                raise GraphError(f"vertex {v} appears twice in the system")
            seen.add(v)
        for e in es:
            if e in used:
                raise GraphError(f"edge {e} appears twice in the system")
            used.add(e)

    for p in s.paths:
        if len(p.vertices) != len(p.edges) + 1:
            raise GraphError("path vertex and edge counts disagree")
        for i, e in enumerate(p.edges):
            if set(g.edges[e]) != {p.vertices[i], p.vertices[i + 1]}:
                raise GraphError(f"path edge {e} does not join its neighbours")
        claim(p.vertices, p.edges)
    for c in s.cycles:
        L = len(c.vertices)
        if L < 2 or len(c.edges) != L:
            raise GraphError("malformed cycle")
        for i, e in enumerate(c.edges):
            if set(g.edges[e]) != {c.vertices[i], c.vertices[(i + 1) % L]}:
                raise GraphError(f"cycle edge {e} does not join its neighbours")
        claim(c.vertices, c.edges)


def system_properties(s: PathCycleSystem, matching: Iterable[int] | None = None) -> dict[str, bool]:
    """Evaluate the five structural properties of a system on its host."""
    g = s.host
    deg = g.degrees
    check_structure(s)
    on_path = s.path_vertices()
    covered = on_path | {v for c in s.cycles for v in c.vertices}
    sys_edges = s.edge_set()

    alt = True
    for c in s.cycles:
        L = len(c.vertices)
        if L % 2:
            alt = False
            continue
        for i in range(L):
            a, b = deg[c.vertices[i]], deg[c.vertices[(i + 1) % L]]
            if not ((a == 2 and b >= 3) or (a >= 3 and b == 2)):
                alt = False

    ends_ok = True
    for p in s.paths:
        for x in {p.vertices[0], p.vertices[-1]}:
            if deg[x] != 2:
                ends_ok = False
            for y in g.neighbors(x):
                if y not in on_path and deg[y] < 3:
                    ends_ok = False

    off_ok = True
    for e, (a, b) in enumerate(g.edges):
        if e in sys_edges:
            continue
        if sorted((min(deg[a], 3), min(deg[b], 3))) != [2, 3]:
            off_ok = False

    props = {
        "cycles_alternate": alt,
        "covers_all": covered == set(range(g.n)),
        "path_ends": ends_ok,
        "off_system_edges": off_ok,
    }
    if matching is not None:
        props["includes_matching"] = set(matching) <= sys_edges
    return props


def _require_bipartite_hypothesis(g: Multigraph) -> None:
    if g.has_loops() or g.min_degree < 2:
        raise PreconditionError("need a loopless graph with minimum degree 2")
    for a, b in g.edges:
        da, db = g.degrees[a], g.degrees[b]
        if not ((da == 2 and db >= 3) or (da >= 3 and db == 2)):
            raise PreconditionError("every edge must join degree 2 to degree >= 3")


def expected_path_count(g: Multigraph) -> int:
    return sum(d - 2 for d in g.degrees if d >= 3) // 2


# ---------------------------------------------------------------- construction


def _find_cycle(g: Multigraph, alive: set[int]) -> tuple[list[int], list[int]] | None:
    """Some cycle inside ``alive`` (two parallel edges count), via iterative DFS."""
    parent_edge: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in sorted(alive):
        if root in depth:
            continue
        depth[root] = 0
        parent_edge[root] = -1
        stack = [(root, iter(g.incidence[root]))]
        while stack:
            x, it = stack[-1]
            advanced = False
            for e in it:
                if e == parent_edge[x] or g.is_loop(e):
                    continue
                y = g.other(e, x)
                if y not in alive:
                    continue
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent_edge[y] = e
                    stack.append((y, iter(g.incidence[y])))
                    advanced = True
                    break
                if depth[y] < depth[x]:
                    # back edge x -> y closes a cycle
                    vs, es = [x], []
                    cur = x
                    while cur != y:
                        pe = parent_edge[cur]
                        es.append(pe)
                        cur = g.other(pe, cur)
                        vs.append(cur)
                    # vs runs x .. y along tree edges; close with e from y back to x
                    vs = vs[::-1]
                    es = es[::-1]
                    es.append(e)
                    return vs, es
            if not advanced:
                stack.pop()
    return None


def _tree_path(g: Multigraph, alive: set[int], a: int, b: int) -> tuple[list[int], list[int]]:
    prev: dict[int, tuple[int, int]] = {a: (-1, -1)}
    queue = [a]
    for x in queue:
        if x == b:
            break
        for e in g.incidence[x]:
            y = g.other(e, x)
            if y in alive and y not in prev:
                prev[y] = (x, e)
                queue.append(y)
    vs, es = [b], []
    while vs[-1] != a:
        x, e = prev[vs[-1]]
        es.append(e)
        vs.append(x)
    return vs[::-1], es[::-1]


def build_system(g: Multigraph) -> SystemWitness:
    """Greedy cycle packing, then leaf-to-leaf paths of the remaining forest."""
    _require_bipartite_hypothesis(g)
    alive = set(range(g.n))
    cycles: list[SysCycle] = []
    while True:
        found = _find_cycle(g, alive)
        if found is None:
            break
        vs, es = found
        cycles.append(SysCycle(tuple(vs), tuple(es)))
        alive -= set(vs)
    paths: list[SysPath] = []
    while True:
        fdeg = {v: sum(1 for e in g.incidence[v] if g.other(e, v) in alive) for v in alive}
        leaves = sorted(v for v, d in fdeg.items() if d == 1)
        if not leaves:
            break
        a = leaves[0]
        # the other leaves of a's tree
        comp = {a}
        queue = [a]
        for x in queue:
            for e in g.incidence[x]:
                y = g.other(e, x)
                if y in alive and y not in comp:
                    comp.add(y)
                    queue.append(y)
        b = min(v for v in leaves if v in comp and v != a)
        vs, es = _tree_path(g, alive, a, b)
        paths.append(SysPath(tuple(vs), tuple(es)))
        alive -= set(vs)
    for v in sorted(alive):
        paths.append(SysPath((v,), ()))
    system = PathCycleSystem(g, tuple(paths), tuple(cycles))
    pair = alternate_system(system)
    return SystemWitness(system, pair, Matching(g, pair[0]))


def alternate_system(s: PathCycleSystem) -> tuple[frozenset[int], frozenset[int]]:
    h: set[int] = set()
    h2: set[int] = set()
    for member in (*s.paths, *s.cycles):
        for i, e in enumerate(member.edges):
            (h if i % 2 == 0 else h2).add(e)
    return frozenset(h), frozenset(h2)


def system_alternating_pair(w: SystemWitness) -> tuple[frozenset[int], frozenset[int]]:
    """Alternate colours along every path (from its first vertex) and every cycle."""
    check_structure(w.system)
    if any(len(c.vertices) % 2 for c in w.system.cycles):
        raise GraphError("system has an odd cycle")
    return alternate_system(w.system)


# ---------------------------------------------------------------- lifting


def _require_lift_hypothesis(g: Multigraph) -> None:
    if g.has_loops() or g.min_degree < 2 or not is_connected(g):
        raise PreconditionError("need a connected loopless graph with minimum degree 2")
    for a, b in g.edges:
        if g.degrees[a] >= 3 and g.degrees[b] >= 3:
            raise PreconditionError("an edge joins two vertices of degree >= 3")


def _oriented(p: SysPath, start: int) -> SysPath:
    if p.vertices[0] == start:
        return p
    if p.vertices[-1] == start:
        return SysPath(p.vertices[::-1], p.edges[::-1])
    raise GraphError(f"{start} is not an end of the path")


def _segments(g: Multigraph, e: int, frm: int) -> tuple[int, int]:
    """Segment ids of a 1-subdivided edge ``e`` in traversal order starting at ``frm``."""
    a, _ = g.edges[e]
    return (e, g.m) if frm == a else (g.m, e)


def _structural_lift(g: Multigraph, s: PathCycleSystem, e: int) -> PathCycleSystem:
    g2, trace = subdivide_edge(g, e, 1)
    x = trace.vertices[1]
    deg = g.degrees
    paths = list(s.paths)
    cycles = list(s.cycles)

    for i, p in enumerate(paths):
        if e in p.edges:
            j = p.edges.index(e)
            s1, s2 = _segments(g, e, p.vertices[j])
            paths[i] = SysPath(
                p.vertices[: j + 1] + (x,) + p.vertices[j + 1 :],
                p.edges[:j] + (s1, s2) + p.edges[j + 1 :],
            )
            return PathCycleSystem(g2, tuple(paths), tuple(cycles))

    for i, c in enumerate(cycles):
        if e in c.edges:
            j = c.edges.index(e)
            L = len(c.vertices)
            a, b = c.vertices[j], c.vertices[(j + 1) % L]
            u, v = (a, b) if deg[a] == 2 else (b, a)
            # C - e walked from v to u
            if v == b:
                vs = [c.vertices[(j + 1 + t) % L] for t in range(L)]
                es = [c.edges[(j + 1 + t) % L] for t in range(L - 1)]
            else:
                vs = [c.vertices[(j - t) % L] for t in range(L)]
                es = [c.edges[(j - 1 - t) % L] for t in range(L - 1)]
            on_c = set(c.vertices)
            link = min(d for d in g.incidence[v] if g.other(d, v) not in on_c)
            z = g.other(link, v)
            k = next(t for t, p in enumerate(paths) if z in p.vertices)
            pz = _oriented(paths[k], z)
            pz = SysPath(pz.vertices[::-1], pz.edges[::-1])
            tail = _segments(g, e, u)[0]
            new = SysPath(
                pz.vertices + tuple(vs) + (x,),
                pz.edges + (link,) + tuple(es) + (tail,),
            )
            paths[k] = new
            del cycles[i]
            return PathCycleSystem(g2, tuple(paths), tuple(cycles))

    a, b = g.edges[e]
    u = a if deg[a] == 2 else b
    k = next(t for t, p in enumerate(paths) if u in p.vertices)
    pu = _oriented(paths[k], u)
    near = _segments(g, e, u)[0]
    paths[k] = SysPath((x,) + pu.vertices, (near,) + pu.edges)
    return PathCycleSystem(g2, tuple(paths), tuple(cycles))


def _one_factor(c: SysCycle) -> set[int]:
    return {c.edges[i] for i in range(0, len(c.edges), 2)}


def optimize_matching(s: PathCycleSystem, start: Iterable[int]) -> tuple[PathCycleSystem, frozenset[int]]:
    """Adjust a system and a maximum matching until every matching edge lies on the system.

    Each step strictly increases the number of matching edges on the system.
    """
    g = s.host
    M = set(augment_to_maximum(g, start))
    target = len(M)
    deg = g.degrees
    while True:
        on_before = len(M & s.edge_set())
        fixed = False
        for c in s.cycles:
            verts = set(c.vertices)
            touching = {d for d in M if set(g.edges[d]) & verts}
            if touching - set(c.edges):
                M = (M - touching) | _one_factor(c)
                fixed = True
                break
        if not fixed:
            sys_edges = s.edge_set()
            off = sorted(d for d in M if d not in sys_edges)
            if not off:
                break
            d = off[0]
            a, b = g.edges[d]
            u, v = (a, b) if deg[a] >= 3 else (b, a)
            paths = list(s.paths)
            iv = next(t for t, p in enumerate(paths) if v in p.vertices)
            iu = next(t for t, p in enumerate(paths) if u in p.vertices)
            pv = _oriented(paths[iv], v)
            if iu != iv:
                pu = paths[iu]
                j = pu.vertices.index(u)
                head = SysPath(pu.vertices[: j + 1] + pv.vertices, pu.edges[:j] + (d,) + pv.edges)
                rest = SysPath(pu.vertices[j + 1 :], pu.edges[j + 1 :])
                paths[iu] = head
                paths[iv] = rest
            else:
                j = pv.vertices.index(u)
                if j == 1:
                    paths[iv] = SysPath(pv.vertices, (d,) + pv.edges[1:])
                else:
                    vs = pv.vertices[j - 1 :: -1] + pv.vertices[j:]
                    es = pv.edges[j - 2 :: -1] + (d,) + pv.edges[j:]
                    paths[iv] = SysPath(vs, es)
            s = PathCycleSystem(g, tuple(paths), s.cycles)
        assert len(M) == target
        assert len(M & s.edge_set()) > on_before
    return s, frozenset(M)


def lift_system(g: Multigraph, w: SystemWitness, e: int) -> SystemWitness:
    """Carry a system through the 1-subdivision of ``e``, keeping the path count."""
    _require_lift_hypothesis(g)
    if w.system.host != g:
        raise GraphError("witness lives on a different graph")
    lifted = _structural_lift(g, w.system, e)
    g2 = lifted.host
    start: set[int] = set()
    if w.included_max_matching is not None:
        start = set(w.included_max_matching.edges) - {e}
    lifted, M = optimize_matching(lifted, start)
    props = system_properties(lifted, M)
    assert all(props.values()), props
    assert len(lifted.paths) == len(w.system.paths)
    for c in lifted.cycles:
        assert len(M & set(c.edges)) * 2 == len(c.edges)
    pair = alternate_system(lifted)
    return SystemWitness(lifted, pair, Matching(g2, M))


# ---------------------------------------------------------------- subdivision and pairs


def _require_subdivision_hypothesis(g: Multigraph) -> None:
    _require_lift_hypothesis(g)
    if is_cycle_graph(g) and g.n % 2 == 0:
        raise PreconditionError("even cycles are excluded")


def _place(g2: Multigraph, H: set[int], H2: set[int], edges: Sequence[int], first: int) -> None:
    for i, d in enumerate(edges):
        ((H, H2)[(first + i) % 2]).add(d)


def transform_pair_through_subdivision(
    g: Multigraph, pair: tuple[Iterable[int], Iterable[int]], e: int
) -> tuple[frozenset[int], frozenset[int]]:
    """Map a disjoint pair on ``g`` to one on the 1-subdivision of ``e`` with one more edge."""
    _require_subdivision_hypothesis(g)
    H, H2 = set(pair[0]), set(pair[1])
    if H & H2:
        raise GraphError("pair is not disjoint")
    g2, _ = subdivide_edge(g, e, 1)
    deg = g.degrees

    def lift_walk(vs: Sequence[int], es: Sequence[int]) -> list[int]:
        out = []
        for i, d in enumerate(es):
            out.extend(_segments(g, d, vs[i]) if d == e else (d,))
        return out

    if e not in H | H2:
        a, b = g.edges[e]
        u = a if deg[a] == 2 else b
        f = next(d for d in g.incidence[u] if d != e)
        near = _segments(g, e, u)[0]
        if f not in H:
            H.add(near)
        else:
            H2.add(near)
        return frozenset(H), frozenset(H2)

    comp = next(c for c in path_cycle_components(g, H | H2) if e in c.edges)
    if not comp.closed:
        new = lift_walk(comp.vertices, comp.edges)
        H -= set(comp.edges)
        H2 -= set(comp.edges)
        _place(g2, H, H2, new, 0)
        return frozenset(H), frozenset(H2)

    vs, es = list(comp.vertices), list(comp.edges)
    L = len(vs)
    on_c = set(vs)
    i = next(t for t, x in enumerate(vs) if deg[x] >= 3)
    v = vs[i]
    link = min(d for d in g.incidence[v] if g.other(d, v) not in on_c)
    u = g.other(link, v)
    other_u = next(d for d in g.incidence[u] if d != link)
    # cycle edges at v are es[i] (to vs[i+1]) and es[i-1] (to vs[i-1]); drop one that is not e
    if es[i] != e:
        f_pos = i
        walk_v = [vs[(i - t) % L] for t in range(L)]
        walk_e = [es[(i - 1 - t) % L] for t in range(L - 1)]
    else:
        f_pos = (i - 1) % L
        walk_v = [vs[(i + t) % L] for t in range(L)]
        walk_e = [es[(i + t) % L] for t in range(L - 1)]
    assert es[f_pos] != e
    path_v = [u] + walk_v
    path_e = [link] + walk_e
    new = lift_walk(path_v, path_e)
    H -= set(es)
    H2 -= set(es)
    _place(g2, H, H2, new, 0 if other_u not in H else 1)
    return frozenset(H), frozenset(H2)


def nu2_subdivision_value(g: Multigraph, e: int) -> int:
    """Exact two-matching number of the 1-subdivision of ``e``, predicted from that of ``g``."""
    _require_subdivision_hypothesis(g)
    if not 0 <= e < g.m:
        raise GraphError("edge out of range")
    base = nu_k(g, 2).value
    return base + (2 if is_cycle_graph(g) else 1)


__all__ = [
    "PathCycleSystem",
    "PreconditionError",
    "SysCycle",
    "SysPath",
    "SystemWitness",
    "alternate_system",
    "build_system",
    "check_structure",
    "expected_path_count",
    "lift_system",
    "matching_number",
    "nu2_subdivision_value",
    "optimize_matching",
    "system_alternating_pair",
    "system_properties",
    "transform_pair_through_subdivision",
]
