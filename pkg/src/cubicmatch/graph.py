"""Multigraph and pseudo-graph primitives.

Edges carry dense integer ids ``0..m-1`` so that parallel edges are distinct
objects.  A loop ``(v, v)`` contributes two to the degree of ``v``; loops are
only representable when the graph is built with ``loops=True``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertices/edges."""


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    loops: bool = False

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint out of range")
            if u == v and not self.loops:
                raise GraphError(f"loop at vertex {u} but loops are forbidden")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, ascending; a loop is listed once."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` with repetition for parallel edges (loops excluded)."""
        return [self.other(e, v) for e in self.incidence[v] if not self.is_loop(e)]

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self.incidence[u] if self.other(e, u) == v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.edges_between(u, v))

    def is_regular(self, r: int) -> bool:
        return all(d == r for d in self.degrees)

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)


def degree(g: Multigraph, v: int) -> int:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return g.degrees[v]


@dataclass(frozen=True)
class SubdivisionTrace:
    """Where a subdivided edge went: the replacement path in the derived graph."""

    base_edge: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def subdivide_edge(g: Multigraph, e: int, k: int) -> tuple[Multigraph, SubdivisionTrace]:
    """Replace edge ``e`` with a path of length ``k + 1``.

    New vertices get ids ``n, n+1, ...`` in path order starting from the lower
    endpoint.  The first path segment keeps id ``e``; the remaining ``k``
    segments get ids ``m, m+1, ...``.  All other ids are unchanged.
    """
    if not 0 <= e < g.m:
        raise GraphError(f"edge {e} out of range")
    if k < 0:
        raise GraphError("subdivision count must be nonnegative")
    a, b = g.edges[e]
    if k == 0:
        return g, SubdivisionTrace(e, (a, b), (e,))
    path = (a, *range(g.n, g.n + k), b)
    edges = list(g.edges)
    edges[e] = (path[0], path[1])
    for i in range(1, k + 1):
        edges.append((path[i], path[i + 1]))
    derived = Multigraph(g.n + k, tuple(edges), loops=g.loops)
    return derived, SubdivisionTrace(e, path, (e, *range(g.m, g.m + k)))


def contract_trace(g: Multigraph, trace: SubdivisionTrace) -> Multigraph:
    """Undo a subdivision: collapse the trace path back to a single edge."""
    inner = set(trace.vertices[1:-1])
    drop = set(trace.edges[1:])
    keep = [v for v in range(g.n) if v not in inner]
    relabel = {v: i for i, v in enumerate(keep)}
    a, b = trace.vertices[0], trace.vertices[-1]
    edges = []
    for i, (u, v) in enumerate(g.edges):
        if i in drop:
            continue
        if i == trace.base_edge:
            edges.append((relabel[a], relabel[b]))
        else:
            edges.append((relabel[u], relabel[v]))
    return Multigraph(len(keep), tuple(edges), loops=g.loops)


@dataclass(frozen=True)
class Matching:
    host: Multigraph
    edges: frozenset[int]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.edges))

    def is_valid(self) -> bool:
        return is_matching(self.host, self.edges)

    def saturated(self) -> set[int]:
        return {x for e in self.edges for x in self.host.edges[e]}


@dataclass(frozen=True)
class MatchingFamily:
    host: Multigraph
    members: tuple[frozenset[int], ...]

    @property
    def total(self) -> int:
        return sum(len(x) for x in self.members)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.members)

    def matchings(self) -> list[Matching]:
        return [Matching(self.host, x) for x in self.members]


def is_matching(g: Multigraph, edges: Iterable[int]) -> bool:
    seen: set[int] = set()
    for e in edges:
        if not 0 <= e < g.m:
            return False
        u, v = g.edges[e]
        if u == v or u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def validate_family(fam: MatchingFamily) -> bool:
    used: set[int] = set()
    for member in fam.members:
        if not is_matching(fam.host, member):
            return False
        if used & member:
            return False
        used |= member
    return True


@dataclass(frozen=True)
class AlternatingComponent:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    closed: bool


def _walk_components(g: Multigraph, edge_set: set[int]) -> list[AlternatingComponent]:
    """Split an edge set of maximum degree two into ordered paths and cycles."""
    inc: dict[int, list[int]] = {}
    for e in sorted(edge_set):
        u, v = g.edges[e]
        inc.setdefault(u, []).append(e)
        inc.setdefault(v, []).append(e)
    if any(len(x) > 2 for x in inc.values()):
        raise GraphError("edge set has a vertex of degree above two")
    done: set[int] = set()
    out = []

    def walk(start: int, first: int) -> tuple[list[int], list[int]]:
        vs, es = [start], []
        cur, e = start, first
        while e is not None and e not in done:
            done.add(e)
            es.append(e)
            cur = g.other(e, cur)
            vs.append(cur)
            e = next((f for f in inc[cur] if f not in done), None)
        return vs, es

    # paths first, from their lower-numbered end
    for v in sorted(inc):
        if len(inc[v]) == 1 and inc[v][0] not in done:
            vs, es = walk(v, inc[v][0])
            out.append(AlternatingComponent(tuple(vs), tuple(es), False))
    for v in sorted(inc):
        free = [e for e in inc[v] if e not in done]
        if free:
            vs, es = walk(v, free[0])
            out.append(AlternatingComponent(tuple(vs[:-1]), tuple(es), True))
    return out


def symmetric_difference_components(
    g: Multigraph, first: Matching, second: Matching
) -> list[AlternatingComponent]:
    if first.host != g or second.host != g:
        raise GraphError("matchings live on different hosts")
    return _walk_components(g, set(first.edges ^ second.edges))


def path_cycle_components(g: Multigraph, edges: Iterable[int]) -> list[AlternatingComponent]:
    """Components of an edge set whose vertices all have degree at most two."""
    return _walk_components(g, set(edges))


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    graph: Multigraph
    edge_map: tuple[int, ...]

    def lift_edges(self, local: Iterable[int]) -> frozenset[int]:
        return frozenset(self.edge_map[e] for e in local)


def connected_components(g: Multigraph) -> list[Component]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        order = [s]
        q = deque([s])
        while q:
            x = q.popleft()
            for e in g.incidence[x]:
                y = g.other(e, x)
                if not seen[y]:
                    seen[y] = True
                    order.append(y)
                    q.append(y)
        out.append(induced_subgraph(g, sorted(order)))
    return out


def induced_subgraph(g: Multigraph, vertices: Sequence[int]) -> Component:
    index = {v: i for i, v in enumerate(vertices)}
    edges, emap = [], []
    for i, (u, v) in enumerate(g.edges):
        if u in index and v in index:
            edges.append((index[u], index[v]))
            emap.append(i)
    return Component(tuple(vertices), Multigraph(len(vertices), tuple(edges), g.loops), tuple(emap))


def is_connected(g: Multigraph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def remove_edges(g: Multigraph, drop: Iterable[int]) -> Component:
    """Spanning subgraph without ``drop``; edge ids renumbered densely."""
    drop = set(drop)
    keep = [i for i in range(g.m) if i not in drop]
    return Component(
        tuple(range(g.n)),
        Multigraph(g.n, tuple(g.edges[i] for i in keep), g.loops),
        tuple(keep),
    )


def disjoint_union(graphs: Sequence[Multigraph]) -> Multigraph:
    edges, off = [], 0
    for h in graphs:
        edges.extend((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Multigraph(off, tuple(edges), any(h.loops for h in graphs))


def is_cycle_graph(g: Multigraph) -> bool:
    """Connected 2-regular graph with at least two vertices."""
    return g.n >= 2 and g.is_regular(2) and not g.has_loops() and is_connected(g)


def cycle_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, tuple(outer + spokes + inner))


def triple_edge() -> Multigraph:
    return Multigraph(2, ((0, 1), (0, 1), (0, 1)))


def theta_graph() -> Multigraph:
    """Two hubs joined by three internally disjoint paths of length two."""
    return Multigraph(5, ((0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)))

