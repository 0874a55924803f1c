"""Graph generators: exhaustive cubic (pseudo)graph enumeration and seeded random samples."""

from __future__ import annotations

import random
from typing import Iterator

from .canon import canonical_form
from .graph import GraphError, Multigraph, subdivide_edge


def _connected_regular(n: int, allow_loops: bool) -> Iterator[Multigraph]:
    """Labelled connected 3-regular graphs, built stub by stub.

    The lowest unfinished vertex is always extended, either to a vertex that
    has already been reached or to the next fresh one.  Partners of one vertex
    are chosen in nondecreasing order to avoid reordering duplicates.
    """
    deg = [0] * n
    edges: list[tuple[int, int]] = []
    last = [-1] * n

    def rec(fresh: int) -> Iterator[Multigraph]:
        v = next((x for x in range(n) if deg[x] < 3), None)
        if v is None:
            yield Multigraph(n, tuple(edges), loops=allow_loops)
            return
        if deg[v] == 0 and v > 0:
            return  # the reached part closed up before using every vertex
        lo = max(v, last[v])
        for w in range(lo, min(fresh + 1, n)):
            if w == v:
                if not allow_loops or deg[v] > 1:
                    continue
                step = 2
            else:
                if deg[w] >= 3:
                    continue
                step = 1
            deg[v] += step
            if w != v:
                deg[w] += 1
            prev = last[v]
            last[v] = w
            edges.append((v, w))
            yield from rec(max(fresh, w + 1))
            edges.pop()
            last[v] = prev
            deg[v] -= step
            if w != v:
                deg[w] -= 1

    yield from rec(1)


def _dedup(graphs: Iterator[Multigraph]) -> list[Multigraph]:
    seen: dict = {}
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
    return [seen[k] for k in sorted(seen)]


def enumerate_cubic(n: int) -> list[Multigraph]:
    """Connected loopless cubic multigraphs on ``n`` vertices, one per isomorphism class."""
    if n < 2 or n % 2:
        raise GraphError("cubic graphs need an even vertex count of at least 2")
    return _dedup(_connected_regular(n, allow_loops=False))


def enumerate_cubic_pseudographs(n0: int) -> list[Multigraph]:
    """Connected cubic pseudo-graphs (loops allowed) on ``n0`` vertices, up to isomorphism."""
    if n0 < 2 or n0 % 2:
        raise GraphError("cubic pseudo-graphs need an even vertex count of at least 2")
    return _dedup(_connected_regular(n0, allow_loops=True))


def random_cubic(n: int, seed: int) -> Multigraph:
    """Configuration-model pairing; any pairing that creates a loop is discarded and redrawn."""
    if n < 2 or n % 2:
        raise GraphError("cubic graphs need an even vertex count of at least 2")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    while True:
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        if all(a != b for a, b in pairs):
            return Multigraph(n, tuple(sorted((min(a, b), max(a, b)) for a, b in pairs)))


def random_subcubic(n: int, seed: int) -> Multigraph:
    """Random graph with all degrees in {2, 3}.

    A random cubic graph (subdivided once when ``n`` is odd) loses a random
    subset of a random maximal matching on its degree-3 vertices.
    """
    if n < 3:
        raise GraphError("need at least 3 vertices")
    rng = random.Random(seed)
    if n % 2 == 0:
        g = random_cubic(n, rng.randrange(1 << 30))
    else:
        base = random_cubic(n - 1, rng.randrange(1 << 30))
        g, _ = subdivide_edge(base, rng.randrange(base.m), 1)
    order = list(range(g.m))
    rng.shuffle(order)
    used: set[int] = set()
    drop = set()
    for e in order:
        a, b = g.edges[e]
        if g.degrees[a] == 3 and g.degrees[b] == 3 and a not in used and b not in used:
            used |= {a, b}
            if rng.random() < 0.5:
                drop.add(e)
    edges = tuple(sorted(g.edges[e] for e in range(g.m) if e not in drop))
    return Multigraph(n, edges)
