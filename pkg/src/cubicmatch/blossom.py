"""Edmonds' blossom algorithm for maximum cardinality matching.

Works on multigraphs by ignoring loops and collapsing parallel edges; the
caller maps matched vertex pairs back to edge ids.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence


def max_cardinality_mate(
    n: int,
    adj: Sequence[Sequence[int]],
    mate: list[int] | None = None,
    active: Sequence[bool] | None = None,
) -> list[int]:
    """Return ``mate`` (``-1`` for exposed vertices) of a maximum matching.

    ``mate`` may carry an initial matching to be augmented.  Vertices with
    ``active[v]`` false are ignored entirely.
    """
    mate = list(mate) if mate is not None else [-1] * n
    if active is None:
        active = [True] * n

    def find_path(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if not active[to] or base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return _augment(to, parent, mate)
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for v in range(n):
        if active[v] and mate[v] == -1:
            find_path(v)
    return mate


def _augment(v: int, parent: list[int], mate: list[int]) -> int:
    end = v
    while v != -1:
        pv = parent[v]
        nxt = mate[pv]
        mate[v] = pv
        mate[pv] = v
        v = nxt
    return end
