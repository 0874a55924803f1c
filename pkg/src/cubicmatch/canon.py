"""Canonical labeling of small multigraphs (loops and edge labels allowed).

Colour refinement followed by exhaustive individualisation of the first
non-singleton cell; the canonical form is the lexicographically smallest
relabelled edge list over all leaves of the search tree.  Fine for the
graph sizes used here (a few dozen vertices, mostly degree <= 3).
"""

from __future__ import annotations

import hashlib
from typing import Sequence

from .graph import Multigraph

CanonicalForm = tuple[int, tuple[tuple[int, int, int], ...]]


def _refine(colors: list[int], adj: list[list[tuple[int, int]]]) -> list[int]:
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], lab) for w, lab in adj[v])))
            for v in range(len(colors))
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Multigraph, labels: Sequence[int] | None = None) -> CanonicalForm:
    """Isomorphism-invariant encoding of ``g`` (optionally with integer edge labels)."""
    n = g.n
    labels = list(labels) if labels is not None else [0] * g.m
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), lab in zip(g.edges, labels):
        if u == v:
            adj[u].append((u, -1 - lab))
        else:
            adj[u].append((v, lab))
            adj[v].append((u, lab))
    best: list[tuple[tuple[int, int, int], ...] | None] = [None]

    def encode(colors: list[int]) -> tuple[tuple[int, int, int], ...]:
        return tuple(sorted(
            (min(colors[u], colors[v]), max(colors[u], colors[v]), lab)
            for (u, v), lab in zip(g.edges, labels)
        ))

    def search(colors: list[int]) -> None:
        colors = _refine(colors, adj)
        if len(set(colors)) == n:
            code = encode(colors)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for v in range(n):
            if colors[v] == target:
                search([2 * c + (0 if w == v else 1) if c == target else 2 * c + 1
                        for w, c in enumerate(colors)])

    if n == 0:
        return (0, ())
    search([0] * n)
    assert best[0] is not None
    return (n, best[0])


def are_isomorphic(a: Multigraph, b: Multigraph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    return canonical_form(a) == canonical_form(b)


def canonical_graph(g: Multigraph) -> Multigraph:
    n, code = canonical_form(g)
    return Multigraph(n, tuple((u, v) for u, v, _ in code), loops=g.loops)


def graph_id(g: Multigraph) -> str:
    n, code = canonical_form(g)
    text = f"{n}:" + ";".join(f"{u}-{v}" for u, v, _ in code)
    return hashlib.sha256(text.encode()).hexdigest()[:16]
