"""Exact values by complete search: matching number, nu_k, alpha_k, chromatic index.

Everything here is exponential in the worst case and intended for graphs with
at most a few dozen edges.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .blossom import max_cardinality_mate
from .graph import GraphError, Matching, MatchingFamily, Multigraph

sys.setrecursionlimit(max(10000, sys.getrecursionlimit()))


@dataclass(frozen=True)
class NuResult:
    k: int
    value: int
    witness: MatchingFamily


@dataclass(frozen=True)
class AlphaResult:
    k: int
    value: int
    witness: MatchingFamily


def _simple_adjacency(g: Multigraph) -> list[list[int]]:
    adj = [sorted({g.other(e, v) for e in g.incidence[v] if not g.is_loop(e)}) for v in range(g.n)]
    return adj


def _mate_to_edges(g: Multigraph, mate: list[int]) -> frozenset[int]:
    out = set()
    for u, v in enumerate(mate):
        if v > u:
            out.add(min(g.edges_between(u, v)))
    return frozenset(out)


def _check_loopless(g: Multigraph) -> None:
    if g.has_loops():
        raise GraphError("matchings are only defined on loopless graphs")


def matching_number(g: Multigraph) -> int:
    mate = max_cardinality_mate(g.n, _simple_adjacency(g))
    return sum(1 for v in mate if v != -1) // 2


def augment_to_maximum(g: Multigraph, edges: Iterable[int]) -> frozenset[int]:
    """Grow a matching to a maximum one by augmenting paths."""
    mate = [-1] * g.n
    for e in edges:
        u, v = g.edges[e]
        mate[u], mate[v] = v, u
    keep = {e for e in edges}
    mate = max_cardinality_mate(g.n, _simple_adjacency(g), mate)
    out = set()
    for u, v in enumerate(mate):
        if v > u:
            mine = [e for e in g.edges_between(u, v) if e in keep]
            out.add(mine[0] if mine else min(g.edges_between(u, v)))
    return frozenset(out)


def maximum_matching(g: Multigraph) -> Matching:
    """Lexicographically smallest (by sorted edge ids) maximum matching."""
    _check_loopless(g)
    adj = _simple_adjacency(g)
    target = matching_number(g)
    active = [True] * g.n
    chosen: list[int] = []
    for e, (u, v) in enumerate(g.edges):
        if len(chosen) == target:
            break
        if not (active[u] and active[v]):
            continue
        active[u] = active[v] = False
        mate = max_cardinality_mate(g.n, adj, active=active)
        rest = sum(1 for x in mate if x != -1) // 2
        if rest + len(chosen) + 1 == target:
            chosen.append(e)
        else:
            active[u] = active[v] = True
    return Matching(g, frozenset(chosen))


def _edge_order(g: Multigraph) -> list[int]:
    """Non-loop edges grouped around vertices in BFS order."""
    seen_v = [False] * g.n
    seen_e = set()
    order = []
    for s in range(g.n):
        if seen_v[s]:
            continue
        seen_v[s] = True
        q = deque([s])
        while q:
            x = q.popleft()
            for e in g.incidence[x]:
                if g.is_loop(e):
                    continue
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                y = g.other(e, x)
                if not seen_v[y]:
                    seen_v[y] = True
                    q.append(y)
    return order


class _ColorSearch:
    """Branch and bound over labels {uncoloured, 1..k} per edge.

    Colour symmetry is broken by only opening colour ``c + 1`` once colour
    ``c`` is in use.  The bound is ``coloured + floor(sum_v min(k - load(v),
    undecided(v)) / 2)``.
    """

    def __init__(self, g: Multigraph, k: int):
        self.g = g
        self.k = k
        self.order = _edge_order(g)
        self.ends = [g.edges[e] for e in self.order]
        self.load = [0] * g.n
        self.rem = [0] * g.n
        for u, v in self.ends:
            self.rem[u] += 1
            self.rem[v] += 1
        self.cap = sum(min(k, r) for r in self.rem)
        self.masks = [0] * k
        self.sizes = [0] * k
        self.assign = [-1] * len(self.order)
        self.best_assign: list[int] | None = None

    def _contrib(self, x: int) -> int:
        return min(self.k - self.load[x], self.rem[x])

    def _shift(self, x: int, dload: int, drem: int) -> None:
        self.cap -= self._contrib(x)
        self.load[x] += dload
        self.rem[x] += drem
        self.cap += self._contrib(x)

    def run_total(self, upper: int) -> int:
        self.best = -1
        self.upper = upper
        self._total(0, 0, 0)
        return self.best

    def _total(self, i: int, colored: int, used: int) -> bool:
        if colored + self.cap // 2 <= self.best:
            return False
        if i == len(self.order):
            self.best = colored
            self.best_assign = list(self.assign)
            return self.best >= self.upper
        u, v = self.ends[i]
        self._shift(u, 0, -1)
        self._shift(v, 0, -1)
        bits = (1 << u) | (1 << v)
        done = False
        for c in range(min(used + 1, self.k)):
            if self.masks[c] & bits:
                continue
            self.masks[c] |= bits
            self._shift(u, 1, 0)
            self._shift(v, 1, 0)
            self.assign[i] = c
            done = self._total(i + 1, colored + 1, max(used, c + 1))
            self.assign[i] = -1
            self._shift(u, -1, 0)
            self._shift(v, -1, 0)
            self.masks[c] ^= bits
            if done:
                break
        if not done:
            done = self._total(i + 1, colored, used)
        self._shift(u, 0, 1)
        self._shift(v, 0, 1)
        return done

    def run_alpha(self, target: int, cap: int) -> int:
        self.best = -1
        self.target = target
        self.cap_alpha = cap
        self._alpha(0, 0, 0)
        return self.best

    def _alpha(self, i: int, colored: int, used: int) -> bool:
        if colored + self.cap // 2 < self.target:
            return False
        left = len(self.order) - i
        if max(self.sizes) + left <= self.best:
            return False
        if i == len(self.order):
            top = max(self.sizes)
            if top > self.best:
                self.best = top
                self.best_assign = list(self.assign)
            return self.best >= self.cap_alpha
        u, v = self.ends[i]
        self._shift(u, 0, -1)
        self._shift(v, 0, -1)
        bits = (1 << u) | (1 << v)
        done = False
        for c in range(min(used + 1, self.k)):
            if self.masks[c] & bits:
                continue
            self.masks[c] |= bits
            self.sizes[c] += 1
            self._shift(u, 1, 0)
            self._shift(v, 1, 0)
            self.assign[i] = c
            done = self._alpha(i + 1, colored + 1, max(used, c + 1))
            self.assign[i] = -1
            self._shift(u, -1, 0)
            self._shift(v, -1, 0)
            self.sizes[c] -= 1
            self.masks[c] ^= bits
            if done:
                break
        if not done:
            done = self._alpha(i + 1, colored, used)
        self._shift(u, 0, 1)
        self._shift(v, 0, 1)
        return done

    def family(self) -> MatchingFamily:
        assert self.best_assign is not None
        members: list[set[int]] = [set() for _ in range(self.k)]
        for e, c in zip(self.order, self.best_assign):
            if c >= 0:
                members[c].add(e)
        return _normalized(self.g, members)


def _normalized(g: Multigraph, members: Iterable[Iterable[int]]) -> MatchingFamily:
    ordered = sorted((frozenset(x) for x in members), key=lambda s: (-len(s), sorted(s)))
    return MatchingFamily(g, tuple(ordered))


def _upper_bound(g: Multigraph, k: int, nu1: int) -> int:
    simple = sum(1 for e in range(g.m) if not g.is_loop(e))
    by_degree = sum(min(k, d) for d in g.degrees) // 2
    return min(simple, k * nu1, by_degree)


def nu_k(g: Multigraph, k: int) -> NuResult:
    """Maximum total size of ``k`` pairwise edge-disjoint matchings, with witness."""
    _check_loopless(g)
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        mm = maximum_matching(g)
        return NuResult(1, len(mm), MatchingFamily(g, (mm.edges,)))
    search = _ColorSearch(g, k)
    value = search.run_total(_upper_bound(g, k, matching_number(g)))
    return NuResult(k, value, search.family())


def alpha_k(g: Multigraph, k: int, nu: int | None = None) -> AlphaResult:
    """Largest member size over all optimal ``k``-families."""
    _check_loopless(g)
    if nu is None:
        nu = nu_k(g, k).value
    nu1 = matching_number(g)
    search = _ColorSearch(g, k)
    value = search.run_alpha(nu, nu1)
    return AlphaResult(k, value, search.family())


def chromatic_index(g: Multigraph) -> int:
    _check_loopless(g)
    if g.m == 0:
        return 0
    k = max(g.max_degree, 1)
    while nu_k(g, k).value < g.m:
        k += 1
    return k


def all_maximum_matchings(g: Multigraph) -> list[frozenset[int]]:
    """Every maximum matching, found by vertex-wise branching with a deficiency budget."""
    _check_loopless(g)
    nu = matching_number(g)
    budget = g.n - 2 * nu
    out: list[frozenset[int]] = []
    matched = [False] * g.n
    chosen: list[int] = []

    def rec(v: int, skipped: int) -> None:
        while v < g.n and matched[v]:
            v += 1
        if v == g.n:
            out.append(frozenset(chosen))
            return
        matched[v] = True
        for e in g.incidence[v]:
            w = g.other(e, v)
            if w == v or matched[w]:
                continue
            matched[w] = True
            chosen.append(e)
            rec(v + 1, skipped)
            chosen.pop()
            matched[w] = False
        if skipped < budget:
            rec(v + 1, skipped + 1)
        matched[v] = False

    rec(0, 0)
    return out


def max_disjoint_maximum_matchings(g: Multigraph) -> int:
    """Largest number of pairwise edge-disjoint maximum matchings (0 if edgeless)."""
    if matching_number(g) == 0:
        return 0
    masks = sorted({sum(1 << e for e in mm) for mm in all_maximum_matchings(g)})
    nu = matching_number(g)
    ceiling = g.m // nu
    best = 0

    def rec(start: int, used: int, count: int) -> bool:
        nonlocal best
        if count > best:
            best = count
            if best >= ceiling:
                return True
        for i in range(start, len(masks)):
            if masks[i] & used == 0:
                if rec(i + 1, used | masks[i], count + 1):
                    return True
        return False

    rec(0, 0, 0)
    return best
