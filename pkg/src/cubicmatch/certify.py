"""Certificates for cubic graphs and the exact inequality report.

``certify_cubic`` removes a separated maximum matching and treats each
remaining component on its own: cycles are alternated, the other components
are contracted to pseudo-graph skeletons and handed to the recursive
certifiers.  ``pair_to_triple`` turns a disjoint pair into three disjoint
matchings via lifted path-cycle systems.  ``verify_all`` compares the exact
invariants of a graph against every inequality the library checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import graph_id
from .exact import (
    alpha_k,
    chromatic_index,
    matching_number,
    max_disjoint_maximum_matchings,
    nu_k,
)
from .graph import (
    GraphError,
    Matching,
    MatchingFamily,
    Multigraph,
    connected_components,
    is_matching,
    path_cycle_components,
    remove_edges,
    validate_family,
)
from .pseudograph import (
    certify_matching,
    certify_pair,
    skeleton_edge_map,
    system_pair_on_realization,
    to_cubic_pseudograph,
)
from .separated import SeparatedMatching, separated_maximum_matching


class NotCubicError(GraphError):
    pass


def _ceil_frac(num: int, den: int) -> int:
    return -(-num // den)


@dataclass(frozen=True)
class Bound:
    name: str
    bound: int
    value: int

    @property
    def holds(self) -> bool:
        return self.value >= self.bound


@dataclass(frozen=True)
class Certificate:
    graph: Multigraph
    separated: SeparatedMatching
    pair_witness: MatchingFamily
    triple_witness: MatchingFamily
    claimed_bounds: tuple[Bound, ...]
    provenance: tuple[str, ...] = ()

    @property
    def pair_total(self) -> int:
        return self.pair_witness.total

    @property
    def triple_total(self) -> int:
        return self.triple_witness.total

    def is_valid(self) -> bool:
        if not (validate_family(self.pair_witness) and validate_family(self.triple_witness)):
            return False
        if self.pair_witness.members[0] != self.separated.matching.edges:
            return False
        if self.triple_witness.members[0] != self.separated.matching.edges:
            return False
        return all(b.holds for b in self.claimed_bounds)


def _require_cubic(g: Multigraph) -> None:
    if g.has_loops() or g.n == 0 or not g.is_regular(3):
        raise NotCubicError("input must be a loopless 3-regular multigraph")


def _cycle_alternation(comp: Multigraph) -> tuple[list[int], list[int]]:
    (cyc,) = path_cycle_components(comp, range(comp.m))
    es = list(cyc.edges)
    usable = es if len(es) % 2 == 0 else es[:-1]
    return usable[0::2], usable[1::2]


def _rest_components(g: Multigraph, drop: frozenset[int]):
    """Components of ``g`` minus ``drop``, each with a map from local edge ids to ids of ``g``."""
    rest = remove_edges(g, drop)
    for comp in connected_components(rest.graph):
        to_g = [rest.edge_map[comp.edge_map[e]] for e in range(comp.graph.m)]
        yield comp.graph, to_g


def _certify_connected(g: Multigraph):
    sep = separated_maximum_matching(g)
    F = sep.matching.edges
    single: set[int] = set()
    A: set[int] = set()
    B: set[int] = set()
    notes = []
    for comp, to_g in _rest_components(g, F):
        if comp.max_degree == 2:
            a, b = _cycle_alternation(comp)
            single |= {to_g[x] for x in a}
            A |= {to_g[x] for x in a}
            B |= {to_g[x] for x in b}
            notes.append(f"cycle of length {comp.n}: alternation")
            continue
        skel = to_cubic_pseudograph(comp)
        emap = skeleton_edge_map(skel)
        one = certify_matching(skel.pseudo, skel.kmap)
        two = certify_pair(skel.pseudo, skel.kmap)
        single |= {to_g[emap[x]] for x in one.edges}
        A |= {to_g[emap[x]] for x in two.members[0]}
        B |= {to_g[emap[x]] for x in two.members[1]}
        notes.append(
            f"skeleton on {skel.pseudo.n} branch vertices, {comp.n} vertices: "
            f"matching {len(one)}, pair {two.total}"
        )
    return sep, F, frozenset(single), frozenset(A), frozenset(B), notes


def certify_cubic(g: Multigraph) -> Certificate:
    """Witnesses for the matching, pair and triple lower bounds of a cubic graph."""
    _require_cubic(g)
    F: set[int] = set()
    single: set[int] = set()
    A: set[int] = set()
    B: set[int] = set()
    unsat: set[int] = set()
    bad = 0
    fallback = False
    notes: list[str] = []
    for comp in connected_components(g):
        sep, f, s, a, b, nt = _certify_connected(comp.graph)
        lift = comp.lift_edges
        F |= lift(f)
        single |= lift(s)
        A |= lift(a)
        B |= lift(b)
        unsat |= {comp.vertices[v] for v in sep.unsaturated}
        bad += sep.bad_pairs
        fallback |= sep.used_fallback
        notes.extend(nt)
    Fm = Matching(g, frozenset(F))
    sep_all = SeparatedMatching(Fm, frozenset(unsat), bad, fallback)
    pair = MatchingFamily(g, (frozenset(F), frozenset(single)))
    triple = MatchingFamily(g, (frozenset(F), frozenset(A), frozenset(B)))
    n = g.n
    bounds = (
        Bound("nu1_2_5", _ceil_frac(2 * n, 5), len(F)),
        Bound("nu2_4_5", _ceil_frac(4 * n, 5), pair.total),
        Bound("nu3_7_6", _ceil_frac(7 * n, 6), triple.total),
    )
    cert = Certificate(g, sep_all, pair, triple, bounds, tuple(notes))
    assert cert.is_valid(), bounds
    return cert


@dataclass(frozen=True)
class TripleConstruction:
    """Three disjoint matchings grown from a maximal first member."""

    family: MatchingFamily
    extension: frozenset[int]
    rest_matching_number: int
    degree3_count: int

    @property
    def guaranteed(self) -> int:
        """``|H| + 2 mu - l/2``, the size the construction promises."""
        return len(self.family.members[0]) + 2 * self.rest_matching_number - self.degree3_count // 2


def _greedy_extension(g: Multigraph, H: frozenset[int], prefer: frozenset[int]) -> frozenset[int]:
    # edges of the partner matching go first so the pair total never drops
    used = {x for e in H for x in g.edges[e]}
    added = set()
    order = sorted(range(g.m), key=lambda e: (e not in prefer, e))
    for e in order:
        a, b = g.edges[e]
        if a not in used and b not in used:
            used |= {a, b}
            added.add(e)
    return frozenset(added)


def pair_to_triple(g: Multigraph, H, H2=()) -> TripleConstruction:
    """Add two disjoint matchings of ``g`` minus ``H`` built from path-cycle systems.

    A non-maximal ``H`` is first extended greedily, taking edges of ``H2``
    before any others and each group in id order; the added edges are
    reported as ``extension``.
    """
    _require_cubic(g)
    H = frozenset(H)
    H2 = frozenset(H2)
    if not is_matching(g, H) or not is_matching(g, H2):
        raise GraphError("inputs must be matchings")
    if H & H2:
        raise GraphError("pair members must be disjoint")
    ext = _greedy_extension(g, H, H2)
    H = H | ext
    A: set[int] = set()
    B: set[int] = set()
    for comp, to_g in _rest_components(g, H):
        if comp.max_degree == 2:
            a, b = _cycle_alternation(comp)
        else:
            skel = to_cubic_pseudograph(comp)
            emap = skeleton_edge_map(skel)
            _, a0, b0, _ = system_pair_on_realization(skel.pseudo, skel.kmap)
            a = [emap[x] for x in a0]
            b = [emap[x] for x in b0]
        A |= {to_g[x] for x in a}
        B |= {to_g[x] for x in b}
    rest = remove_edges(g, H).graph
    mu = matching_number(rest)
    deg3 = g.n - 2 * len(H)
    assert deg3 % 2 == 0
    fam = MatchingFamily(g, (H, frozenset(A), frozenset(B)))
    out = TripleConstruction(fam, ext, mu, deg3)
    assert validate_family(fam)
    assert fam.total >= out.guaranteed, (fam.total, out.guaranteed)
    return out


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    slack: int


@dataclass(frozen=True)
class InequalityReport:
    graph_id: str
    n: int
    m: int
    nu: tuple[int, int, int, int]
    alpha2: int
    chromatic_index: int
    disjoint_maximum_matchings: int
    checks: tuple[Check, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


def _check(name: str, slack: int) -> Check:
    return Check(name, slack >= 0, slack)


def verify_all(g: Multigraph) -> InequalityReport:
    """Exact invariants of a cubic graph and the slack of every checked inequality."""
    _require_cubic(g)
    n, m = g.n, g.m
    nu = tuple(nu_k(g, k).value for k in (1, 2, 3, 4))
    n1, n2, n3, n4 = nu
    a2 = alpha_k(g, 2, nu=n2).value
    chi = chromatic_index(g)
    dmm = max_disjoint_maximum_matchings(g)
    checks = (
        _check("nu1_2_5", n1 - _ceil_frac(2 * n, 5)),
        _check("nu1_5n_2_12", n1 - _ceil_frac(5 * n - 2, 12)),
        _check("nu2_4_5", n2 - _ceil_frac(4 * n, 5)),
        _check("nu3_7_6", n3 - _ceil_frac(7 * n, 6)),
        _check("arithmetical_mean", n + 2 * n3 - 4 * n2),
        _check("nu2_plus_nu3", n2 + n3 - 2 * n),
        _check("alpha2_at_most_nu1", n1 - a2),
        _check("alpha2_at_least_4nu1_5", 5 * a2 - 4 * n1),
        _check("disjoint_max_matchings_at_most_3", 3 - dmm),
        _check("nu4_equals_m", -abs(n4 - m)),
        _check("chromatic_index_3_or_4", min(chi - 3, 4 - chi)),
    )
    return InequalityReport(graph_id(g), n, m, nu, a2, chi, dmm, checks)


def tight_value(report: InequalityReport, bound_name: str) -> bool:
    """Whether the named inequality holds with equality for the graph behind ``report``."""
    n = report.n
    n1, n2, n3, _ = report.nu
    if bound_name == "nu1_2_5":
        return 5 * n1 == 2 * n
    if bound_name == "nu2_4_5":
        return 5 * n2 == 4 * n
    if bound_name == "nu3_7_6":
        return 6 * n3 == 7 * n
    if bound_name == "arithmetical_mean":
        return 4 * n2 == n + 2 * n3
    raise ValueError(f"unknown bound {bound_name!r}")


TIGHT_BOUNDS = ("nu1_2_5", "nu2_4_5", "nu3_7_6", "arithmetical_mean")
