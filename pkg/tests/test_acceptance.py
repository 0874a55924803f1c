"""Acceptance criteria 1-8, one test each; every test prints a single PASS/FAIL line."""

from __future__ import annotations

import itertools
import time
from fractions import Fraction

import pytest

from cubicmatch.canon import canonical_form
from cubicmatch.certify import certify_cubic, pair_to_triple, verify_all
from cubicmatch.exact import matching_number, nu_k
from cubicmatch.generate import enumerate_cubic, enumerate_cubic_pseudographs, random_cubic, random_subcubic
from cubicmatch.graph import (
    Multigraph,
    complete_graph,
    cycle_graph,
    is_connected,
    petersen_graph,
    subdivide_edge,
    triple_edge,
    validate_family,
)
from cubicmatch.pseudograph import (
    NotApplicable,
    applicable_loops,
    certify_matching,
    certify_pair,
    cut_loop,
    derive_k_after_cut,
    in_class_M,
    is_trivial,
    loop_ids,
    premise_six_sevenths,
    realize,
    to_cubic_pseudograph,
)
from cubicmatch.separated import count_bad_pairs, separated_maximum_matching
from cubicmatch.systems import nu2_subdivision_value
from oracles import Brute, has_separated_maximum_matching


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@pytest.fixture
def report(capsys):
    def emit(number: int, failures: list, detail: str) -> None:
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {number}] {status}: {detail}" + (f" | first failure: {failures[0]}" if failures else ""))
        assert not failures, failures[:5]

    return emit


def small_cubic():
    return [g for n in (2, 4, 6, 8) for g in enumerate_cubic(n)]


def test_criterion_1_exhaustive_verification(report):
    start = time.perf_counter()
    failures = []
    graphs = small_cubic()
    for g in graphs:
        rep = verify_all(g)
        if not rep.passed:
            failures.append((g.edges, rep.failures()))
        n1, n2, n3, n4 = rep.nu
        if not (1 <= Fraction(n1, rep.alpha2) <= Fraction(5, 4)):
            failures.append((g.edges, "nu1/alpha2 out of range"))
        b = Brute(g)
        if (b.nu(1), b.nu(2), b.nu(3)) != (n1, n2, n3):
            failures.append((g.edges, "solver disagrees with brute force"))
    elapsed = time.perf_counter() - start
    if elapsed >= 600:
        failures.append(f"runtime {elapsed:.1f}s")
    report(1, failures, f"{len(graphs)} cubic multigraphs with n<=8 pass every check in {elapsed:.1f}s")


def test_criterion_2_tight_instances(report):
    failures = []
    start = time.perf_counter()
    cases = [
        ("triple edge", triple_edge(), 2, 3),
        ("K4", complete_graph(4), 4, 6),
        ("Petersen", petersen_graph(), 9, 13),
    ]
    for name, g, want2, want3 in cases:
        got2, got3 = nu_k(g, 2).value, nu_k(g, 3).value
        if (got2, got3) != (want2, want3):
            failures.append((name, got2, got3))
        if 4 * got2 != g.n + 2 * got3:
            failures.append((name, "arithmetical mean not tight"))
    g = triple_edge()
    if not (nu_k(g, 2).value == ceil_div(8, 5) and nu_k(g, 3).value == ceil_div(14, 6)):
        failures.append("triple edge misses the ceiling bounds")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s")
    report(2, failures, f"triple edge (2,3), K4 (4,6), Petersen (9,13) tight in {elapsed:.2f}s")


def test_criterion_3_certificates(report):
    failures = []
    graphs = small_cubic() + [random_cubic(n, s) for n in (10, 12) for s in range(1, 251)]
    exact_checked = 0
    for g in graphs:
        n = g.n
        cert = certify_cubic(g)
        if not cert.is_valid():
            failures.append((g.edges, "invalid"))
        if len(cert.separated.matching) < ceil_div(2 * n, 5):
            failures.append((g.edges, "matching"))
        if cert.pair_total < ceil_div(4 * n, 5):
            failures.append((g.edges, "pair"))
        if cert.triple_total < ceil_div(7 * n, 6):
            failures.append((g.edges, "triple"))
        if n <= 10:
            exact_checked += 1
            if cert.pair_total > nu_k(g, 2).value or cert.triple_total > nu_k(g, 3).value:
                failures.append((g.edges, "exceeds optimum"))
    report(3, failures, f"{len(graphs)} certificates meet the bounds; {exact_checked} compared with exact optima")


def test_criterion_4_closed_form(report):
    failures = []
    count = 0
    for n0 in (2, 4, 6):
        for g0 in enumerate_cubic_pseudographs(n0):
            g = realize(g0, [1] * g0.m).graph
            count += 1
            if 5 * nu_k(g, 1).value != 2 * g.n or 5 * nu_k(g, 2).value != 4 * g.n:
                failures.append((g0.edges, "2,3"))
    # 1-subdivisions of 4-regular multigraphs give degrees 2 and 4
    quartic = [Multigraph(2, ((0, 1),) * 4), complete_graph(5)]
    for h in quartic:
        g = realize(h, [1] * h.m).graph
        count += 1
        if 6 * nu_k(g, 1).value != 2 * g.n or 6 * nu_k(g, 2).value != 4 * g.n:
            failures.append((h.edges, "2,4"))
    report(4, failures, f"{count} biregular realizations match the closed forms")


def _subdivision_instances(count: int):
    out = [cycle_graph(3), cycle_graph(5), cycle_graph(7)]
    seed = 0
    while len(out) < count:
        seed += 1
        g = random_subcubic(5 + seed % 6, seed)
        if not is_connected(g):
            continue
        if g.max_degree == 3:
            skel = to_cubic_pseudograph(g)
            g = realize(skel.pseudo, [max(1, x) for x in skel.kmap]).graph
            if g.n > 14:
                continue
        elif g.n % 2 == 0:
            continue
        out.append(g)
    return out


def test_criterion_5_subdivision_lemma(report):
    failures = []
    instances = _subdivision_instances(50)
    edges_checked = 0
    for g in instances:
        for e in range(g.m):
            h, _ = subdivide_edge(g, e, 1)
            edges_checked += 1
            if nu2_subdivision_value(g, e) != nu_k(h, 2).value:
                failures.append((g.edges, e))
    for length in (3, 5, 7):
        g = cycle_graph(length)
        if nu2_subdivision_value(g, 0) != nu_k(g, 2).value + 2:
            failures.append(("odd cycle", length))
    report(5, failures, f"{len(instances)} instances, {edges_checked} subdivided edges agree with the exact solver")


def _kmaps(g0):
    ranges = [range(1, 4) if g0.is_loop(d) else range(2, 4) for d in range(g0.m)]
    return itertools.product(*ranges)


def _below_seven_halves(n0: int, n: int) -> bool:
    return 2 * n < 7 * n0


def test_criterion_6_pseudograph_lemma(report):
    failures = []
    instances = 0
    exact_checked = 0
    seen: set = set()

    def walk(g0, k):
        """Every maximal cut sequence from (g0, k), memoised on labelled isomorphism class."""
        key = canonical_form(g0, list(k))
        if key in seen:
            return
        seen.add(key)
        n0, n = g0.n, g0.n + sum(k)
        loops = applicable_loops(g0)
        if not loops and loop_ids(g0) and not is_trivial(g0):
            failures.append((g0.edges, k, "cutting stopped early"))
        if _below_seven_halves(n0, n) and not in_class_M(g0, k).in_M:
            failures.append((g0.edges, k, "(i)"))
        for e in loops:
            cut = cut_loop(g0, e)
            k2 = derive_k_after_cut(k, cut)
            n2 = cut.result.n + sum(k2)
            if not is_connected(cut.result):
                failures.append((g0.edges, k, "connectivity"))
            if _below_seven_halves(n0, n) and not _below_seven_halves(cut.result.n, n2):
                failures.append((g0.edges, k, "(h)"))
            walk(cut.result, k2)

    for n0 in (2, 4, 6):
        for g0 in enumerate_cubic_pseudographs(n0):
            for k in _kmaps(g0):
                instances += 1
                n = n0 + sum(k)
                fam = certify_pair(g0, k)
                total = fam.total
                single = certify_matching(g0, k)
                if fam.host.n != n or not validate_family(fam) or not single.is_valid():
                    failures.append((g0.edges, k, "invalid witness"))
                if 6 * total < 5 * n or n < 3 * n0:
                    failures.append((g0.edges, k, "(d)"))
                if not loop_ids(g0) and (8 * total < 7 * n or n < 4 * n0):
                    failures.append((g0.edges, k, "(a)"))
                if is_trivial(g0) and total != sum(k) + 1:
                    failures.append((g0.edges, k, "(b)"))
                if premise_six_sevenths(g0, k) and (7 * total < 6 * n or 2 * n < 7 * n0):
                    failures.append((g0.edges, k, "(e)"))
                if 7 * len(single) < 3 * n:
                    failures.append((g0.edges, k, "(f)"))
                if in_class_M(g0, k).in_M and 13 * len(single) < 6 * n:
                    failures.append((g0.edges, k, "(g)"))
                for e in applicable_loops(g0):
                    cut = cut_loop(g0, e)
                    k2 = derive_k_after_cut(k, cut)
                    n2 = cut.result.n + sum(k2)
                    if g0.n != cut.result.n + 2 or n != n2 + k[cut.bridge] + k[cut.loop] + 4:
                        failures.append((g0.edges, k, "(c1)/(c2)"))
                    if n <= 14:
                        exact_checked += 1
                        g, g2 = realize(g0, k).graph, realize(cut.result, k2).graph
                        gain1 = k[cut.bridge] // 2 + (k[cut.loop] + 1) // 2 + 1
                        gain2 = k[cut.bridge] + k[cut.loop] + 3
                        if matching_number(g) < matching_number(g2) + gain1:
                            failures.append((g0.edges, k, "(c3)"))
                        if nu_k(g, 2).value < nu_k(g2, 2).value + gain2:
                            failures.append((g0.edges, k, "(c4)"))
                if n <= 14:
                    if total > nu_k(fam.host, 2).value or len(single) > matching_number(fam.host):
                        failures.append((g0.edges, k, "exceeds optimum"))
                walk(g0, tuple(k))
    report(
        6,
        failures,
        f"{instances} (skeleton, k) pairs; {len(seen)} states on cut sequences; {exact_checked} cuts checked exactly",
    )


def test_criterion_7_separated_matching(report):
    failures = []
    oracle_checked = 0
    for seed in range(1, 1001):
        g = random_subcubic(3 + seed % 12, seed)
        res = separated_maximum_matching(g)
        if len(res.matching) != matching_number(g) or count_bad_pairs(g, res.matching.edges) != 0:
            failures.append((seed, g.edges))
        if g.n <= 9:
            oracle_checked += 1
            b = Brute(g)
            if b.nu(1) != len(res.matching) or not has_separated_maximum_matching(g):
                failures.append((seed, "oracle"))
    report(7, failures, f"1000 random subcubic graphs separated; {oracle_checked} confirmed by brute force")


def test_criterion_8_pair_to_triple(report):
    failures = []
    graphs = small_cubic()
    for g in graphs:
        nu2 = nu_k(g, 2)
        H, H2 = nu2.witness.members
        out = pair_to_triple(g, H, H2)
        fam = out.family
        if len(fam.members) != 3 or not validate_family(fam):
            failures.append((g.edges, "invalid"))
        if 2 * fam.total < 4 * nu2.value - g.n:
            failures.append((g.edges, fam.total, nu2.value))
        if fam.total > nu_k(g, 3).value:
            failures.append((g.edges, "exceeds optimum"))
    report(8, failures, f"{len(graphs)} optimal pairs extended to triples of size >= 2*nu2 - n/2")
