"""Batch runs: JSON-lines report records, a process pool, and the search for tight graphs."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

from .certify import TIGHT_BOUNDS, certify_cubic, tight_value, verify_all
from .generate import enumerate_cubic, random_cubic
from .graph import Multigraph

SCHEMA_VERSION = 1
WORKERS_ENV = "CUBICMATCH_WORKERS"

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    if raw.strip():
        return max(1, int(raw))
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Sequence[T], workers: int | None = None) -> list[R]:
    """Order-preserving map; runs inline for a single worker or a single item."""
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def is_simple(g: Multigraph) -> bool:
    return len({(a, b) for a, b in g.edges}) == g.m and not g.has_loops()


def graph_record(g: Multigraph, timing: bool = False) -> dict:
    """Exact values, inequality slacks and certificate sizes for one cubic graph."""
    start = time.perf_counter()
    rep = verify_all(g)
    cert = certify_cubic(g)
    n1, n2, n3, _ = rep.nu
    cert_ok = (
        cert.is_valid()
        and len(cert.separated.matching) == n1
        and cert.pair_total <= n2
        and cert.triple_total <= n3
    )
    rec = {
        "schema_version": SCHEMA_VERSION,
        "graph_id": rep.graph_id,
        "n": rep.n,
        "m": rep.m,
        "nu": list(rep.nu),
        "alpha2": rep.alpha2,
        "chromatic_index": rep.chromatic_index,
        "disjoint_maximum_matchings": rep.disjoint_maximum_matchings,
        "slack": {c.name: c.slack for c in rep.checks},
        "certificate": {
            "matching": len(cert.separated.matching),
            "pair": cert.pair_total,
            "triple": cert.triple_total,
            "bounds": {b.name: [b.bound, b.value] for b in cert.claimed_bounds},
        },
        "passed": rep.passed and cert_ok,
    }
    if timing:
        rec["seconds"] = round(time.perf_counter() - start, 6)
    return rec


def _record_untimed(g: Multigraph) -> dict:
    return graph_record(g)


def _record_timed(g: Multigraph) -> dict:
    return graph_record(g, timing=True)


def run_records(graphs: Sequence[Multigraph], timing: bool = False, workers: int | None = None) -> list[dict]:
    return parallel_map(_record_timed if timing else _record_untimed, list(graphs), workers)


def to_jsonl(records: Iterable[dict]) -> str:
    return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)


def exhaustive_graphs(max_n: int, simple: bool = False) -> list[Multigraph]:
    out = [g for n in range(2, max_n + 1, 2) for g in enumerate_cubic(n)]
    return [g for g in out if is_simple(g)] if simple else out


def random_graphs(count: int, n: int, seed: int, simple: bool = False) -> list[Multigraph]:
    """``count`` samples drawn with seeds ``seed, seed + 1, ...`` (skipping non-simple ones if asked)."""
    out: list[Multigraph] = []
    s = seed
    while len(out) < count:
        g = random_cubic(n, s)
        s += 1
        if not simple or is_simple(g):
            out.append(g)
    return out


def _tight_flags(g: Multigraph) -> dict[str, bool]:
    rep = verify_all(g)
    return {b: tight_value(rep, b) for b in TIGHT_BOUNDS}


def search_tight(n: int, bound_name: str, simple: bool = False, workers: int | None = None) -> list[Multigraph]:
    """Every enumerated cubic graph on ``n`` vertices meeting the named bound with equality."""
    if bound_name not in TIGHT_BOUNDS:
        raise ValueError(f"bound must be one of {', '.join(TIGHT_BOUNDS)}")
    if n % 2:
        return []
    graphs = enumerate_cubic(n)
    if simple:
        graphs = [g for g in graphs if is_simple(g)]
    flags = parallel_map(_tight_flags, graphs, workers)
    return [g for g, f in zip(graphs, flags) if f[bound_name]]


def smallest_tight(bound_name: str, max_n: int, simple: bool = False) -> tuple[int, list[Multigraph]] | None:
    for n in range(2, max_n + 1, 2):
        found = search_tight(n, bound_name, simple)
        if found:
            return n, found
    return None
