"""Command-line front end.  Exit status is 0 exactly when every check passes."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certify import TIGHT_BOUNDS, certify_cubic, tight_value, verify_all
from .exact import nu_k
from .fileio import dumps, read_graph, write_graph
from .generate import enumerate_cubic
from .graph import GraphError
from .harness import (
    exhaustive_graphs,
    is_simple,
    random_graphs,
    run_records,
    search_tight,
    to_jsonl,
)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_bytes(text.encode())
    else:
        sys.stdout.write(text)


def _cmd_nu(args) -> int:
    g = read_graph(args.file)
    res = nu_k(g, args.k)
    rec = {"k": args.k, "n": g.n, "m": g.m, "nu": res.value, "witness": [sorted(x) for x in res.witness.members]}
    print(json.dumps(rec, separators=(",", ":")))
    return 0


def _cmd_certify(args) -> int:
    g = read_graph(args.file)
    cert = certify_cubic(g)
    rec = {
        "n": g.n,
        "m": g.m,
        "matching": sorted(cert.separated.matching.edges),
        "pair": [sorted(x) for x in cert.pair_witness.members],
        "triple": [sorted(x) for x in cert.triple_witness.members],
        "bounds": {b.name: [b.bound, b.value] for b in cert.claimed_bounds},
        "valid": cert.is_valid(),
    }
    print(json.dumps(rec, separators=(",", ":")))
    return 0 if cert.is_valid() else 1


def _cmd_verify(args) -> int:
    if args.max_n is not None:
        graphs = exhaustive_graphs(args.max_n, args.simple)
    elif args.random is not None:
        if args.n is None:
            raise SystemExit("verify --random needs --n")
        graphs = random_graphs(args.random, args.n, args.seed, args.simple)
    else:
        raise SystemExit("verify needs --max-n or --random")
    records = run_records(graphs, timing=args.timing)
    _emit(to_jsonl(records), args.out)
    failed = sum(not r["passed"] for r in records)
    print(f"{len(records)} graphs, {failed} failed", file=sys.stderr)
    return 0 if failed == 0 else 1


def _cmd_enumerate(args) -> int:
    graphs = enumerate_cubic(args.n)
    if args.simple:
        graphs = [g for g in graphs if is_simple(g)]
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(graphs):
            write_graph(g, out / f"cubic_n{args.n}_{i:03d}.txt")
    else:
        sys.stdout.write("".join(dumps(g) for g in graphs))
    print(f"{len(graphs)} graphs", file=sys.stderr)
    return 0


def _cmd_search(args) -> int:
    found = search_tight(args.n, args.bound, args.simple)
    ok = True
    for g in found:
        rep = verify_all(g)
        ok &= tight_value(rep, args.bound)
        print(f"# {rep.graph_id} nu={list(rep.nu)}")
        sys.stdout.write(dumps(g))
    print(f"{len(found)} tight graphs", file=sys.stderr)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubicmatch", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nu", help="exact maximum size of k disjoint matchings")
    s.add_argument("--k", type=int, choices=(1, 2, 3, 4), required=True)
    s.add_argument("file")
    s.set_defaults(func=_cmd_nu)

    s = sub.add_parser("certify", help="certificate witnesses for a cubic graph")
    s.add_argument("file")
    s.set_defaults(func=_cmd_certify)

    s = sub.add_parser("verify", help="check every inequality exactly on a batch of graphs")
    s.add_argument("--max-n", type=int)
    s.add_argument("--random", type=int, metavar="COUNT")
    s.add_argument("--n", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--simple", action="store_true")
    s.add_argument("--timing", action="store_true", help="add per-graph seconds (breaks byte-identity)")
    s.add_argument("--out")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("enumerate", help="connected cubic multigraphs up to isomorphism")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--simple", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=_cmd_enumerate)

    s = sub.add_parser("search-tight", help="graphs meeting a bound with equality")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--bound", choices=TIGHT_BOUNDS, required=True)
    s.add_argument("--simple", action="store_true")
    s.set_defaults(func=_cmd_search)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
