"""Plain-text edge-list format.

::

    # comment lines are ignored
    p <n> <m> [pseudo]
    e <u> <v>        (m lines, 0-based, u <= v)

Writers emit records sorted lexicographically with LF endings, so writing a
parsed file reproduces it byte for byte whenever the input was already in
that order.  Several graphs may share one stream; each starts at its ``p``
line.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import GraphError, Multigraph


class FormatError(GraphError):
    pass


def _tokens(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise FormatError(f"line {no}: expected an integer, got {tok!r}") from None
    if val < 0:
        raise FormatError(f"line {no}: negative value {val}")
    return val


def _build(header: tuple[int, int, bool, int], edges: list[tuple[int, int]]) -> Multigraph:
    n, m, pseudo, no = header
    if len(edges) != m:
        raise FormatError(f"graph declared on line {no} has {len(edges)} edges, expected {m}")
    return Multigraph(n, tuple(edges), loops=pseudo)


def parse_many(text: str) -> list[Multigraph]:
    graphs: list[Multigraph] = []
    header: tuple[int, int, bool, int] | None = None
    edges: list[tuple[int, int]] = []
    for no, tok in _tokens(text):
        if tok[0] == "p":
            if len(tok) not in (3, 4) or (len(tok) == 4 and tok[3] != "pseudo"):
                raise FormatError(f"line {no}: malformed header")
            if header is not None:
                graphs.append(_build(header, edges))
            header = (_int(tok[1], no), _int(tok[2], no), len(tok) == 4, no)
            edges = []
        elif tok[0] == "e":
            if header is None:
                raise FormatError(f"line {no}: edge before header")
            if len(tok) != 3:
                raise FormatError(f"line {no}: malformed edge record")
            u, v = _int(tok[1], no), _int(tok[2], no)
            n, _, pseudo, _ = header
            if u >= n or v >= n:
                raise FormatError(f"line {no}: endpoint out of range")
            if u == v and not pseudo:
                raise FormatError(f"line {no}: loop without the pseudo flag")
            edges.append((u, v))
        else:
            raise FormatError(f"line {no}: unknown record {tok[0]!r}")
    if header is None:
        raise FormatError("missing header")
    graphs.append(_build(header, edges))
    return graphs


def parse(text: str) -> Multigraph:
    graphs = parse_many(text)
    if len(graphs) != 1:
        raise FormatError(f"expected one graph, found {len(graphs)}")
    return graphs[0]


def dumps(g: Multigraph, pseudo: bool | None = None) -> str:
    flag = g.has_loops() if pseudo is None else pseudo
    head = f"p {g.n} {g.m}" + (" pseudo" if flag else "")
    recs = sorted((min(a, b), max(a, b)) for a, b in g.edges)
    return "\n".join([head, *(f"e {u} {v}" for u, v in recs)]) + "\n"


def dumps_many(graphs: Iterable[Multigraph]) -> str:
    return "".join(dumps(g) for g in graphs)


def read_graph(path: str | Path) -> Multigraph:
    return parse(Path(path).read_text())


def write_graph(g: Multigraph, path: str | Path) -> None:
    Path(path).write_bytes(dumps(g).encode())
