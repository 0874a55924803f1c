from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from cubicmatch.graph import Multigraph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def small_multigraphs(draw, max_n: int = 7, max_m: int = 10, loops: bool = False):
    n = draw(st.integers(1, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, max_size=max_m)) if n > 1 or loops else []
    return Multigraph(n, tuple(edges), loops=loops)


@st.composite
def relabellings(draw, g: Multigraph):
    perm = draw(st.permutations(range(g.n)))
    order = draw(st.permutations(range(g.m)))
    edges = tuple((perm[g.edges[i][0]], perm[g.edges[i][1]]) for i in order)
    return Multigraph(g.n, edges, loops=g.loops)
