"""Shared hypothesis strategies for property tests."""

from __future__ import annotations

from hypothesis import strategies as st

from linkgraphs.multigraph import Multigraph


@st.composite
def multigraphs(draw, max_n=6, max_m=9):
    n = draw(st.integers(2, max_n))
    m = draw(st.integers(0, max_m))
    pairs = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 2))
        if v >= u:
            v += 1
        pairs.append((u, v))
    verts = [f"v{i}" for i in range(n)]
    edges = [(f"e{k}", f"v{u}", f"v{v}") for k, (u, v) in enumerate(pairs, start=1)]
    return Multigraph(verts, edges)
