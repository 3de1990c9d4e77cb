from __future__ import annotations

import pytest

from linkgraphs.multigraph import Multigraph


@pytest.fixture(scope="session")
def star3():
    return Multigraph(
        ["c", "a", "b", "d"],
        [("e1", "c", "a"), ("e2", "c", "b"), ("e3", "c", "d")],
    )


def make_multigraph(n, pairs):
    """Small helper used by hypothesis-driven tests."""
    verts = [f"v{i}" for i in range(n)]
    edges = [(f"e{k}", f"v{u}", f"v{v}") for k, (u, v) in enumerate(pairs, start=1)]
    return Multigraph(verts, edges)
