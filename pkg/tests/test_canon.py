from __future__ import annotations

from linkgraphs import canon
from linkgraphs.multigraph import (
    Multigraph,
    complete,
    complete_bipartite,
    cycle,
    dipole,
    petersen,
)


def relabel(G, mapping):
    verts = [mapping[v] for v in G.vertices]
    edges = [(f"f{k}", mapping[u], mapping[w]) for k, (_, u, w) in enumerate(G.edges())]
    return Multigraph(verts, edges)


def test_relabelled_graphs_are_isomorphic():
    G = petersen()
    mapping = {v: f"x{i}" for i, v in enumerate(reversed(G.vertices))}
    assert canon.is_isomorphic(G, relabel(G, mapping))


def test_cycle_vs_two_triangles():
    two = Multigraph(
        [],
        [("a1", "p0", "p1"), ("a2", "p1", "p2"), ("a3", "p2", "p0"),
         ("b1", "q0", "q1"), ("b2", "q1", "q2"), ("b3", "q2", "q0")],
    )
    assert not canon.is_isomorphic(cycle(6), two)


def test_multiplicity_distinguishes():
    assert not canon.is_isomorphic(dipole(2), Multigraph([], [("e1", "a", "b")]))
    assert canon.is_isomorphic(dipole(2), cycle(2))


def test_regular_non_isomorphic_pair():
    assert not canon.is_isomorphic(complete_bipartite(3, 3), complete(4))


def test_canonical_key_is_stable_under_vertex_order():
    G = complete_bipartite(2, 3)
    mapping = {v: f"zz{9 - i}" for i, v in enumerate(G.vertices)}
    assert canon.multigraph_key(G) == canon.multigraph_key(relabel(G, mapping))
