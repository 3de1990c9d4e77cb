"""Derived graphs: link graphs, path graphs, arc digraphs, and the natural
partition machinery with its quotient."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import (
    InvalidParameter,
    NotALink,
    PartitionMismatch,
    WindowTooShort,
)
from .links import (
    Arc,
    Link,
    enumerate_arcs,
    enumerate_links,
    hub_subgraph,
    is_cycle,
    is_link_of,
    is_path,
    links_of_subgraph,
    one_step_shunts,
)
from .multigraph import Multigraph


@dataclass
class LabeledGraph:
    """Graph whose vertices are links and whose edges carry one-longer links.

    Edges are stored as ``(i, j, label)`` with ``i < j``; labels are pairwise
    distinct and their two windows are exactly the endpoints.
    """

    ell: int
    vertices: tuple
    edges: tuple
    source: Multigraph | None = None
    index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self.index:
            self.index = {link: i for i, link in enumerate(self.vertices)}

    @property
    def n(self):
        return len(self.vertices)

    @property
    def m(self):
        return len(self.edges)

    def degree(self, i):
        return sum(1 for a, b, _ in self.edges if a == i or b == i)

    def degrees(self):
        deg = [0] * self.n
        for a, b, _ in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def adjacency(self):
        """Simple adjacency as a list of sets of neighbour indices."""
        adj = [set() for _ in range(self.n)]
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def multiplicity(self, i, j):
        pair = (i, j) if i < j else (j, i)
        return sum(1 for a, b, _ in self.edges if (a, b) == pair)

    def edge_groups(self):
        """Map endpoint pair -> list of labels."""
        groups = {}
        for a, b, lab in self.edges:
            groups.setdefault((a, b), []).append(lab)
        return groups

    def is_connected(self):
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def components(self):
        adj = self.adjacency()
        seen = set()
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def simplify(self):
        """Underlying simple graph, keeping the least label per endpoint pair."""
        keep = {}
        for a, b, lab in self.edges:
            if (a, b) not in keep or lab < keep[(a, b)]:
                keep[(a, b)] = lab
        edges = tuple(sorted((a, b, lab) for (a, b), lab in keep.items()))
        return LabeledGraph(self.ell, self.vertices, edges, self.source)

    def edge_signature(self):
        """Label-based edge set, independent of vertex indexing."""
        out = []
        for a, b, lab in self.edges:
            va, vb = self.vertices[a], self.vertices[b]
            lo, hi = (va, vb) if va <= vb else (vb, va)
            out.append((lo, hi, lab))
        return sorted(out)

    def same_labeled_graph(self, other):
        return (
            sorted(self.vertices) == sorted(other.vertices)
            and self.edge_signature() == other.edge_signature()
        )

    def to_multigraph(self):
        verts = [str(v) for v in self.vertices]
        edges = [(str(lab), str(self.vertices[a]), str(self.vertices[b]))
                 for a, b, lab in self.edges]
        return Multigraph(verts, edges)

    def to_json(self):
        return json.dumps(
            {
                "ell": self.ell,
                "vertices": [str(v) for v in self.vertices],
                "edges": [[a, b, str(lab)] for a, b, lab in self.edges],
            },
            indent=2,
            sort_keys=True,
        )

    def to_dot(self, partition=None, name="H"):
        lines = [f"graph {name} {{"]
        if partition is not None:
            for k, (key, members) in enumerate(sorted(partition.vertex_parts.items())):
                lines.append(f"  subgraph cluster_{k} {{")
                lines.append(f'    label="{key}";')
                for i in sorted(members):
                    lines.append(f'    n{i} [label="{self.vertices[i]}"];')
                lines.append("  }")
        else:
            for i, v in enumerate(self.vertices):
                lines.append(f'  n{i} [label="{v}"];')
        for a, b, lab in self.edges:
            lines.append(f'  n{a} -- n{b} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class LabeledDigraph:
    """Digraph on arcs; each arc of the digraph carries a one-longer arc."""

    ell: int
    vertices: tuple
    arcs: tuple  # (tail index, head index, label Arc)
    source: Multigraph | None = None
    index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self.index:
            self.index = {a: i for i, a in enumerate(self.vertices)}

    @property
    def n(self):
        return len(self.vertices)

    def underlying_pairs(self):
        """Deduplicated undirected index pairs (for colouring comparisons)."""
        pairs = set()
        for t, h, _ in self.arcs:
            if t != h:
                pairs.add((t, h) if t < h else (h, t))
        return pairs

    def to_json(self):
        return json.dumps(
            {
                "ell": self.ell,
                "vertices": [str(v) for v in self.vertices],
                "arcs": [[t, h, str(lab)] for t, h, lab in self.arcs],
            },
            indent=2,
            sort_keys=True,
        )

    def to_dot(self, name="A"):
        lines = [f"digraph {name} {{"]
        for i, v in enumerate(self.vertices):
            lines.append(f'  n{i} [label="{v}"];')
        for t, h, lab in self.arcs:
            lines.append(f'  n{t} -> n{h} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class AlmostStandardPartition:
    """Vertex parts keyed by middle segments two shorter, edge parts one shorter."""

    ell: int
    vertex_parts: dict  # Link -> frozenset of vertex indices
    edge_parts: dict  # Link -> frozenset of edge indices


@dataclass
class PartitionCheck:
    independent_parts: bool  # (a)
    two_part_incidence: bool  # (b)
    complete_bipartite: bool  # (c)
    vertex_two_edge_parts: bool  # (d)
    unique_shared_vertex: bool  # (e)
    failures: list

    def all_ok(self):
        return (
            self.independent_parts
            and self.two_part_incidence
            and self.complete_bipartite
            and self.vertex_two_edge_parts
            and self.unique_shared_vertex
        )


def link_graph(G, ell, limit=None):
    """The graph on ``ell``-links whose edges are the one-longer links."""
    verts = tuple(enumerate_links(G, ell, limit))
    idx = {v: i for i, v in enumerate(verts)}
    edge_list = []
    for q in enumerate_links(G, ell + 1, limit):
        w0 = Link.from_units(q.units[: 2 * ell + 1])
        w1 = Link.from_units(q.units[2:])
        assert w0 != w1, f"windows of {q} coincide; construction bug"
        i, j = idx[w0], idx[w1]
        if i > j:
            i, j = j, i
        edge_list.append((i, j, q))
    edge_list.sort()
    return LabeledGraph(ell, verts, tuple(edge_list), G, idx)


def partial_link_graph(G, links, quals, limit=None):
    """Link graph restricted to given links and connecting labels."""
    links = sorted(set(links))
    ell = None
    for link in links:
        if ell is None:
            ell = link.length
        if link.length != ell or not is_link_of(G, link):
            raise NotALink(f"{link} is not an {ell}-link of the graph")
    verts = tuple(links)
    idx = {v: i for i, v in enumerate(verts)}
    vset = set(verts)
    edge_list = []
    for q in sorted(set(quals)):
        if ell is not None and q.length != ell + 1:
            raise NotALink(f"{q} does not have length {ell + 1}")
        if not is_link_of(G, q):
            raise NotALink(f"{q} is not a link of the graph")
        w0 = Link.from_units(q.units[: len(q.units) - 2])
        w1 = Link.from_units(q.units[2:])
        if w0 in vset and w1 in vset:
            i, j = idx[w0], idx[w1]
            if i > j:
                i, j = j, i
            edge_list.append((i, j, q))
    edge_list.sort()
    return LabeledGraph(ell if ell is not None else 0, verts, tuple(edge_list), G, idx)


def path_graph(G, ell, limit=None):
    """Simple graph on ``ell``-paths joined through one-longer paths or cycles."""
    if ell < 0:
        raise InvalidParameter(f"ell must be >= 0, got {ell}")
    if ell <= 1:
        return link_graph(G, ell, limit).simplify()
    paths = [p for p in enumerate_links(G, ell, limit) if is_path(p)]
    quals = [
        q
        for q in enumerate_links(G, ell + 1, limit)
        if is_path(q) or is_cycle(q)
    ]
    return partial_link_graph(G, paths, quals, limit).simplify()


def arc_digraph(G, ell, limit=None):
    """Digraph on ``ell``-arcs; one labelled arc per one-longer arc."""
    if ell < 1:
        raise InvalidParameter(f"arc digraph needs ell >= 1, got {ell}")
    verts = tuple(enumerate_arcs(G, ell, limit))
    idx = {a: i for i, a in enumerate(verts)}
    arcs = []
    for q in enumerate_arcs(G, ell + 1, limit):
        tail = q.window(0, ell)
        head = q.window(1, ell + 1)
        arcs.append((idx[tail], idx[head], q))
    arcs.sort()
    return LabeledDigraph(ell, verts, tuple(arcs), G, idx)


@dataclass
class ChainDigraph:
    """Iterated line digraph; a vertex is a chain of successively incident 1-arcs."""

    depth: int
    vertices: tuple  # tuples of length-1 Arcs
    arcs: tuple  # (tail index, head index)


def iterated_line_digraph(G, ell, limit=None):
    """Apply the line-digraph step ``ell`` times starting from the 1-arc digraph."""
    if ell < 1:
        raise InvalidParameter(f"iterated line digraph needs ell >= 1, got {ell}")
    one_arcs = enumerate_arcs(G, 1, limit)
    verts = tuple((a,) for a in one_arcs)
    pairs = []
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            a, b = u[0], v[0]
            if a.head_vertex == b.tail_vertex and a.head_edge != b.tail_edge:
                pairs.append((i, j))
    depth = 1
    while depth < ell:
        # line digraph: vertices become the arcs, arcs become composable pairs
        new_verts = tuple(verts[i] + (verts[j][-1],) for i, j in pairs)
        by_tail = {}
        for k, (i, j) in enumerate(pairs):
            by_tail.setdefault(i, []).append(k)
        new_pairs = []
        for k, (i, j) in enumerate(pairs):
            for k2 in by_tail.get(j, ()):
                new_pairs.append((k, k2))
        verts, pairs = new_verts, sorted(new_pairs)
        depth += 1
    return ChainDigraph(ell, verts, tuple(pairs))


def _flatten_chain(chain):
    units = chain[0].units
    for nxt in chain[1:]:
        if nxt.tail_vertex != units[-1]:
            return None
        units = units + nxt.units[1:]
    return Arc(units)


def digraph_natural_iso_check(G, ell, limit=None):
    """Verify the chain digraph is isomorphic to the arc digraph.

    The natural bijection flattens a chain of 1-arcs into a longer arc; the
    check confirms the flattening is a bijection onto the arc-digraph vertices
    and that labelled arcs correspond one to one.
    """
    A = arc_digraph(G, ell, limit)
    C = iterated_line_digraph(G, ell, limit)
    if len(C.vertices) != A.n:
        return False
    flat = []
    for chain in C.vertices:
        arc = _flatten_chain(chain)
        if arc is None or arc.length != ell:
            return False
        flat.append(arc)
    if sorted(flat) != sorted(A.vertices):
        return False
    if len(set(flat)) != len(flat):
        return False
    a_arcs = {(A.vertices[t], A.vertices[h]): lab for t, h, lab in A.arcs}
    if len(a_arcs) != len(A.arcs):  # at most one arc per ordered pair
        return False
    if len(C.arcs) != len(A.arcs):
        return False
    seen = set()
    for t, h in C.arcs:
        key = (flat[t], flat[h])
        if key not in a_arcs or key in seen:
            return False
        seen.add(key)
        # the label is the flattening of the chain pair
        merged = Arc(flat[t].units + flat[h].units[-2:])
        if merged != a_arcs[key]:
            return False
    return True


def natural_partition(H):
    """Group vertices by their middle segment two shorter, edges one shorter."""
    if H.ell < 2:
        raise WindowTooShort(f"natural partition needs ell >= 2, got {H.ell}")
    vparts = {}
    for i, link in enumerate(H.vertices):
        vparts.setdefault(link.middle_segment(H.ell - 2), set()).add(i)
    eparts = {}
    for k, (_, _, lab) in enumerate(H.edges):
        eparts.setdefault(lab.middle_segment(H.ell - 1), set()).add(k)
    return AlmostStandardPartition(
        H.ell,
        {k: frozenset(v) for k, v in vparts.items()},
        {k: frozenset(v) for k, v in eparts.items()},
    )


def verify_almost_standard(H, partition):
    """Check conditions (a)-(e) independently; raises only on non-partitions."""
    failures = []
    vparts = list(partition.vertex_parts.items())
    eparts = list(partition.edge_parts.items())

    covered = [None] * H.n
    for key, members in vparts:
        for i in members:
            if i is None or not (0 <= i < H.n) or covered[i] is not None:
                raise PartitionMismatch(f"vertex {i} not properly partitioned")
            covered[i] = key
    if any(c is None for c in covered):
        raise PartitionMismatch("vertex parts do not cover the graph")
    ecovered = [None] * H.m
    for key, members in eparts:
        for k in members:
            if not (0 <= k < H.m) or ecovered[k] is not None:
                raise PartitionMismatch(f"edge {k} not properly partitioned")
            ecovered[k] = key
    if any(c is None for c in ecovered):
        raise PartitionMismatch("edge parts do not cover the graph")

    # (a) every vertex part is an independent set
    a_ok = True
    for i, j, _ in H.edges:
        if covered[i] == covered[j]:
            a_ok = False
            failures.append(("a", f"edge inside part {covered[i]}"))
            break

    # (b) every edge part touches exactly two vertex parts
    b_ok = True
    incident_parts = {}
    for key, members in eparts:
        parts = set()
        for k in members:
            i, j, _ = H.edges[k]
            parts.add(covered[i])
            parts.add(covered[j])
        incident_parts[key] = parts
        if len(parts) != 2:
            b_ok = False
            failures.append(("b", f"edge part {key} touches {len(parts)} parts"))

    # (c) every edge part is the edge set of a complete bipartite subgraph
    c_ok = True
    for key, members in eparts:
        ends = {}
        for k in members:
            i, j, _ = H.edges[k]
            pair = (i, j)
            ends[pair] = ends.get(pair, 0) + 1
        # 2-colour the endpoints using only part edges
        ok = True
        side = {}
        adj = {}
        for i, j in ends:
            adj.setdefault(i, set()).add(j)
            adj.setdefault(j, set()).add(i)
        for s in sorted(adj):
            if s in side:
                continue
            side[s] = 0
            queue = deque([s])
            while queue and ok:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in side:
                        side[y] = 1 - side[x]
                        queue.append(y)
                    elif side[y] == side[x]:
                        ok = False
                        break
        if ok:
            A = sorted(x for x in side if side[x] == 0)
            B = sorted(x for x in side if side[x] == 1)
            if len(A) * len(B) != len(ends) or any(v != 1 for v in ends.values()):
                ok = False
            else:
                for x in A:
                    for y in B:
                        pair = (x, y) if x < y else (y, x)
                        if pair not in ends:
                            ok = False
                            break
                    if not ok:
                        break
        if not ok:
            c_ok = False
            failures.append(("c", f"edge part {key} is not complete bipartite"))

    # (d) every vertex meets at most two edge parts
    d_ok = True
    vertex_eparts = {}
    for key, members in eparts:
        for k in members:
            i, j, _ = H.edges[k]
            vertex_eparts.setdefault(i, set()).add(key)
            vertex_eparts.setdefault(j, set()).add(key)
    for v, keys in vertex_eparts.items():
        if len(keys) > 2:
            d_ok = False
            failures.append(("d", f"vertex {H.vertices[v]} meets {len(keys)} edge parts"))
            break

    # (e) a vertex part holds at most one vertex meeting any two edge parts
    e_ok = True
    seen = {}
    for v, keys in vertex_eparts.items():
        ks = sorted(keys)
        for x in range(len(ks)):
            for y in range(x + 1, len(ks)):
                tag = (covered[v], ks[x], ks[y])
                if tag in seen:
                    e_ok = False
                    failures.append(("e", f"two vertices of {tag[0]} meet both parts"))
                else:
                    seen[tag] = v
    return PartitionCheck(a_ok, b_ok, c_ok, d_ok, e_ok, failures)


def quotient(H, partition):
    """Quotient multigraph: one vertex per vertex part, one edge per edge part."""
    covered = {}
    for key, members in partition.vertex_parts.items():
        for i in members:
            covered[i] = key
    if len(covered) != H.n:
        raise PartitionMismatch("vertex parts do not cover the graph")
    edges = []
    for key, members in sorted(partition.edge_parts.items()):
        parts = set()
        for k in members:
            i, j, _ = H.edges[k]
            parts.add(covered[i])
            parts.add(covered[j])
        if len(parts) != 2:
            raise PartitionMismatch(f"edge part {key} does not touch exactly two parts")
        u, v = sorted(str(p) for p in parts)
        edges.append((str(key), u, v))
    verts = [str(k) for k in partition.vertex_parts]
    return Multigraph(verts, edges)


def quotient_embedding_check(G, ell, H=None, lower=None, limit=None):
    """Verify the quotient maps onto an induced subgraph of the graph two back.

    Uses the explicit key maps: a vertex part keyed by ``R`` goes to the
    vertex ``R``, an edge part keyed by ``P`` goes to the edge labelled ``P``.
    """
    if ell < 2:
        raise WindowTooShort(f"embedding check needs ell >= 2, got {ell}")
    if H is None:
        H = link_graph(G, ell, limit)
    if lower is None:
        lower = link_graph(G, ell - 2, limit)
    part = natural_partition(H)
    # keys must be vertices / edge labels of the lower graph
    for key in part.vertex_parts:
        if key not in lower.index:
            return False
    lower_labels = {lab: (i, j) for i, j, lab in lower.edges}
    covered = {}
    for key, members in part.vertex_parts.items():
        for i in members:
            covered[i] = key
    for key, members in part.edge_parts.items():
        if key not in lower_labels:
            return False
        # incident vertex parts must map to the windows of the key
        parts = set()
        for k in members:
            i, j, _ = H.edges[k]
            parts.add(covered[i])
            parts.add(covered[j])
        if parts != {lower.vertices[x] for x in lower_labels[key]}:
            return False
    # induced-subgraph correspondence, edge part counts against all lower edges
    key_idx = {key: lower.index[key] for key in part.vertex_parts}
    mu = {}
    for key, members in part.edge_parts.items():
        k0 = next(iter(members))
        i, j, _ = H.edges[k0]
        a, b = sorted((key_idx[covered[i]], key_idx[covered[j]]))
        mu[(a, b)] = mu.get((a, b), 0) + 1
    image = set(key_idx.values())
    lower_counts = {}
    for i, j, _ in lower.edges:
        if i in image and j in image:
            pair = (i, j) if i < j else (j, i)
            lower_counts[pair] = lower_counts.get(pair, 0) + 1
    return mu == lower_counts


def link_graph_connected(G, ell, limit=None):
    """Connectivity of the link graph via the hub criterion.

    The criterion: the hub subgraph is connected and every link can be shunted
    to a link lying inside the hub.  When the hub hosts no link at all the
    criterion is silent and we fall back to direct breadth-first search.
    """
    all_links = enumerate_links(G, ell, limit)
    if len(all_links) <= 1:
        return True
    hub = hub_subgraph(G, ell, limit)
    if not hub.is_connected():
        return False
    hub_links = set(links_of_subgraph(G, hub, ell, limit))
    if not hub_links:
        # degenerate: hub too small to host a link of this length
        return link_graph(G, ell, limit).is_connected()
    seen = set(hub_links)
    queue = deque(sorted(hub_links))
    while queue:
        cur = queue.popleft()
        for _, nxt in one_step_shunts(G, cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(all_links)
