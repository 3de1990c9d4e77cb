"""Minor witnesses in link graphs: verified branch-set models built from
cuts, cycles, degeneracy cores and the hub subgraph, plus exact oracles."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .canon import canonical_key
from .construction import LabeledGraph, link_graph
from .errors import (
    BranchSetLacksLink,
    InvalidParameter,
    LinkGraphError,
    NoCycleInY,
    NoEdge,
    OracleTooLarge,
    PreconditionViolated,
)
from .links import (
    Arc,
    Link,
    conjunction,
    enumerate_arcs,
    enumerate_links,
    hub_subgraph,
    shunt_trace,
)
from .multigraph import Multigraph, complete_bipartite

DEFAULT_HADWIGER_CAP = 12


# -- witnesses ----------------------------------------------------------------


@dataclass
class MinorWitness:
    """Branch sets plus connecting paths certifying a minor model.

    ``connectors`` maps sorted target-edge pairs to host vertex paths whose
    first and last vertices lie in the respective branch sets and whose
    interiors avoid every branch set and every other interior.
    """

    target_size: int
    target_edges: frozenset  # pairs (i, j), i < j
    branch_sets: list  # list of frozenset of host vertex indices
    connectors: dict  # (i, j) -> tuple of host vertex indices
    host: object = field(default=None, repr=False)
    route: str = ""

    @property
    def target_name(self):
        full = {(i, j) for i in range(self.target_size) for j in range(i + 1, self.target_size)}
        if self.target_edges == frozenset(full):
            return f"K_{self.target_size}"
        return f"graph({self.target_size},{len(self.target_edges)})"

    def to_json(self):
        def label(i):
            if isinstance(self.host, LabeledGraph):
                return str(self.host.vertices[i])
            if isinstance(self.host, Multigraph):
                return str(self.host.vertices[i])
            return str(i)

        data = {
            "target": self.target_name,
            "branch_sets": [sorted(label(i) for i in bs) for bs in self.branch_sets],
            "connectors": {
                f"{i}-{j}": [label(v) for v in path]
                for (i, j), path in sorted(self.connectors.items())
            },
        }
        if self.target_name.startswith("graph("):
            data["target_edges"] = sorted(list(e) for e in self.target_edges)
        return json.dumps(data, indent=2, sort_keys=True)


@dataclass
class VerifyResult:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def _host_adjacency(host):
    if isinstance(host, LabeledGraph):
        return host.adjacency()
    if isinstance(host, Multigraph):
        idx = {v: i for i, v in enumerate(host.vertices)}
        adj = [set() for _ in range(host.n)]
        for _, u, v in host.edges():
            adj[idx[u]].add(idx[v])
            adj[idx[v]].add(idx[u])
        return adj
    return host


def verify_minor(host, witness):
    """Structurally check every invariant of a witness; never raises."""
    adj = _host_adjacency(host)
    n = len(adj)
    sets = witness.branch_sets
    if len(sets) != witness.target_size:
        return VerifyResult(False, "branch set count differs from target size")
    seen = set()
    for k, bs in enumerate(sets):
        if not bs:
            return VerifyResult(False, f"branch set {k} is empty")
        for v in bs:
            if not (0 <= v < n):
                return VerifyResult(False, f"branch set {k} has vertex {v} out of range")
            if v in seen:
                return VerifyResult(False, f"branch sets overlap at {v}")
            seen.add(v)
        # connectivity of the induced subgraph
        start = next(iter(bs))
        reach = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in bs and y not in reach:
                    reach.add(y)
                    queue.append(y)
        if reach != set(bs):
            return VerifyResult(False, f"branch set {k} is not connected")
    all_branch = seen
    interiors = set()
    for i, j in witness.target_edges:
        path = witness.connectors.get((i, j))
        if path is None:
            return VerifyResult(False, f"no connector for target edge {i}-{j}")
        if len(path) < 2:
            return VerifyResult(False, f"connector {i}-{j} too short")
        if path[0] not in sets[i] or path[-1] not in sets[j]:
            return VerifyResult(False, f"connector {i}-{j} endpoints misplaced")
        if len(set(path)) != len(path):
            return VerifyResult(False, f"connector {i}-{j} repeats a vertex")
        for a, b in zip(path, path[1:]):
            if b not in adj[a]:
                return VerifyResult(False, f"connector {i}-{j} uses a non-edge")
        inner = path[1:-1]
        for v in inner:
            if v in all_branch:
                return VerifyResult(False, f"connector {i}-{j} interior hits a branch set")
            if v in interiors:
                return VerifyResult(False, f"connector {i}-{j} interior shared")
        interiors.update(inner)
    for (i, j) in witness.connectors:
        if (i, j) not in witness.target_edges:
            return VerifyResult(False, f"connector {i}-{j} has no target edge")
    return VerifyResult(True, "")


def _complete_edges(t):
    return frozenset((i, j) for i in range(t) for j in range(i + 1, t))


# -- exact oracles ------------------------------------------------------------


def _max_clique_vertices(n, pairs):
    """One maximum clique, deterministic, for n small."""
    adj = [set() for _ in range(n)]
    for i, j in pairs:
        adj[i].add(j)
        adj[j].add(i)
    best = []

    def expand(clique, cands):
        nonlocal best
        if len(clique) + len(cands) <= len(best):
            return
        if not cands:
            if len(clique) > len(best):
                best = list(clique)
            return
        for v in list(cands):
            expand(clique + [v], sorted(c for c in cands if c in adj[v] and c > v))
            cands.remove(v)
            if len(clique) + len(cands) <= len(best):
                return

    expand([], list(range(n)))
    return best


def _contract_pair(n, pairs, i, j):
    """Contract j into i; relabel to 0..n-2 keeping order."""
    relabel = {}
    k = 0
    for v in range(n):
        if v == j:
            continue
        relabel[v] = k
        k += 1
    relabel[j] = relabel[i]
    out = set()
    for a, b in pairs:
        x, y = relabel[a], relabel[b]
        if x == y:
            continue
        out.add((x, y) if x < y else (y, x))
    return n - 1, frozenset(out)


def hadwiger_number(G, cap=DEFAULT_HADWIGER_CAP):
    """Largest clique minor order, by contraction recursion with memoised
    canonical forms.  Parallel edges are collapsed first."""
    simp = G.underlying_simple()
    if cap is not None and simp.n > cap:
        raise OracleTooLarge(simp.n, cap)
    _, pairs = simp.simple_index_graph()
    memo = {}

    def rec(n, edges):
        if n <= 1:
            return n
        key = canonical_key(n, {e: 1 for e in edges})
        if key in memo:
            return memo[key]
        best = len(_max_clique_vertices(n, edges))
        for i, j in sorted(edges):
            if n - 1 <= best:
                break
            best = max(best, rec(*_contract_pair(n, edges, i, j)))
        memo[key] = best
        return best

    return rec(simp.n, frozenset(pairs))


def hadwiger_model(G, cap=DEFAULT_HADWIGER_CAP):
    """An explicit clique-minor model achieving the Hadwiger number.

    Returns ``(eta, branch_sets)`` with branch sets of original vertex names.
    """
    simp = G.underlying_simple()
    eta = hadwiger_number(G, cap)
    verts, pairs = simp.simple_index_graph()
    failed = set()

    def dfs(n, edges, labels):
        clique = _max_clique_vertices(n, edges)
        if len(clique) >= eta:
            return [labels[v] for v in clique[:eta]]
        if n <= eta:
            return None
        key = canonical_key(n, {e: 1 for e in edges})
        if key in failed:
            return None
        for i, j in sorted(edges):
            nn, ne = _contract_pair(n, edges, i, j)
            nl = []
            for v in range(n):
                if v == j:
                    continue
                nl.append(labels[v] | labels[j] if v == i else labels[v])
            res = dfs(nn, ne, nl)
            if res is not None:
                return res
        failed.add(key)
        return None

    model = dfs(simp.n, frozenset(pairs), [frozenset({v}) for v in verts])
    assert model is not None, "model search disagrees with the oracle"
    return eta, model


# -- cut instances and the two cut constructions -------------------------------


@dataclass
class CutInstance:
    """A vertex set of small diameter whose complement is connected."""

    graph: Multigraph
    x_vertices: frozenset

    def __post_init__(self):
        self.x_vertices = frozenset(self.x_vertices)

    def x_subgraph(self):
        return self.graph.induced_subgraph(self.x_vertices)

    def y_subgraph(self):
        rest = [v for v in self.graph.vertices if v not in self.x_vertices]
        return self.graph.induced_subgraph(rest)

    def cut_arcs(self):
        """Sorted arcs ``(y, e, x)`` from the complement into the set."""
        out = []
        for eid, u, v in self.graph.edges():
            if (u in self.x_vertices) != (v in self.x_vertices):
                x, y = (u, v) if u in self.x_vertices else (v, u)
                out.append(Arc((y, eid, x)))
        return sorted(out, key=lambda a: a.units[1])

    def validate(self, ell):
        if not self.x_vertices:
            raise PreconditionViolated("the cut set is empty")
        missing = [v for v in self.x_vertices if not self.graph.has_vertex(v)]
        if missing:
            raise PreconditionViolated(f"unknown vertices {missing}")
        X = self.x_subgraph()
        if X.diameter() >= ell:
            raise PreconditionViolated(
                f"cut set diameter {X.diameter()} is not below {ell}"
            )
        Y = self.y_subgraph()
        if Y.n == 0 or not Y.is_connected():
            raise PreconditionViolated("complement is empty or disconnected")
        return X, Y


def _shortest_arc(G, source, target):
    """Lexicographically-least shortest dipath as an Arc (vertices of G)."""
    if source == target:
        return Arc((source,))
    parent = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for eid, w in G.incident(v):
            if w not in parent:
                parent[w] = (v, eid)
                if w == target:
                    units = [w]
                    node = w
                    while parent[node] is not None:
                        node, e = parent[node]
                        units.extend([e, node])
                    return Arc(tuple(reversed(units)))
                queue.append(w)
    return None


def _multi_source_arc(G, sources, target):
    """Shortest dipath from any source vertex to the target."""
    parent = {}
    queue = deque()
    for s in sorted(sources):
        parent[s] = None
        queue.append(s)
    if target in parent:
        return Arc((target,))
    while queue:
        v = queue.popleft()
        for eid, w in G.incident(v):
            if w not in parent:
                parent[w] = (v, eid)
                if w == target:
                    units = [w]
                    node = w
                    while parent[node] is not None:
                        node, e = parent[node]
                        units.extend([e, node])
                    return Arc(tuple(reversed(units)))
                queue.append(w)
    return None


def shortest_cycle_arc(G):
    """A shortest cycle as a closed Arc, or None for forests."""
    best = None
    for eid, (u, v) in ((e, G.endpoints(e)) for e in G.edge_ids):
        # shortest u-v path avoiding eid
        parent = {u: None}
        queue = deque([u])
        found = False
        while queue and not found:
            x = queue.popleft()
            for fid, w in G.incident(x):
                if fid == eid or w in parent:
                    continue
                parent[w] = (x, fid)
                if w == v:
                    found = True
                    break
                queue.append(w)
        if not found:
            continue
        units = [v]
        node = v
        while parent[node] is not None:
            node, e = parent[node]
            units.extend([e, node])
        units.reverse()
        closed = Arc(tuple(units) + (eid, u))
        if best is None or closed.length < best.length:
            best = closed
    return best


def _rotate_closed(arc, p):
    """Rotation of a closed arc starting (and ending) at walk position p."""
    u = arc.units
    c = arc.length
    out = [u[2 * p]]
    for k in range(c):
        eidx = ((p + k) % c) + 1
        out.append(u[2 * eidx - 1])
        out.append(u[2 * ((p + k + 1) % c)])
    return Arc(tuple(out))


def _tail_window(closed, ell):
    """The arc formed by the last ``ell`` edges of a closed walk, wrapping."""
    u = closed.units
    c = closed.length
    out = []
    for k in range(ell + 1):
        out.append(u[2 * ((c - ell + k) % c)])
        if k < ell:
            eidx = ((c - ell + k) % c) + 1
            out.append(u[2 * eidx - 1])
    return Arc(tuple(out))


def _x_paths(X, cut_arcs, ell):
    """Shortest paths inside the cut set between attachment vertices."""
    paths = {}
    t = len(cut_arcs)
    for i in range(t):
        for j in range(i, t):
            xi, xj = cut_arcs[i].head_vertex, cut_arcs[j].head_vertex
            arc = _shortest_arc(X, xi, xj)
            if arc is None or arc.length > ell - 1:
                raise PreconditionViolated("attachment vertices too far apart")
            paths[(i, j)] = arc
            paths[(j, i)] = arc.reverse()
    return paths


def _branch_sets_and_connectors(H, ell, lbars, paths, t):
    branch = []
    for i in range(t):
        verts = set()
        for j in range(t):
            full = conjunction(lbars[i], paths[(i, j)])
            for img in shunt_trace(full, ell).images:
                verts.add(H.index[img])
        branch.append(frozenset(verts))
    connectors = {}
    for i in range(t):
        for j in range(i + 1, t):
            pij = paths[(i, j)]
            lij = pij.length
            suffix_i = lbars[i].window(lij, ell)
            rev_suffix_j = lbars[j].window(lij, ell).reverse()
            r = conjunction(conjunction(suffix_i, pij), rev_suffix_j)
            imgs = shunt_trace(r, ell).images
            connectors[(i, j)] = tuple(H.index[im] for im in imgs)
    return branch, connectors


def _cycle_k2_witness(G, ell, cycle_arc, H):
    sub = G.edge_subgraph(cycle_arc.edges())
    hl = link_graph(sub, ell)
    if hl.m == 0:
        raise PreconditionViolated("cycle too short to host adjacent links")
    a, b, _ = hl.edges[0]
    ia, ib = H.index[hl.vertices[a]], H.index[hl.vertices[b]]
    return MinorWitness(
        2,
        _complete_edges(2),
        [frozenset({ia}), frozenset({ib})],
        {(0, 1): (ia, ib)},
        H,
        "cycle",
    )


def complete_minor_from_cut(G, ell, inst, H=None, limit=None):
    """Clique minor of order the cut size, grown from arcs into the cut set.

    One cycle per attachment threads the complement and re-enters through its
    own cut edge; sliding a window along it and onwards into the cut set gives
    the branch sets, and windows across the cut set give the connecting paths.
    """
    if ell < 1:
        raise PreconditionViolated(f"needs ell >= 1, got {ell}")
    X, Y = inst.validate(ell)
    cut = inst.cut_arcs()
    t = len(cut)
    if t < 2:
        raise PreconditionViolated(f"cut size {t} below 2")
    if H is None:
        H = link_graph(G, ell, limit)

    paths = _x_paths(X, cut, ell)

    def o_cycle(i):
        ip = (i + 1) % t
        rev_ip = Arc((cut[ip].head_vertex, cut[ip].units[1], cut[ip].tail_vertex))
        qarc = _shortest_arc(Y, cut[ip].tail_vertex, cut[i].tail_vertex)
        walk = conjunction(paths[(i, ip)], rev_ip)
        walk = conjunction(walk, qarc)
        return conjunction(walk, cut[i])

    if t == 2:
        return _cycle_k2_witness(G, ell, o_cycle(0), H)

    lbars = [_tail_window(o_cycle(i), ell) for i in range(t)]
    branch, connectors = _branch_sets_and_connectors(H, ell, lbars, paths, t)
    witness = MinorWitness(t, _complete_edges(t), branch, connectors, H, "cut")
    check = verify_minor(H, witness)
    assert check.ok, f"cut construction failed verification: {check.reason}"
    return witness


def complete_minor_with_cycle(G, ell, inst, H=None, limit=None):
    """Clique minor one larger than the cut size when the complement has a
    cycle; the cycle contributes an extra branch set adjacent to every other."""
    if ell < 1:
        raise PreconditionViolated(f"needs ell >= 1, got {ell}")
    X, Y = inst.validate(ell)
    cycle = shortest_cycle_arc(Y)
    if cycle is None:
        raise NoCycleInY("the complement is a forest")
    cut = inst.cut_arcs()
    t = len(cut)
    if t < 1:
        raise PreconditionViolated("no edges leave the cut set")
    if H is None:
        H = link_graph(G, ell, limit)
    paths = _x_paths(X, cut, ell)

    rotations = []
    for direction in (cycle, cycle.reverse()):
        for p in range(direction.length):
            rotations.append(_rotate_closed(direction, p))

    lbars = []
    z_attach = []  # last window before the step into each branch set
    z_extra = []
    for i in range(t):
        parc = _multi_source_arc(Y, [cycle.units[2 * p] for p in range(cycle.length)],
                                 cut[i].tail_vertex)
        assert parc is not None, "complement connectivity was validated"
        z = parc.tail_vertex
        qarc = None
        for rot in rotations:
            if rot.head_vertex != z:
                continue
            cand = _tail_window(rot, ell)
            if parc.length > 0 and cand.head_edge == parc.tail_edge:
                continue
            qarc = cand
            break
        assert qarc is not None, "no valid window around the complement cycle"
        full = conjunction(conjunction(qarc, parc), cut[i])
        s = parc.length
        lbars.append(full.window(s + 1, ell + s + 1))
        trace = shunt_trace(conjunction(qarc, parc), ell)
        z_extra.extend(trace.images)
        z_attach.append(Link.from_arc(full.window(s, ell + s)))

    if t >= 2:
        branch, connectors = _branch_sets_and_connectors(H, ell, lbars, paths, t)
    else:
        branch = [frozenset({H.index[Link.from_arc(lbars[0])]})]
        connectors = {}

    cyc_sub = G.edge_subgraph(cycle.edges())
    z_links = set(enumerate_links(cyc_sub, ell, limit))
    z_links.update(z_extra)
    z_set = frozenset(H.index[l] for l in z_links)
    branch.append(z_set)
    zi = t
    for i in range(t):
        li = H.index[Link.from_arc(lbars[i])]
        connectors[(i, zi)] = (li, H.index[z_attach[i]])
    witness = MinorWitness(t + 1, _complete_edges(t + 1), branch, connectors, H,
                           "cut+cycle")
    check = verify_minor(H, witness)
    assert check.ok, f"cycle construction failed verification: {check.reason}"
    return witness


# -- bipartite clique minor -----------------------------------------------------


def bipartite_clique_minor(d):
    """Clique minor of order ``d`` inside the complete bipartite ``K_{d-1,d-1}``:
    two opposite corner singletons plus matched cross pairs."""
    if d < 2:
        raise InvalidParameter(f"needs d >= 2, got {d}")
    host = complete_bipartite(d - 1, d - 1)
    idx = {v: i for i, v in enumerate(host.vertices)}
    a = [idx[f"a{i}"] for i in range(d - 1)]
    b = [idx[f"b{i}"] for i in range(d - 1)]
    sets = [frozenset({a[0]}), frozenset({b[0]})]
    for i in range(1, d - 1):
        sets.append(frozenset({a[i], b[i]}))
    connectors = {}
    for i in range(d):
        for j in range(i + 1, d):
            if i == 0 and j == 1:
                path = (a[0], b[0])
            elif i == 0:
                path = (a[0], b[j - 1])
            elif i == 1:
                path = (b[0], a[j - 1])
            else:
                path = (a[i - 1], b[j - 1])
            connectors[(i, j)] = path
    witness = MinorWitness(d, _complete_edges(d), sets, connectors, host, "bipartite")
    check = verify_minor(host, witness)
    assert check.ok, check.reason
    return witness


# -- hub lifting ----------------------------------------------------------------


def _middle_in(link, sub, ell):
    unit = link.middle_unit()
    if ell % 2 == 0:
        return sub.has_vertex(unit)
    return sub.has_edge(unit)


def _has_arc_of_length(G, ell):
    if ell == 0:
        return G.n > 0
    for start in G.vertices:
        stack = [(start,)]
        while stack:
            units = stack.pop()
            if len(units) == 2 * ell + 1:
                return True
            last_edge = units[-2] if len(units) > 1 else None
            for eid, w in G.incident(units[-1]):
                if eid != last_edge:
                    stack.append(units + (eid, w))
    return False


def lift_minor(G, ell, branch_sets, H=None, hub=None, limit=None):
    """Lift a minor of the hub subgraph into the link graph.

    Each branch set must contain a full link of its length; the lifted branch
    set is the component, of links whose middle unit sits in the branch set,
    that contains its links.  Connectors are an edge for even length and a
    two-step path through a link centred on the crossing edge for odd length.
    """
    if hub is None:
        hub = hub_subgraph(G, ell, limit)
    if H is None:
        H = link_graph(G, ell, limit)
    sets = [frozenset(bs) for bs in branch_sets]
    seen = set()
    for bs in sets:
        if not bs:
            raise PreconditionViolated("empty branch set")
        for v in bs:
            if not hub.has_vertex(v):
                raise PreconditionViolated(f"{v!r} is not a hub vertex")
            if v in seen:
                raise PreconditionViolated(f"branch sets overlap at {v!r}")
            seen.add(v)
    subs = [hub.induced_subgraph(bs) for bs in sets]
    for sub in subs:
        if not sub.is_connected():
            raise PreconditionViolated("branch set does not induce a connected subgraph")

    inner_links = []
    for k, sub in enumerate(subs):
        found = enumerate_links(sub, ell, limit) if _has_arc_of_length(sub, ell) else []
        if not found:
            raise BranchSetLacksLink(f"branch set {k} holds no link of length {ell}")
        inner_links.append(set(found))

    adj = H.adjacency()
    lifted = []
    for k, sub in enumerate(subs):
        members = {i for i, l in enumerate(H.vertices) if _middle_in(l, sub, ell)}
        inner_idx = {H.index[l] for l in inner_links[k]}
        comp = set()
        start = min(inner_idx)
        queue = deque([start])
        comp.add(start)
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in members and y not in comp:
                    comp.add(y)
                    queue.append(y)
        assert inner_idx <= comp, "links of one branch set fell into two components"
        lifted.append(frozenset(comp))

    # target edges: hub edges between different branch sets, one per pair
    vertex_part = {}
    for k, bs in enumerate(sets):
        for v in bs:
            vertex_part[v] = k
    cross = {}
    for eid, u, v in hub.edges():
        pu, pv = vertex_part.get(u), vertex_part.get(v)
        if pu is None or pv is None or pu == pv:
            continue
        pair = (pu, pv) if pu < pv else (pv, pu)
        if pair not in cross or eid < cross[pair]:
            cross[pair] = eid

    middle_map = {}
    if ell % 2 == 1:
        for i, l in enumerate(H.vertices):
            middle_map.setdefault(l.middle_unit(), []).append(i)

    connectors = {}
    for (i, j), eid in sorted(cross.items()):
        if ell % 2 == 0:
            found = None
            for a, b, _ in H.edges:
                if a in lifted[i] and b in lifted[j]:
                    found = (a, b)
                    break
                if b in lifted[i] and a in lifted[j]:
                    found = (b, a)
                    break
            assert found is not None, "no direct edge between lifted branch sets"
            connectors[(i, j)] = found
        else:
            found = None
            for mid in middle_map.get(eid, ()):
                a = next((x for x in sorted(adj[mid]) if x in lifted[i]), None)
                b = next((x for x in sorted(adj[mid]) if x in lifted[j]), None)
                if a is not None and b is not None:
                    found = (a, mid, b)
                    break
            assert found is not None, "no two-step connector through the crossing edge"
            connectors[(i, j)] = found

    witness = MinorWitness(len(sets), frozenset(cross), lifted, connectors, H, "hub-lift")
    check = verify_minor(H, witness)
    assert check.ok, f"hub lifting failed verification: {check.reason}"
    return witness


# -- the combined lower bound ---------------------------------------------------


def _k2_witness(H):
    if H.m == 0:
        raise NoEdge("the link graph has no edge")
    a, b, _ = H.edges[0]
    return MinorWitness(2, _complete_edges(2), [frozenset({a}), frozenset({b})],
                        {(0, 1): (a, b)}, H, "edge")


def _degeneracy_route(G, ell, H):
    d, core = G.degeneracy(with_core=True)
    if d < 2:
        return None
    if ell == 1:
        v = min((x for x in core.vertices if core.degree(x) >= d),
                key=lambda x: (core.degree(x), x))
        edge_links = []
        for eid, w in core.incident(v)[: d]:
            edge_links.append(H.index[Link.from_units((v, eid, w))])
        sets = [frozenset({i}) for i in edge_links[:d]]
        connectors = {}
        for i in range(d):
            for j in range(i + 1, d):
                connectors[(i, j)] = (edge_links[i], edge_links[j])
        witness = MinorWitness(d, _complete_edges(d), sets, connectors, H, "degeneracy")
        check = verify_minor(H, witness)
        assert check.ok, check.reason
        return witness
    for p in enumerate_arcs(core, ell - 1, 5000):
        a_ext = [(eid, w) for eid, w in core.incident(p.tail_vertex)
                 if eid != p.tail_edge][: d - 1]
        b_ext = [(eid, w) for eid, w in core.incident(p.head_vertex)
                 if eid != p.head_edge][: d - 1]
        if len(a_ext) < d - 1 or len(b_ext) < d - 1:
            continue
        a_links = [Link.from_arc(Arc((w, eid) + p.units)) for eid, w in a_ext]
        b_links = [Link.from_arc(Arc(p.units + (eid, w))) for eid, w in b_ext]
        if len(set(a_links) | set(b_links)) != 2 * (d - 1):
            continue
        ai = [H.index[l] for l in a_links]
        bi = [H.index[l] for l in b_links]
        sets = [frozenset({ai[0]}), frozenset({bi[0]})]
        for k in range(1, d - 1):
            sets.append(frozenset({ai[k], bi[k]}))
        connectors = {}
        for i in range(d):
            for j in range(i + 1, d):
                if i == 0 and j == 1:
                    path = (ai[0], bi[0])
                elif i == 0:
                    path = (ai[0], bi[j - 1])
                elif i == 1:
                    path = (bi[0], ai[j - 1])
                else:
                    path = (ai[i - 1], bi[j - 1])
                connectors[(i, j)] = path
        witness = MinorWitness(d, _complete_edges(d), sets, connectors, H, "degeneracy")
        check = verify_minor(H, witness)
        if check.ok:
            return witness
    return None


def _triple_split_cycle_witness(G, ell, H):
    """Clique minor of order three from a shortest simple cycle of length >= 3."""
    cyc = shortest_cycle_arc(G.underlying_simple())
    if cyc is None or cyc.length < 3:
        return None
    sub = G.edge_subgraph(cyc.edges())
    hl = link_graph(sub, ell)
    order = [0]
    adj = hl.adjacency()
    prev = None
    while len(order) < hl.n:
        nxt = sorted(w for w in adj[order[-1]] if w != prev and w not in order)
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    if len(order) < 3:
        return None
    k = len(order) // 3
    parts = [order[:k], order[k : 2 * k], order[2 * k :]]
    sets = [frozenset(H.index[hl.vertices[i]] for i in part) for part in parts]
    ends = []
    for a in range(3):
        b = (a + 1) % 3
        u = H.index[hl.vertices[parts[a][-1]]]
        v = H.index[hl.vertices[parts[b][0]]]
        ends.append(((a, b) if a < b else (b, a), (u, v) if a < b else (v, u)))
    connectors = dict(ends)
    witness = MinorWitness(3, _complete_edges(3), sets, connectors, H, "cycle")
    check = verify_minor(H, witness)
    if not check.ok:
        return None
    return witness


def _peel_degree_one(G):
    cur = G
    while True:
        keep = [v for v in cur.vertices if cur.degree(v) >= 2]
        if len(keep) == cur.n:
            return cur
        if not keep:
            return cur.induced_subgraph([])
        cur = cur.induced_subgraph(keep)


def _eta_route(G, ell, H, eta_cap, limit):
    comps = G.components()
    best = None
    for comp in comps:
        sub = G.induced_subgraph(comp)
        if sub.underlying_simple().n > eta_cap:
            continue
        eta = hadwiger_number(sub, eta_cap)
        if best is None or eta > best[0]:
            best = (eta, sub)
    if best is None:
        return None
    eta, comp_graph = best
    if eta <= 1:
        return None
    if eta == 2:
        return _k2_witness(H)
    if eta == 3:
        return _triple_split_cycle_witness(comp_graph, ell, H)
    peeled = _peel_degree_one(comp_graph)
    hub = hub_subgraph(peeled, ell, limit)
    if sorted(hub.vertices) != sorted(peeled.vertices) or sorted(hub.edge_ids) != sorted(
        peeled.edge_ids
    ):
        return None  # hub equality failed; other routes must serve
    eta2, model = hadwiger_model(peeled, eta_cap)
    assert eta2 == eta
    sets = [set(bs) for bs in model]
    assigned = set().union(*sets)
    changed = True
    while changed:
        changed = False
        for v in sorted(peeled.vertices):
            if v in assigned:
                continue
            for k, bs in enumerate(sets):
                if any(w in bs for w in peeled.neighbors(v)):
                    bs.add(v)
                    assigned.add(v)
                    changed = True
                    break
    deficient = None
    for k, bs in enumerate(sets):
        if not _has_arc_of_length(peeled.induced_subgraph(bs), ell):
            deficient = k
            break
    if deficient is None:
        try:
            return lift_minor(peeled, ell, [frozenset(bs) for bs in sets], H=H,
                              hub=hub, limit=limit)
        except LinkGraphError:
            return None
    x_set = frozenset(sets[deficient])
    inst = CutInstance(peeled, x_set)
    try:
        return complete_minor_with_cycle(peeled, ell, inst, H=H, limit=limit)
    except LinkGraphError:
        return None


def _candidate_route(G, ell, H, limit, max_candidates=200, tries=12):
    comps = G.components()
    candidates = []
    seen = set()
    for comp in comps:
        comp_set = set(comp)
        sub = G.induced_subgraph(comp)
        radius_cap = max(0, (ell + 1) // 2 - 1)
        for v in comp:
            balls = [frozenset({v})]
            if radius_cap >= 1:
                dist = {v: 0}
                queue = deque([v])
                while queue:
                    x = queue.popleft()
                    if dist[x] >= radius_cap:
                        continue
                    for _, w in sub.incident(x):
                        if w not in dist:
                            dist[w] = dist[x] + 1
                            queue.append(w)
                for r in range(1, radius_cap + 1):
                    balls.append(frozenset(x for x in dist if dist[x] <= r))
            for ball in balls:
                if ball in seen or len(ball) >= len(comp_set):
                    continue
                seen.add(ball)
                candidates.append((sub, ball))
                if len(candidates) >= max_candidates:
                    break
            if len(candidates) >= max_candidates:
                break
    scored = []
    for sub, ball in candidates:
        t = sum(1 for _, u, v in sub.edges() if (u in ball) != (v in ball))
        scored.append((-t, sorted(ball), sub, ball))
    scored.sort(key=lambda s: (s[0], s[1]))
    best = None
    for _, _, sub, ball in scored[:tries]:
        inst = CutInstance(sub, ball)
        for builder in (complete_minor_with_cycle, complete_minor_from_cut):
            try:
                w = builder(sub, ell, inst, H=H, limit=limit)
            except LinkGraphError:
                continue
            if best is None or w.target_size > best.target_size:
                best = w
            break
    return best


@dataclass
class LowerBoundResult:
    bound: int
    witness: MinorWitness
    route: str
    notes: list


def hadwiger_lower_bound(G, ell, H=None, eta_cap=DEFAULT_HADWIGER_CAP, limit=None):
    """Best verified clique-minor witness in the link graph.

    Tries the degeneracy route (bipartite clique inside one edge part), the
    model route through the hub or a deficient branch set, and cut candidates;
    never returns a bound without a verified witness.
    """
    if ell < 1:
        raise PreconditionViolated(f"needs ell >= 1, got {ell}")
    if H is None:
        H = link_graph(G, ell, limit)
    if H.m == 0:
        raise NoEdge("the link graph has no edge")
    notes = []
    witnesses = [_k2_witness(H)]
    for name, fn in (
        ("degeneracy", lambda: _degeneracy_route(G, ell, H)),
        ("model", lambda: _eta_route(G, ell, H, eta_cap, limit)),
        ("cut-candidates", lambda: _candidate_route(G, ell, H, limit)),
    ):
        try:
            w = fn()
        except OracleTooLarge as exc:
            notes.append(f"{name}: {exc}")
            continue
        if w is not None:
            check = verify_minor(H, w)
            assert check.ok, f"{name} witness failed verification: {check.reason}"
            witnesses.append(w)
        else:
            notes.append(f"{name}: no witness")
    best = max(witnesses, key=lambda w: w.target_size)
    return LowerBoundResult(best.target_size, best, best.route, notes)
