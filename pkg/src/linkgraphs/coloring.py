"""Proper colourings: exact oracles, the class-by-class recolouring pass, and
the recursive two-step colouring of link graphs."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .construction import LabeledGraph, link_graph
from .errors import (
    InvalidParameter,
    OracleTooLarge,
    PartialColoring,
    PreconditionViolated,
)
from .multigraph import Multigraph

DEFAULT_CHROMATIC_CAP = 64


@dataclass(frozen=True)
class Coloring:
    """Vertex colouring over palette ``[1..t]`` keyed by vertex index."""

    assignment: dict
    t: int

    def used(self):
        return len(set(self.assignment.values()))

    def max_color(self):
        return max(self.assignment.values(), default=0)

    def to_json(self, H=None):
        if H is None:
            data = {str(k): v for k, v in self.assignment.items()}
        else:
            data = {str(H.vertices[k]): v for k, v in self.assignment.items()}
        return json.dumps(data, indent=2, sort_keys=True)


@dataclass(frozen=True)
class EdgeColoring:
    """Edge colouring keyed by edge id."""

    assignment: dict
    t: int

    def used(self):
        return len(set(self.assignment.values()))


def _adjacency_of(H):
    if isinstance(H, LabeledGraph):
        return H.adjacency()
    if isinstance(H, Multigraph):
        idx = {v: i for i, v in enumerate(H.vertices)}
        adj = [set() for _ in range(H.n)]
        for _, u, v in H.edges():
            adj[idx[u]].add(idx[v])
            adj[idx[v]].add(idx[u])
        return adj
    return H  # already a list of neighbour sets


def is_proper(H, coloring):
    """True iff no edge is monochromatic; the assignment must be total."""
    adj = _adjacency_of(H)
    n = len(adj)
    assign = coloring.assignment
    if len(assign) != n or any(i not in assign for i in range(n)):
        raise PartialColoring(f"assignment covers {len(assign)} of {n} vertices")
    for i in range(n):
        ci = assign[i]
        for j in adj[i]:
            if j > i and assign[j] == ci:
                return False
    return True


def greedy_coloring(adj, order=None):
    """Sequential colouring in the given (default: saturation) order."""
    n = len(adj)
    colors = {}
    if order is None:
        order = _dsatur_order(adj)
    for v in order:
        used = {colors[w] for w in adj[v] if w in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    k = max(colors.values(), default=0)
    return k, colors


def _dsatur_order(adj):
    n = len(adj)
    sat = [set() for _ in range(n)]
    colors = {}
    order = []
    uncolored = set(range(n))
    while uncolored:
        v = max(uncolored, key=lambda x: (len(sat[x]), len(adj[x]), -x))
        order.append(v)
        used = {colors[w] for w in adj[v] if w in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for w in adj[v]:
            sat[w].add(c)
    return order


def _greedy_clique(adj):
    """A maximal clique grown from the highest-degree vertex (lower bound)."""
    n = len(adj)
    if n == 0:
        return []
    start = max(range(n), key=lambda v: (len(adj[v]), -v))
    clique = [start]
    candidates = sorted(adj[start], key=lambda v: (-len(adj[v]), v))
    for v in candidates:
        if all(v in adj[u] for u in clique):
            clique.append(v)
    return clique


def exact_chromatic(H, cap=DEFAULT_CHROMATIC_CAP):
    """Exact chromatic number with a witness, by saturation branch and bound.

    Deterministic: ties break on vertex index.  Parallel edges are irrelevant
    for properness and are collapsed by the adjacency view.
    """
    adj = _adjacency_of(H)
    n = len(adj)
    if cap is not None and n > cap:
        raise OracleTooLarge(n, cap)
    if n == 0:
        return 0, Coloring({}, 0)
    if all(not a for a in adj):
        return 1, Coloring({i: 1 for i in range(n)}, 1)

    ub, best = greedy_coloring(adj)
    clique = _greedy_clique(adj)
    lb = len(clique)
    if lb >= ub:
        return ub, Coloring(best, ub)

    best_k = ub
    best_assign = dict(best)
    colors = {}
    n_adj = adj

    def choose():
        pick, key = None, None
        for v in range(n):
            if v in colors:
                continue
            sat = len({colors[w] for w in n_adj[v] if w in colors})
            k2 = (sat, len(n_adj[v]), -v)
            if key is None or k2 > key:
                pick, key = v, k2
        return pick

    def branch(used_k):
        nonlocal best_k, best_assign
        if used_k >= best_k:
            return
        v = choose()
        if v is None:
            best_k = used_k
            best_assign = dict(colors)
            return
        seen = {colors[w] for w in n_adj[v] if w in colors}
        for c in range(1, min(used_k + 1, best_k - 1) + 1):
            if c in seen:
                continue
            colors[v] = c
            branch(max(used_k, c))
            del colors[v]
            if best_k <= max(lb, 1):
                return

    # seed the clique to cut symmetry; a clique needs pairwise distinct colours
    for i, v in enumerate(clique):
        colors[v] = i + 1
    branch(len(clique))
    for i, v in enumerate(clique):
        del colors[v]
    return best_k, Coloring(best_assign, best_k)


def exact_edge_chromatic(G, cap=DEFAULT_CHROMATIC_CAP):
    """Exact edge-chromatic number via the edge-conflict graph."""
    eids = list(G.edge_ids)
    if cap is not None and len(eids) > cap:
        raise OracleTooLarge(len(eids), cap)
    adj = [set() for _ in eids]
    pos = {e: i for i, e in enumerate(eids)}
    for v in G.vertices:
        inc = [e for e, _ in G.incident(v)]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                i, j = pos[inc[a]], pos[inc[b]]
                adj[i].add(j)
                adj[j].add(i)
    chi, col = exact_chromatic(adj, cap=None)
    delta = G.max_degree()
    assert delta <= chi <= max(delta, math.floor(1.5 * delta)) or G.m == 0
    return chi, EdgeColoring({eids[i]: c for i, c in col.assignment.items()}, chi)


def reduce_coloring(H, coloring, r):
    """Recolour classes from the top down; output stays proper and uses at
    most ``floor(t*r/(r+1)) + 1`` colours.

    Precondition: every vertex sees at most ``r`` distinct foreign colours.
    For ``t <= r + 1`` the input is returned unchanged (the bound equals t).
    """
    adj = _adjacency_of(H)
    n = len(adj)
    if r < 0:
        raise InvalidParameter(f"r must be >= 0, got {r}")
    if not is_proper(adj, coloring):
        raise PreconditionViolated("input colouring is not proper")
    t = coloring.t
    assign = coloring.assignment
    for v in range(n):
        foreign = {assign[w] for w in adj[v]}
        if len(foreign) > r:
            raise PreconditionViolated(
                f"vertex {v} sees {len(foreign)} foreign colours > r={r}"
            )
    if t <= r + 1:
        return Coloring(dict(assign), t)

    col = dict(assign)
    classes = {}
    for v in range(n):
        classes.setdefault(assign[v], []).append(v)
    for j in range(1, t + 1):
        cls = t - j + 1
        for u in sorted(classes.get(cls, ())):
            neighbour_colors = {col[w] for w in adj[u]}
            s = 1
            while s in neighbour_colors:
                s += 1
            if s < cls:
                col[u] = s

    t_out = (t * r) // (r + 1) + 1
    out = Coloring(col, t_out)
    assert out.max_color() <= t_out, "recolouring exceeded its bound"
    assert is_proper(adj, out), "recolouring broke properness"
    assert out.used() <= coloring.used(), "recolouring increased colour count"
    return out


def lift_coloring(G, ell, lower, coloring, upper=None, limit=None):
    """Colour each link by the colour of its middle segment two levels down,
    then recolour with ``r = 2``.

    ``lower`` is the link graph two shorter; ``coloring`` must be proper on it.
    """
    if ell < 2:
        raise InvalidParameter(f"lift needs ell >= 2, got {ell}")
    if not is_proper(lower, coloring):
        raise PreconditionViolated("lower colouring is not proper")
    if upper is None:
        upper = link_graph(G, ell, limit)
    assign = {}
    for i, link in enumerate(upper.vertices):
        key = link.middle_segment(ell - 2)
        assign[i] = coloring.assignment[lower.index[key]]
    lifted = Coloring(assign, coloring.t)
    if not is_proper(upper, lifted):
        raise PreconditionViolated("lifted colouring is not proper")
    return reduce_coloring(upper, lifted, 2)


@dataclass
class RecursiveColoring:
    ell: int
    graph: LabeledGraph
    coloring: Coloring
    exact_base: bool
    base_kind: str  # "chromatic" or "edge-chromatic"
    base_value: int

    @property
    def bound(self):
        return self.coloring.t


def recursive_chromatic_bound(G, ell, cap=DEFAULT_CHROMATIC_CAP, limit=None):
    """Colour the ``ell``-link graph by repeated lifting from the base case.

    Base cases: length 0 uses the exact chromatic oracle on the graph itself,
    length 1 transports an optimal edge colouring; graphs beyond the oracle
    cap fall back to greedy and are flagged via ``exact_base``.
    """
    if ell < 0:
        raise InvalidParameter(f"ell must be >= 0, got {ell}")
    if ell == 0:
        H = link_graph(G, 0, limit)
        try:
            chi, col = exact_chromatic(H, cap)
            exact = True
        except OracleTooLarge:
            k, colors = greedy_coloring(H.adjacency())
            chi, col = k, Coloring(colors, max(k, 1) if H.n else 0)
            exact = False
        return RecursiveColoring(0, H, col, exact, "chromatic", chi)
    if ell == 1:
        H = link_graph(G, 1, limit)
        try:
            chi_p, ecol = exact_edge_chromatic(G, cap)
            exact = True
            assign = {i: ecol.assignment[link.units[1]] for i, link in enumerate(H.vertices)}
            col = Coloring(assign, chi_p)
        except OracleTooLarge:
            k, colors = greedy_coloring(H.adjacency())
            col = Coloring(colors, max(k, 1) if H.n else 0)
            chi_p = col.t
            exact = False
        assert is_proper(H, col)
        return RecursiveColoring(1, H, col, exact, "edge-chromatic", chi_p)
    below = recursive_chromatic_bound(G, ell - 2, cap, limit)
    H = link_graph(G, ell, limit)
    if H.n == 0:
        return RecursiveColoring(ell, H, Coloring({}, 0), below.exact_base,
                                 below.base_kind, below.base_value)
    col = lift_coloring(G, ell, below.graph, below.coloring, upper=H, limit=limit)
    return RecursiveColoring(ell, H, col, below.exact_base, below.base_kind,
                             below.base_value)


@dataclass
class ChromaticBounds:
    """The applicable upper bounds for the chromatic number of a link graph."""

    ell: int
    chi: int | None  # chromatic number of the base graph (even case)
    chi_prime: int | None  # edge-chromatic number (odd case)
    exact_chi: bool
    exact_chi_prime: bool
    parity_bound: int | None  # geometric-decay bound from the matching base
    max_degree_bound: int | None  # Delta + 1, absent for ell == 1
    two_back_bound: int | None  # chromatic number two levels down, if oracle-sized

    def applicable(self):
        out = {}
        if self.parity_bound is not None:
            out["parity"] = self.parity_bound
        if self.max_degree_bound is not None:
            out["max_degree"] = self.max_degree_bound
        if self.two_back_bound is not None:
            out["two_back"] = self.two_back_bound
        return out

    def minimum(self):
        vals = self.applicable().values()
        return min(vals) if vals else None


def _decay_bound(base, steps):
    """min(base, floor((2/3)^steps * (base - 3)) + 3), exact in rationals."""
    num, den = 2**steps, 3**steps
    decayed = math.floor(num * (base - 3) / den) + 3
    return min(base, decayed)


def chromatic_upper_bounds(G, ell, cap=DEFAULT_CHROMATIC_CAP, limit=None):
    """Evaluate every applicable closed-form bound for reporting."""
    chi = chi_prime = None
    exact_chi = exact_chi_prime = False
    parity = None
    if ell % 2 == 0:
        try:
            chi, _ = exact_chromatic(link_graph(G, 0, limit), cap)
            exact_chi = True
        except OracleTooLarge:
            chi, _ = greedy_coloring(link_graph(G, 0, limit).adjacency())
        parity = _decay_bound(chi, ell // 2)
    else:
        try:
            chi_prime, _ = exact_edge_chromatic(G, cap)
            exact_chi_prime = True
        except OracleTooLarge:
            k, _ = greedy_coloring(link_graph(G, 1, limit).adjacency())
            chi_prime = k
        parity = _decay_bound(chi_prime, (ell - 1) // 2)
    delta_bound = G.max_degree() + 1 if ell != 1 else None
    two_back = None
    if ell >= 2:
        try:
            two_back, _ = exact_chromatic(link_graph(G, ell - 2, limit), cap)
        except OracleTooLarge:
            two_back = None
    return ChromaticBounds(
        ell, chi, chi_prime, exact_chi, exact_chi_prime, parity, delta_bound, two_back
    )


def three_colorable_threshold(G, ell):
    """True when the closed-form decay guarantees three colours at this length."""
    if ell % 2 == 0:
        base = exact_chromatic(link_graph(G, 0))[0]
        return base <= 3 or ell > 2 * math.log(base - 3, 1.5)
    base = exact_edge_chromatic(G)[0]
    return base <= 3 or ell > 2 * math.log(base - 3, 1.5) + 1
