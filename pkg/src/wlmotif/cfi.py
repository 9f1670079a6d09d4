"""CFI products over labeled base graphs and the oddomorphism / GF(2) machinery.

``ccfi(G, U)`` has a vertex ``(v, S)`` for every set ``S`` of edges incident
to ``v`` whose size has the parity of ``[v in U]``; ``(v, S)`` and ``(u, T)``
are adjacent iff ``{v, u}`` is an edge of ``G`` lying in both or neither of
``S`` and ``T``. Labels are inherited from the base.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .canon import canonical_form, canonical_graph, is_isomorphic
from .config import GUARDS
from .errors import DisconnectedBase, GuardExceeded, TreewidthTooLarge
from .gf2 import Gf2System
from .graph import LabeledGraph, disjoint_union
from .homcount import count_homs, iter_homomorphisms, require_homomorphism
from .treewidth import exact_treewidth


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def incident_edges(G: LabeledGraph, v: int) -> list[tuple[int, int]]:
    return sorted(_edge(v, w) for w in G.adj[v])


@dataclass(frozen=True)
class CfiGraph:
    base: LabeledGraph
    twist_set: frozenset
    product: LabeledGraph
    provenance: tuple  # product vertex -> (base vertex, frozenset of base edges)

    def rho(self, i: int) -> int:
        """Projection ``(v, S) -> v``; a homomorphism onto the base."""
        return self.provenance[i][0]

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "twist_set": sorted(self.twist_set),
            "product": self.product.to_dict(),
            "provenance": [
                {"vertex": v, "edges": [list(e) for e in sorted(S)]} for v, S in self.provenance
            ],
        }


def cfi_size(G: LabeledGraph, U=()) -> int:
    U = set(U)
    total = 0
    for v in range(G.n):
        d = G.degree(v)
        total += 2 ** (d - 1) if d else (0 if v in U else 1)
    return total


def ccfi(G: LabeledGraph, U=(), guard: int | None = None) -> CfiGraph:
    """Labeled CFI product of a connected base with twist set ``U``."""
    U = frozenset(U)
    if any(not 0 <= u < G.n for u in U):
        raise ValueError("twist set has vertices outside the base")
    if G.n and not G.is_connected():
        raise DisconnectedBase("base graph is disconnected; build the product per component")
    bound = GUARDS.cfi_product if guard is None else guard
    size = cfi_size(G, U)
    if size > bound:
        raise GuardExceeded("cfi_product", size, bound, "sum over v of 2^(deg(v)-1)")
    prov = []
    for v in range(G.n):
        inc = incident_edges(G, v)
        parity = 1 if v in U else 0
        for r in range(parity, len(inc) + 1, 2):
            for S in itertools.combinations(inc, r):
                prov.append((v, frozenset(S)))
    by_vertex: dict[int, list[int]] = {}
    for i, (v, _) in enumerate(prov):
        by_vertex.setdefault(v, []).append(i)
    edges = {}
    for (v, u), lab in G.edges.items():
        e = (v, u)
        for i in by_vertex.get(v, []):
            in_s = e in prov[i][1]
            for j in by_vertex.get(u, []):
                if in_s == (e in prov[j][1]):
                    edges[(i, j)] = lab
    labels = [G.labels[v] for v, _ in prov]
    product = LabeledGraph(len(prov), labels, edges, G.sigma, G.delta)
    return CfiGraph(G, U, product, tuple(prov))


def ccfi_twist(G: LabeledGraph, guard: int | None = None) -> CfiGraph:
    """The product twisted at the lowest-index vertex."""
    return ccfi(G, {0} if G.n else set(), guard)


def verify_parity_iso(G: LabeledGraph, U, U2, guard: int | None = None) -> bool:
    """Whether ``ccfi(G, U)`` and ``ccfi(G, U2)`` are isomorphic."""
    a, b = ccfi(G, U).product, ccfi(G, U2).product
    bound = GUARDS.cfi_iso_n if guard is None else guard
    return is_isomorphic(a, b, guard=bound)


# -- oddomorphisms ----------------------------------------------------------

def _parities(phi, F: LabeledGraph, G: LabeledGraph, a: int, edges=None) -> dict[int, int]:
    nbrs = F.adj[a] if edges is None else edges[a]
    counts = {v: 0 for v in G.adj[phi[a]]}
    for b in nbrs:
        counts[phi[b]] = counts.get(phi[b], 0) + 1
    return {v: counts[v] & 1 for v in G.adj[phi[a]]}


def classify_vertex(phi, F: LabeledGraph, G: LabeledGraph, a: int, _edges=None) -> str:
    """``"odd"``, ``"even"`` or ``"neither"`` for vertex ``a`` of ``F`` under ``phi``.

    A vertex whose image has no neighbours satisfies both conditions
    vacuously and is reported as odd.
    """
    if _edges is None:
        require_homomorphism(phi, F, G)
    par = set(_parities(phi, F, G, a, _edges).values())
    if par == {0}:
        return "even"
    if par == {1} or not par:
        return "odd"
    return "neither"


@dataclass(frozen=True)
class OddomorphismWitness:
    phi: tuple
    vertices: tuple
    edges: tuple
    parity: tuple  # (vertex, "odd"|"even") for every vertex of the subgraph

    def to_dict(self) -> dict:
        return {
            "phi": list(self.phi),
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "parity": {str(a): p for a, p in self.parity},
        }


def _sub_adjacency(n: int, vertices, edges) -> list[set]:
    adj = [set() for _ in range(n)]
    vs = set(vertices)
    for a, b in edges:
        if a not in vs or b not in vs:
            raise ValueError("subgraph edge leaves the vertex subset")
        adj[a].add(b)
        adj[b].add(a)
    return adj


def is_oddomorphism(phi, F: LabeledGraph, G: LabeledGraph, vertices, edges) -> bool:
    """Both parity conditions for ``phi`` restricted to the subgraph ``(vertices, edges)``."""
    adj = _sub_adjacency(F.n, vertices, edges)
    odd_count = [0] * G.n
    for a in vertices:
        c = classify_vertex(phi, F, G, a, adj)
        if c == "neither":
            return False
        if c == "odd":
            odd_count[phi[a]] += 1
    hit = {phi[a] for a in vertices}
    return all(v in hit and odd_count[v] % 2 == 1 for v in range(G.n))


def validate_witness(F: LabeledGraph, G: LabeledGraph, w: OddomorphismWitness) -> bool:
    if any(not F.has_edge(a, b) for a, b in w.edges):
        return False
    for a, b in w.edges:
        if G.edge_label(w.phi[a], w.phi[b]) != F.edge_label(a, b):
            return False
    if any(F.labels[a] != G.labels[w.phi[a]] for a in w.vertices):
        return False
    return is_oddomorphism(w.phi, F, G, w.vertices, w.edges)


def _core_vertices(phi, F: LabeledGraph, G: LabeledGraph):
    """Vertex subset used for the search, or ``None`` if ``phi`` misses a target vertex.

    Vertices over non-isolated targets are always kept (dropping one is the
    same as keeping it without edges). Over an isolated target every preimage
    is vacuously odd, so exactly one preimage is kept.
    """
    if len(set(phi)) != G.n:
        return None
    keep, seen = [], set()
    for a in range(F.n):
        v = phi[a]
        if G.adj[v]:
            keep.append(a)
        elif v not in seen:
            seen.add(v)
            keep.append(a)
    return keep


def _edge_system(phi, F: LabeledGraph, G: LabeledGraph, vertices):
    """GF(2) system in edge indicators ``z`` and odd flags ``y`` for a fixed ``phi``."""
    vs = set(vertices)
    fedges = [e for e in sorted(F.edges) if e[0] in vs and e[1] in vs]
    eidx = {e: i for i, e in enumerate(fedges)}
    yidx = {a: len(fedges) + i for i, a in enumerate(vertices)}
    sys = Gf2System(len(fedges) + len(vertices))
    for a in vertices:
        nb = G.adj[phi[a]]
        if not nb:
            sys.add([yidx[a]], 1)
            continue
        for v in nb:
            cols = [eidx[_edge(a, b)] for b in F.adj[a] if b in vs and phi[b] == v]
            sys.add(cols + [yidx[a]], 0)
    for v in range(G.n):
        sys.add([yidx[a] for a in vertices if phi[a] == v], 1)
    return sys, fedges, yidx


def _witness(phi, F, G, vertices, edges) -> OddomorphismWitness:
    adj = _sub_adjacency(F.n, vertices, edges)
    parity = tuple((a, classify_vertex(phi, F, G, a, adj)) for a in vertices)
    return OddomorphismWitness(tuple(phi), tuple(vertices), tuple(edges), parity)


def find_weak_oddomorphism(
    F: LabeledGraph, G: LabeledGraph, exhaustive: bool = False, guard: int | None = None
) -> OddomorphismWitness | None:
    """A homomorphism of ``F`` into ``G`` that is an oddomorphism on some subgraph.

    For each surjective homomorphism the subgraph choice is a GF(2)
    feasibility problem, solved directly. ``exhaustive`` instead tries every
    edge subset (a test oracle).
    """
    bound = GUARDS.oddo_edges if guard is None else guard
    if F.m > bound:
        raise GuardExceeded("oddo_edges", F.m, bound, "edges of the source graph")
    if F.n < G.n:
        return None
    for phi in iter_homomorphisms(F, G):
        phi = tuple(phi)
        verts = _core_vertices(phi, F, G)
        if verts is None:
            continue
        if exhaustive:
            vs = set(verts)
            pool = [e for e in sorted(F.edges) if e[0] in vs and e[1] in vs]
            for r in range(len(pool) + 1):
                for sub in itertools.combinations(pool, r):
                    if is_oddomorphism(phi, F, G, verts, sub):
                        return _witness(phi, F, G, verts, sub)
            continue
        sys, fedges, _ = _edge_system(phi, F, G, verts)
        x = sys.solve()
        if x is None:
            continue
        sub = tuple(e for i, e in enumerate(fedges) if x[i])
        w = _witness(phi, F, G, verts, sub)
        if not is_oddomorphism(phi, F, G, verts, sub):
            raise AssertionError("linear certificate failed to validate")
        return w
    return None


# -- hom counts into CFI products ------------------------------------------

def hom_system(F: LabeledGraph, G: LabeledGraph, U, phi) -> Gf2System:
    """Variables ``x[a, e]`` for ``e`` incident to ``phi(a)``; vertex parity and edge agreement rows."""
    U = set(U)
    var = {}
    for a in range(F.n):
        for e in incident_edges(G, phi[a]):
            var[(a, e)] = len(var)
    sys = Gf2System(len(var), names=list(var))
    for a in range(F.n):
        cols = [var[(a, e)] for e in incident_edges(G, phi[a])]
        sys.add(cols, 1 if phi[a] in U else 0)
    for a, b in sorted(F.edges):
        e = _edge(phi[a], phi[b])
        sys.add([var[(a, e)], var[(b, e)]], 0)
    return sys


def gf2_hom_count(F: LabeledGraph, G: LabeledGraph, U, phi) -> int:
    """Homomorphisms into ``ccfi(G, U)`` lying over ``phi``: solutions of the parity system."""
    phi = tuple(phi)
    require_homomorphism(phi, F, G)
    return hom_system(F, G, U, phi).solution_count()


def gf2_total(F: LabeledGraph, G: LabeledGraph, U) -> int:
    return sum(gf2_hom_count(F, G, U, phi) for phi in iter_homomorphisms(F, G))


# -- anchors and counterexample pairs --------------------------------------

def rainbow_anchor(sigma, delta, n: int, guard: int | None = None) -> LabeledGraph:
    """Connected graph receiving a homomorphism from every labeled graph on <= ``n`` vertices.

    One copy of every labeled ``n``-clique (up to isomorphism) plus an apex
    adjacent to vertex 0 of each copy; the apex and its edges take the
    smallest symbols.
    """
    sigma = sorted(sigma) or ["1"]
    delta = sorted(delta) or ["1"]
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = list(itertools.combinations(range(n), 2))
    raw = len(sigma) ** n * len(delta) ** len(pairs)
    bound = GUARDS.anchor_labelings if guard is None else guard
    if raw > bound:
        raise GuardExceeded("anchor_labelings", raw, bound, "labelings of the clique")
    cliques = {}
    for vl in itertools.product(sigma, repeat=n):
        for el in itertools.product(delta, repeat=len(pairs)):
            K = LabeledGraph(n, list(vl), dict(zip(pairs, el)), sigma, delta)
            code = canonical_form(K, guard=max(n, GUARDS.iso_n))
            if code not in cliques:
                cliques[code] = canonical_graph(K, guard=max(n, GUARDS.iso_n))
    labels = [sigma[0]]
    edges = {}
    for code in sorted(cliques):
        K = cliques[code]
        off = len(labels)
        labels.extend(K.labels)
        for (u, v), lab in K.edges.items():
            edges[(u + off, v + off)] = lab
        edges[(0, off)] = delta[0]
    return LabeledGraph(len(labels), labels, edges, sigma, delta)


@dataclass(frozen=True)
class CounterexamplePair:
    left: LabeledGraph
    right: LabeledGraph
    k: int
    component: LabeledGraph
    anchor: LabeledGraph


def max_treewidth_component(F: LabeledGraph) -> LabeledGraph:
    comps = [F.induced(c) for c in F.components()]
    comps.sort(key=lambda C: canonical_form(C, guard=max(C.n, GUARDS.iso_n)))
    best = max(exact_treewidth(C) for C in comps)
    return next(C for C in comps if exact_treewidth(C) == best)


def counterexample_pair(F: LabeledGraph) -> CounterexamplePair:
    """Graphs that ``(tw(F) - 1)``-WL cannot separate but ``homs(F, .)`` does."""
    tw = exact_treewidth(F)
    if tw < 2:
        raise TreewidthTooLarge(f"pattern treewidth {tw} < 2; no k >= 1 to separate")
    F1 = canonical_graph(max_treewidth_component(F), guard=max(F.n, GUARDS.iso_n))
    J = rainbow_anchor(F.sigma, F.delta, F.n)
    left = disjoint_union(ccfi(F1).product, J)
    right = disjoint_union(ccfi_twist(F1).product, J)
    return CounterexamplePair(left, right, tw - 1, F1, J)


def hom_gap(F: LabeledGraph, pair: CounterexamplePair) -> tuple[int, int]:
    return count_homs(F, pair.left), count_homs(F, pair.right)
