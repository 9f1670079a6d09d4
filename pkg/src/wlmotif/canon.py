"""Isomorphism testing, canonical codes, automorphism counts and atomic types.

Everything here is exhaustive search made tolerable by colour refinement:
vertices are pre-partitioned by label and refined to an equitable partition
before any branching happens. Intended for the small patterns this package
works with, not for graphs at scale.
"""

from __future__ import annotations

import json

from .config import GUARDS
from .errors import GuardExceeded
from .graph import LabeledGraph

AtpCode = tuple


def _initial_colors(labels) -> list[int]:
    rank = {lab: i for i, lab in enumerate(sorted(set(labels)))}
    return [rank[lab] for lab in labels]


def _rank(keys) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def refine(adj, colors: list[int]) -> list[int]:
    """Refine ``colors`` to the coarsest equitable partition below it.

    Colours are ranks of sorted signatures, so the result depends only on the
    isomorphism type of ``(graph, colors)``.
    """
    ncols = len(set(colors))
    while True:
        sig = [
            (colors[v], tuple(sorted((lab, colors[w]) for w, lab in adj[v].items())))
            for v in range(len(colors))
        ]
        new = _rank(sig)
        k = len(set(new))
        if k == ncols:
            return new
        colors, ncols = new, k


def _individualize(colors: list[int], chosen) -> list[int]:
    return _rank([(c, 0 if v in chosen else 1) for v, c in enumerate(colors)])


def _check_guard(G: LabeledGraph, guard: int | None, name: str, default: int) -> None:
    bound = default if guard is None else guard
    if G.n > bound:
        raise GuardExceeded(name, G.n, bound)


# -- canonical form ---------------------------------------------------------

def _certificate(G: LabeledGraph, order: list[int]):
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    labels = tuple(G.labels[v] for v in order)
    edges = tuple(sorted(
        (min(pos[u], pos[v]), max(pos[u], pos[v]), lab) for (u, v), lab in G.edges.items()
    ))
    return (labels, edges)


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[max(a, b)] = min(a, b)


def canonical_order(G: LabeledGraph) -> tuple[list[int], tuple]:
    """Return ``(order, certificate)`` minimising the certificate over the search tree.

    Individualisation-refinement with pruning by automorphisms discovered at
    leaves whose certificates coincide.
    """
    adj = G.adj
    best: list = [None, None]  # certificate, order
    first: list = [None, None]
    autos: list[list[int]] = []

    def orbit_pruned(candidate, explored, prefix):
        if not explored or not autos:
            return False
        uf = _UnionFind(G.n)
        for g in autos:
            if all(g[p] == p for p in prefix):
                for v in range(G.n):
                    uf.union(v, g[v])
        root = uf.find(candidate)
        return any(uf.find(u) == root for u in explored)

    def leaf(colors):
        order = [0] * G.n
        for v, c in enumerate(colors):
            order[c] = v
        cert = _certificate(G, order)
        if first[0] is None:
            first[0], first[1] = cert, order
        elif cert == first[0]:
            autos.append(_map_between(first[1], order))
        if best[0] is None or cert < best[0]:
            best[0], best[1] = cert, order
        elif cert == best[0] and best[1] is not first[1]:
            autos.append(_map_between(best[1], order))

    def search(colors, prefix):
        colors = refine(adj, colors)
        ncol = len(set(colors))
        if ncol == G.n:
            leaf(colors)
            return
        sizes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            sizes.setdefault(c, []).append(v)
        target = min(
            (cell for cell in sizes.values() if len(cell) > 1), key=lambda cell: (len(cell), colors[cell[0]])
        )
        explored: list[int] = []
        for v in target:
            if orbit_pruned(v, explored, prefix):
                continue
            search(_individualize(colors, {v}), prefix + [v])
            explored.append(v)

    if G.n == 0:
        return [], _certificate(G, [])
    search(_initial_colors(G.labels), [])
    return best[1], best[0]


def _map_between(src_order, dst_order) -> list[int]:
    g = [0] * len(src_order)
    for a, b in zip(src_order, dst_order):
        g[a] = b
    return g


def canonical_form(G: LabeledGraph, guard: int | None = None) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (labels included)."""
    _check_guard(G, guard, "iso_n", GUARDS.iso_n)
    _, cert = canonical_order(G)
    labels, edges = cert
    return json.dumps([G.n, list(labels), [list(e) for e in edges]], separators=(",", ":")).encode()


def canonical_graph(G: LabeledGraph, guard: int | None = None) -> LabeledGraph:
    """The representative obtained by renumbering ``G`` into canonical order."""
    _check_guard(G, guard, "iso_n", GUARDS.iso_n)
    order, _ = canonical_order(G)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return G.relabel(perm)


# -- isomorphism search ----------------------------------------------------

def _union_adj(G: LabeledGraph, H: LabeledGraph):
    shift = G.n
    adj = [dict(a) for a in G.adj]
    for a in H.adj:
        adj.append({w + shift: lab for w, lab in a.items()})
    return adj


def _balanced(colors, n):
    count: dict[int, int] = {}
    for v, c in enumerate(colors):
        count[c] = count.get(c, 0) + (1 if v < n else -1)
    return all(x == 0 for x in count.values())


def _quick_reject(G: LabeledGraph, H: LabeledGraph) -> bool:
    if G.n != H.n or G.m != H.m:
        return True
    if sorted(G.labels) != sorted(H.labels):
        return True
    if sorted(G.edges.values()) != sorted(H.edges.values()):
        return True
    return sorted(G.degree(v) for v in range(G.n)) != sorted(H.degree(v) for v in range(H.n))


def iter_isomorphisms(G: LabeledGraph, H: LabeledGraph, fixed=()):
    """Yield every label-preserving isomorphism ``G -> H`` as a list.

    ``fixed`` is a sequence of ``(g_vertex, h_vertex)`` pairs that must hold.
    """
    if _quick_reject(G, H):
        return
    n = G.n
    adj = _union_adj(G, H)
    colors = _initial_colors(G.labels + H.labels)
    for a, b in fixed:
        colors = _individualize(colors, {a, b + n})
    yield from _iso_search(G, H, adj, colors)


def _iso_search(G, H, adj, colors):
    n = G.n
    colors = refine(adj, colors)
    if not _balanced(colors, n):
        return
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    open_cells = [cell for cell in cells.values() if len(cell) > 2]
    if not open_cells:
        mapping = [0] * n
        for cell in cells.values():
            mapping[cell[0]] = cell[1] - n
        if _is_iso(G, H, mapping):
            yield mapping
        return
    cell = min(open_cells, key=lambda c: (len(c), colors[c[0]]))
    a = cell[0]
    for b in cell:
        if b < n:
            continue
        yield from _iso_search(G, H, adj, _individualize(colors, {a, b}))


def _is_iso(G: LabeledGraph, H: LabeledGraph, mapping) -> bool:
    if len(set(mapping)) != G.n:
        return False
    for v in range(G.n):
        if G.labels[v] != H.labels[mapping[v]]:
            return False
    for (u, v), lab in G.edges.items():
        if H.edge_label(mapping[u], mapping[v]) != lab:
            return False
    return True


def find_isomorphism(G: LabeledGraph, H: LabeledGraph, fixed=()):
    return next(iter_isomorphisms(G, H, fixed), None)


def is_isomorphic(G: LabeledGraph, H: LabeledGraph, guard: int | None = None) -> bool:
    bound = GUARDS.iso_n if guard is None else guard
    for X in (G, H):
        if X.n > bound:
            raise GuardExceeded("iso_n", X.n, bound)
    return find_isomorphism(G, H) is not None


def automorphism_count(G: LabeledGraph, guard: int | None = None) -> int:
    """Order of the label-preserving automorphism group.

    Computed as a product of orbit lengths along a stabiliser chain, so only
    existence queries are issued, never a full enumeration.
    """
    _check_guard(G, guard, "automorphism_n", GUARDS.automorphism_n)
    total = 1
    fixed: list[tuple[int, int]] = []
    for v in range(G.n):
        orbit = 0
        for w in range(G.n):
            if G.labels[w] != G.labels[v] or G.degree(w) != G.degree(v):
                continue
            if find_isomorphism(G, G, fixed + [(v, w)]) is not None:
                orbit += 1
        total *= orbit
        fixed.append((v, v))
    return total


# -- atomic types ----------------------------------------------------------

def atomic_type(G: LabeledGraph, t) -> AtpCode:
    """Position-aware isomorphism type of the subgraph induced by tuple ``t``."""
    k = len(t)
    for v in t:
        if not 0 <= v < G.n:
            raise ValueError(f"tuple entry {v} out of range")
    labels = tuple(G.labels[v] for v in t)
    eq = tuple(t[i] == t[j] for i in range(k) for j in range(i + 1, k))
    edges = tuple(G.adj[t[i]].get(t[j]) for i in range(k) for j in range(i + 1, k))
    return (labels, eq, edges)
