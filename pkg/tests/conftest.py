"""Shared helpers and independent oracles for the test suite.

The oracles here deliberately avoid the library's own algorithms: isomorphism
goes through networkx, hom counts through plain ``itertools.product``,
treewidth through minimum elimination width over all vertex orders.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from wlmotif.graph import LabeledGraph


def to_nx(G: LabeledGraph) -> nx.Graph:
    g = nx.Graph()
    for v in range(G.n):
        g.add_node(v, label=G.labels[v])
    for (u, v), lab in G.edges.items():
        g.add_edge(u, v, label=lab)
    return g


def nx_isomorphic(G: LabeledGraph, H: LabeledGraph) -> bool:
    return GraphMatcher(
        to_nx(G),
        to_nx(H),
        node_match=lambda a, b: a["label"] == b["label"],
        edge_match=lambda a, b: a["label"] == b["label"],
    ).is_isomorphic()


def homs_product(F: LabeledGraph, G: LabeledGraph, fixed=None) -> int:
    """Count maps ``V(F) -> V(G)`` checking every condition, no pruning."""
    fixed = fixed or {}
    total = 0
    for phi in itertools.product(range(G.n), repeat=F.n):
        if any(phi[a] != v for a, v in fixed.items()):
            continue
        if any(F.labels[a] != G.labels[phi[a]] for a in range(F.n)):
            continue
        if all(G.edge_label(phi[u], phi[v]) == lab for (u, v), lab in F.edges.items()):
            total += 1
    return total


def injective_homs(F: LabeledGraph, G: LabeledGraph) -> int:
    total = 0
    for phi in itertools.permutations(range(G.n), F.n):
        if any(F.labels[a] != G.labels[phi[a]] for a in range(F.n)):
            continue
        if all(G.edge_label(phi[u], phi[v]) == lab for (u, v), lab in F.edges.items()):
            total += 1
    return total


def automorphisms(F: LabeledGraph) -> int:
    return injective_homs_bijective(F, F)


def injective_homs_bijective(F: LabeledGraph, G: LabeledGraph) -> int:
    """Label-preserving bijections with the edge biconditional."""
    if F.n != G.n:
        return 0
    total = 0
    for phi in itertools.permutations(range(G.n)):
        if any(F.labels[a] != G.labels[phi[a]] for a in range(F.n)):
            continue
        if F.m != G.m:
            continue
        if all(G.edge_label(phi[u], phi[v]) == lab for (u, v), lab in F.edges.items()):
            total += 1
    return total


def subgraph_count(H: LabeledGraph, G: LabeledGraph) -> int:
    """Subgraphs of ``G`` isomorphic to ``H``: edge subsets plus isolated-vertex choices."""
    from fractions import Fraction

    return Fraction(injective_homs(H, G), automorphisms(H))


def induced_count(H: LabeledGraph, G: LabeledGraph) -> int:
    return sum(
        1 for S in itertools.combinations(range(G.n), H.n) if nx_isomorphic(G.induced(S), H)
    )


def treewidth_oracle(G: LabeledGraph) -> int:
    """Minimum over all elimination orders of the largest eliminated neighbourhood."""
    if G.m == 0:
        return 0
    best = G.n
    for order in itertools.permutations(range(G.n)):
        adj = [set(G.adj[v]) for v in range(G.n)]
        width = 0
        for v in order:
            nb = adj[v]
            width = max(width, len(nb))
            if width >= best:
                break
            for a in nb:
                adj[a] |= nb - {a}
                adj[a].discard(v)
            adj[v] = set()
        best = min(best, width)
    return best


def rand_graph(rng: random.Random, n: int, p: float = 0.4, sigma="1", delta="1") -> LabeledGraph:
    labels = [rng.choice(sigma) for _ in range(n)]
    edges = {
        (u, v): rng.choice(delta) for u, v in itertools.combinations(range(n), 2) if rng.random() < p
    }
    return LabeledGraph(n, labels, edges, list(sigma), list(delta))


@pytest.fixture
def rng():
    return random.Random(20240611)
