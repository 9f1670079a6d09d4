"""Small-graph catalogs, seeded random graphs and distinguishing-pattern search."""

from __future__ import annotations

import itertools
import random

from .canon import canonical_form
from .cfi import ccfi, ccfi_twist
from .config import GUARDS
from .graph import LabeledGraph, complete_graph, cycle_graph
from .homcount import count_homs
from .treewidth import exact_treewidth


def _code(G: LabeledGraph) -> bytes:
    return canonical_form(G, guard=max(G.n, GUARDS.iso_n))


def all_graphs(n: int, connected: bool = False) -> list[LabeledGraph]:
    """Unlabeled graphs on ``n`` vertices up to isomorphism, in canonical-code order."""
    pairs = list(itertools.combinations(range(n), 2))
    seen: dict[bytes, LabeledGraph] = {}
    for mask in range(1 << len(pairs)):
        G = LabeledGraph(n, None, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if connected and not G.is_connected():
            continue
        seen.setdefault(_code(G), G)
    return [seen[c] for c in sorted(seen)]


def labelings(G: LabeledGraph, sigma, delta) -> list[LabeledGraph]:
    """Every vertex and edge labeling of ``G`` over the alphabets, up to isomorphism."""
    sigma, delta = sorted(sigma), sorted(delta)
    edges = sorted(G.edges)
    seen: dict[bytes, LabeledGraph] = {}
    for vl in itertools.product(sigma, repeat=G.n):
        for el in itertools.product(delta, repeat=len(edges)):
            H = LabeledGraph(G.n, list(vl), dict(zip(edges, el)), sigma, delta)
            seen.setdefault(_code(H), H)
    return [seen[c] for c in sorted(seen)]


def trees(n: int) -> list[LabeledGraph]:
    """Unlabeled trees on ``n`` vertices up to isomorphism (via Pruefer codes)."""
    if n == 1:
        return [LabeledGraph(1)]
    if n == 2:
        return [LabeledGraph(2, None, [(0, 1)])]
    seen: dict[bytes, LabeledGraph] = {}
    for code in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in code:
            degree[x] += 1
        edges = []
        for x in code:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = (v for v in range(n) if degree[v] == 1)
        edges.append((u, w))
        T = LabeledGraph(n, None, edges)
        seen.setdefault(_code(T), T)
    return [seen[c] for c in sorted(seen)]


def random_graph(rng: random.Random, n: int, p: float = 0.4, sigma=("1",), delta=("1",)) -> LabeledGraph:
    sigma, delta = sorted(sigma), sorted(delta)
    labels = [rng.choice(sigma) for _ in range(n)]
    edges = {
        (u, v): rng.choice(delta)
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < p
    }
    return LabeledGraph(n, labels, edges, sigma, delta)


def relabel_random(rng: random.Random, G: LabeledGraph) -> LabeledGraph:
    perm = list(range(G.n))
    rng.shuffle(perm)
    return G.relabel(perm)


def cfi_bases() -> list[LabeledGraph]:
    """Connected bases of treewidth >= 2 with small CFI products, some of them labeled."""
    k4_minus = LabeledGraph(4, None, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    paw = LabeledGraph(4, None, [(0, 1), (0, 2), (1, 2), (2, 3)])
    k23 = LabeledGraph(5, None, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    bull = LabeledGraph(5, None, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])
    lab_k3 = LabeledGraph(3, ["a", "a", "b"], {(0, 1): "x", (0, 2): "y", (1, 2): "y"})
    lab_c4 = LabeledGraph(4, ["a", "b", "a", "b"], {(0, 1): "x", (1, 2): "x", (2, 3): "y", (0, 3): "x"})
    return [
        complete_graph(3),
        cycle_graph(4),
        cycle_graph(5),
        cycle_graph(6),
        paw,
        k4_minus,
        k23,
        bull,
        lab_k3,
        lab_c4,
        complete_graph(4),
    ]


def cfi_pairs(max_tw: int | None = None):
    """``(base, untwisted product, twisted product)`` for each catalog base."""
    for G in cfi_bases():
        if max_tw is not None and exact_treewidth(G) > max_tw:
            continue
        yield G, ccfi(G).product, ccfi_twist(G).product


def patterns(max_n: int, sigma=("1",), delta=("1",), max_tw: int | None = None, connected=True):
    """Labeled patterns with up to ``max_n`` vertices, smallest first."""
    for n in range(1, max_n + 1):
        for G in all_graphs(n, connected=connected):
            if max_tw is not None and exact_treewidth(G) > max_tw:
                continue
            yield from labelings(G, sigma, delta)


def labeled_trees(max_n: int, sigma=("1",), delta=("1",)):
    for n in range(1, max_n + 1):
        for T in trees(n):
            yield from labelings(T, sigma, delta)


def find_distinguishing_pattern(G: LabeledGraph, H: LabeledGraph, max_tw: int = 1, max_n: int = 6):
    """Smallest catalog pattern of treewidth <= ``max_tw`` with different hom counts, or ``None``.

    Treewidth 1 searches labeled trees; otherwise connected graphs are used.
    """
    sigma = sorted(set(G.sigma) | set(H.sigma))
    delta = sorted(set(G.delta) | set(H.delta))
    source = (
        labeled_trees(max_n, sigma, delta)
        if max_tw <= 1
        else patterns(max_n, sigma, delta, max_tw=max_tw)
    )
    for F in source:
        a, b = count_homs(F, G), count_homs(F, H)
        if a != b:
            return F, a, b
    return None
