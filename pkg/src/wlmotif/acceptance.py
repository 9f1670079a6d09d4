"""Reproducible checks for the library's headline claims.

Each ``criterion_*`` function runs one group of checks and returns a
:class:`CriterionResult`. ``run`` executes a selection by name; the CLI
``verify`` subcommand and ``tests/test_acceptance.py`` both use it.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from math import factorial

from .canon import is_isomorphic
from .catalog import (
    all_graphs,
    cfi_pairs,
    labelings,
    labeled_trees,
    patterns,
    random_graph,
    find_distinguishing_pattern,
)
from .cfi import (
    ccfi,
    ccfi_twist,
    counterexample_pair,
    gf2_total,
    verify_parity_iso,
)
from .graph import LabeledGraph, complete_graph, cycle_graph, path_graph
from .homcount import (
    build_eta_table,
    count_homs,
    count_homs_bruteforce,
    count_homs_td,
    eta_sum,
    evaluate_theta,
)
from .motif import clique_coefficient_criterion, ind_to_hom, sub_to_hom
from .treewidth import exact_treewidth
from .wl import ColorRegistry, refine_jointly, wl_equivalent, wl_equivalent_bounded
from .wldim import wl_dimension_graphlet, wl_dimension_ind, wl_dimension_parameter, wl_dimension_sub


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    elapsed: float
    limit: float
    failures: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def in_time(self) -> bool:
        return self.elapsed < self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.in_time

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.in_time else f" (over the {self.limit:.0f}s limit)"
        fails = f"; failures: {self.failures[:3]}" if self.failures else ""
        return f"[{status}] {self.number:2d} {self.name}: {self.elapsed:.2f}s{extra}{fails}"

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.ok,
            "checks_passed": self.passed,
            "elapsed_s": round(self.elapsed, 3),
            "limit_s": self.limit,
            "failures": [str(f) for f in self.failures],
            "detail": self.detail,
        }


def _timed(number: int, name: str, limit: float):
    def wrap(fn):
        def run(seed: int = 0) -> CriterionResult:
            start = time.perf_counter()
            failures, detail = fn(seed)
            elapsed = time.perf_counter() - start
            return CriterionResult(number, name, not failures, elapsed, limit, failures, detail)

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        run.number = number
        return run

    return wrap


@_timed(1, "path/cycle subgraph dimensions", 60)
def criterion_paths_cycles(seed):
    expected = {f"C{n}": 2 for n in range(3, 8)}
    expected["C8"] = 3
    for e in range(1, 9):
        expected[f"P[{e} edges]"] = 1 if e <= 2 else (2 if e <= 7 else 3)
    got = {}
    for n in range(3, 9):
        got[f"C{n}"] = wl_dimension_sub(cycle_graph(n)).dimension
    for e in range(1, 9):
        got[f"P[{e} edges]"] = wl_dimension_sub(path_graph(e + 1)).dimension
    failures = [f"{k}: expected {expected[k]}, got {got[k]}" for k in expected if got[k] != expected[k]]
    return failures, {"dimensions": got}


@_timed(2, "induced dimension formula", 120)
def criterion_induced(seed):
    failures = []
    count = 0
    for n in range(1, 6):
        for G in all_graphs(n):
            for sigma, delta in (("1", "1"), ("ab", "1"), ("1", "xy"), ("ab", "xy")):
                if n == 5 and len(sigma) * len(delta) > 1:
                    # full labeling catalogs at n=5 are large; one labeling per alphabet pair
                    Hs = [LabeledGraph(n, [sigma[v % len(sigma)] for v in range(n)],
                                       {e: delta[i % len(delta)] for i, e in enumerate(sorted(G.edges))},
                                       sigma, delta)]
                else:
                    Hs = labelings(G, sigma, delta)
                for H in Hs:
                    count += 1
                    if wl_dimension_ind(H).dimension != max(1, H.n - 1):
                        failures.append(("formula", H))
    cross = 0
    for n in range(1, 5):
        for G in all_graphs(n):
            for H in labelings(G, "ab", "1"):
                cross += 1
                par = wl_dimension_parameter(ind_to_hom(H)).dimension
                if par != max(1, H.n - 1):
                    failures.append(("support", H.to_dict(), par))
    return failures, {"formula_patterns": count, "cross_checked": cross}


@_timed(3, "graphlet dimension and clique coefficient", 60)
def criterion_graphlets(seed):
    failures, detail = [], {}
    for k in (2, 3, 4, 5):
        rep = wl_dimension_graphlet(k)
        c = clique_coefficient_criterion(k, "connected")
        d = clique_coefficient_criterion(k, "disconnected")
        detail[k] = {"dimension": rep.dimension, "connected": c, "disconnected": d}
        if rep.dimension != k - 1 or rep.witness is None or rep.witness.m != k * (k - 1) // 2:
            failures.append(f"k={k}: dimension {rep.dimension}")
        if c == 0 or c + d != 0:
            failures.append(f"k={k}: criterion sums {c}, {d}")
        if k >= 3 and abs(d) != factorial(k - 1):
            failures.append(f"k={k}: |disconnected sum| = {abs(d)}")
    return failures, detail


@_timed(4, "CFI counterexample pairs", 120)
def criterion_cfi_pairs(seed):
    failures, detail = [], {}
    for name, F in (("K3", complete_graph(3)), ("C5", cycle_graph(5)), ("K4", complete_graph(4))):
        pair = counterexample_pair(F)
        eq = wl_equivalent(pair.left, pair.right, pair.k)
        a, b = count_homs(F, pair.left), count_homs(F, pair.right)
        detail[name] = {"k": pair.k, "equivalent": eq, "homs_left": a, "homs_right": b}
        if pair.k != exact_treewidth(F) - 1 or not eq or a == b:
            failures.append(f"{name}: k={pair.k} equivalent={eq} homs {a} vs {b}")
    K3 = complete_graph(3)
    a, b = count_homs(K3, ccfi(K3).product), count_homs(K3, ccfi_twist(K3).product)
    detail["K3_cfi_parts"] = [a, b]
    if (a, b) != (12, 0):
        failures.append(f"K3 CFI parts: {a} vs {b}")
    return failures, detail


@_timed(5, "GF(2) certificate", 60)
def criterion_gf2(seed):
    failures, checked = [], 0
    sources = [G for n in range(1, 5) for G in all_graphs(n)]
    bases = [G for n in range(1, 5) for G in all_graphs(n, connected=True)]
    for G in bases:
        for U in ((), (0,)):
            P = ccfi(G, U).product
            for F in sources:
                checked += 1
                a, b = gf2_total(F, G, U), count_homs_bruteforce(F, P)
                if a != b:
                    failures.append((F.edge_list(), G.edge_list(), U, a, b))
    return failures, {"pairs": checked}


@_timed(6, "parity isomorphism", 30)
def criterion_parity(seed):
    failures, checked = [], 0
    for G in (complete_graph(3), cycle_graph(4), complete_graph(4)):
        subsets = [frozenset(s) for r in range(3) for s in itertools.combinations(range(G.n), r)]
        products = {U: ccfi(G, U).product for U in subsets}
        for U, V in itertools.combinations_with_replacement(subsets, 2):
            if (len(U) - len(V)) % 2:
                continue
            checked += 1
            if not is_isomorphic(products[U], products[V], guard=64):
                failures.append((G.n, sorted(U), sorted(V)))
    if verify_parity_iso(complete_graph(3), {0}, ()):
        failures.append("K3 odd/even pair reported isomorphic")
    return failures, {"same_parity_pairs": checked}


def _random_uniform(rng, n, p=0.45):
    return random_graph(rng, n, p)


@_timed(7, "eta/theta consistency", 120)
def criterion_eta_theta(seed):
    rng = random.Random(seed)
    failures = []
    for name, F in (("K2", complete_graph(2)), ("P3", path_graph(3)), ("P4", path_graph(4)), ("K3", complete_graph(3))):
        k = max(1, exact_treewidth(F))
        graphs = [_random_uniform(rng, rng.randint(3, 8)) for _ in range(20)]
        reg = ColorRegistry(k)
        cols, _ = refine_jointly(graphs, k, reg)
        try:
            eta = build_eta_table(F, None, graphs, k, reg, cols)
        except Exception as exc:  # the trap is the thing under test
            failures.append(f"{name}: {exc}")
            continue
        for G, col in zip(graphs, cols):
            if eta_sum(eta, col) != count_homs(F, G):
                failures.append(f"{name}: eta sum mismatch on {G.edge_list()}")
    gamma = sub_to_hom(path_graph(3))
    for _ in range(20):
        G = _random_uniform(rng, rng.randint(3, 8))
        direct = sum(d * (d - 1) // 2 for d in (G.degree(v) for v in range(G.n)))
        got = evaluate_theta(gamma, G, 1)
        if got != direct:
            failures.append(f"Sub(P3): theta {got} vs {direct}")
    return failures, {}


@_timed(8, "hom-count oracle equivalence", 60)
def criterion_homs(seed):
    rng = random.Random(seed)
    failures = []
    for _ in range(200):
        sigma = "ab"[: rng.randint(1, 2)]
        delta = "xy"[: rng.randint(1, 2)]
        F = random_graph(rng, rng.randint(1, 5), rng.uniform(0.2, 0.8), sigma, delta)
        G = random_graph(rng, rng.randint(1, 8), rng.uniform(0.2, 0.8), sigma, delta)
        a, b = count_homs_td(F, G), count_homs_bruteforce(F, G)
        if a != b:
            failures.append((F.to_dict(), G.to_dict(), a, b))
    return failures, {"pairs": 200}


def _hard_pair(rng, n):
    """Two random graphs with equal size, edge count and label histograms."""
    while True:
        G = random_graph(rng, n, 0.45, "ab", "xy")
        H = random_graph(rng, n, 0.45, "ab", "xy")
        if (
            G.m == H.m
            and Counter(G.labels) == Counter(H.labels)
            and Counter(G.edges.values()) == Counter(H.edges.values())
            and not wl_equivalent(G, H, 1)
        ):
            return G, H


@_timed(9, "tree-hom consistency of 1-WL", 60)
def criterion_dvorak(seed):
    rng = random.Random(seed)
    failures, detail = [], {"equivalent_pairs": 0, "separated_pairs": []}
    pairs = [(a, b) for G, a, b in cfi_pairs(max_tw=3)][:10]
    tree_cache: dict = {}
    for a, b in pairs:
        if not wl_equivalent(a, b, 1):
            failures.append("CFI pair not 1-WL equivalent")
            continue
        detail["equivalent_pairs"] += 1
        key = (tuple(a.sigma), tuple(a.delta))
        if key not in tree_cache:
            tree_cache[key] = list(labeled_trees(5, a.sigma, a.delta))
        for T in tree_cache[key]:
            if count_homs(T, a) != count_homs(T, b):
                failures.append(f"tree {T.edge_list()} separates a 1-WL equivalent pair")
    for _ in range(10):
        G, H = _hard_pair(rng, rng.randint(5, 8))
        res = find_distinguishing_pattern(G, H, max_tw=1, max_n=6)
        if res is None:
            failures.append("no distinguishing tree found")
        else:
            F, x, y = res
            detail["separated_pairs"].append({"pattern_n": F.n, "homs": [x, y]})
    return failures, detail


@_timed(10, "n-round sufficiency", 60)
def criterion_rounds(seed):
    failures, checked, applicable = [], 0, 0
    fam = list(cfi_pairs(max_tw=3))
    for k in (1, 2):
        for G, a, b in fam:
            if k == 2 and a.n > 12:
                continue
            cats = list(patterns(5 if k == 1 else 4, a.sigma, a.delta, max_tw=k)) if len(a.sigma) * len(a.delta) == 1 \
                else list(patterns(3, a.sigma, a.delta, max_tw=k))
            for F in cats:
                checked += 1
                if wl_equivalent_bounded(a, b, k, F.n):
                    applicable += 1
                    if count_homs(F, a) != count_homs(F, b):
                        failures.append((k, G.edge_list(), F.edge_list()))
    return failures, {"checked": checked, "bounded_equivalent": applicable}


CRITERIA = [
    criterion_paths_cycles,
    criterion_induced,
    criterion_graphlets,
    criterion_cfi_pairs,
    criterion_gf2,
    criterion_parity,
    criterion_eta_theta,
    criterion_homs,
    criterion_dvorak,
    criterion_rounds,
]

NAMES = {
    "paths-cycles": 1,
    "induced": 2,
    "graphlets": 3,
    "cfi-pairs": 4,
    "gf2": 5,
    "parity": 6,
    "eta-theta": 7,
    "homs": 8,
    "dvorak": 9,
    "rounds": 10,
}


def select(names=None):
    if not names:
        return list(CRITERIA)
    out = []
    for name in names:
        num = NAMES.get(name) if not str(name).isdigit() else int(name)
        if num is None or not 1 <= num <= len(CRITERIA):
            raise KeyError(f"unknown criterion {name!r}; choose from {sorted(NAMES)}")
        out.append(CRITERIA[num - 1])
    return out


def run(names=None, seed: int = 0) -> list[CriterionResult]:
    return [fn(seed) for fn in select(names)]
