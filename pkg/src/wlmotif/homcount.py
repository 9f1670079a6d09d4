"""Homomorphism counts: brute force, tree-decomposition DP, pinned partial
counts and the per-colour tables that turn k-WL colours into counts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .config import GUARDS
from .errors import (
    AnchorError,
    DimensionMismatch,
    GuardExceeded,
    NotAHomomorphism,
    TreewidthTooLarge,
    WellDefinednessViolation,
)
from .graph import LabeledGraph
from .treewidth import NiceTreeDecomposition, exact_treewidth, make_nice, tree_decomposition
from .wl import ColorRegistry, refine_jointly

# -- brute force -----------------------------------------------------------

def _bf_guard(F: LabeledGraph, G: LabeledGraph, guard) -> None:
    bound = GUARDS.hom_product if guard is None else guard
    size = G.n ** F.n
    if F.n > GUARDS.hom_pattern_n and size > bound:
        raise GuardExceeded("hom_pattern_n", F.n, GUARDS.hom_pattern_n, f"{G.n}^{F.n} maps")
    if G.n > GUARDS.hom_target_n and size > bound:
        raise GuardExceeded("hom_target_n", G.n, GUARDS.hom_target_n)


def _search_order(F: LabeledGraph) -> list[int]:
    """Vertex order where each vertex (after the first of its component) has an earlier neighbour."""
    order, seen = [], set()
    for s in sorted(range(F.n), key=lambda v: -F.degree(v)):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(F.adj[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


def iter_homomorphisms(F: LabeledGraph, G: LabeledGraph, fixed: dict | None = None):
    """Yield every homomorphism ``F -> G`` as a list ``phi[a]``.

    Plain backtracking over all maps, rejecting a partial map as soon as an
    edge between assigned vertices is not preserved.
    """
    order = _search_order(F)
    back = []
    placed = set()
    for a in order:
        back.append([(b, lab) for b, lab in F.adj[a].items() if b in placed])
        placed.add(a)
    phi = [-1] * F.n
    fixed = fixed or {}
    cand = [
        [fixed[a]] if a in fixed else [v for v in range(G.n) if G.labels[v] == F.labels[a]]
        for a in range(F.n)
    ]
    for a, v in fixed.items():
        if G.labels[v] != F.labels[a]:
            return

    def rec(i):
        if i == len(order):
            yield list(phi)
            return
        a = order[i]
        for v in cand[a]:
            gadj = G.adj[v]
            if all(gadj.get(phi[b]) == lab for b, lab in back[i]):
                phi[a] = v
                yield from rec(i + 1)
        phi[a] = -1

    yield from rec(0)


def count_homs_bruteforce(F: LabeledGraph, G: LabeledGraph, guard: int | None = None) -> int:
    """Exact number of label- and edge-preserving maps ``F -> G`` by enumeration."""
    _bf_guard(F, G, guard)
    return sum(1 for _ in iter_homomorphisms(F, G))


def is_homomorphism(phi, F: LabeledGraph, G: LabeledGraph) -> bool:
    if len(phi) != F.n:
        return False
    if any(not 0 <= phi[a] < G.n or G.labels[phi[a]] != F.labels[a] for a in range(F.n)):
        return False
    return all(G.edge_label(phi[u], phi[v]) == lab for (u, v), lab in F.edges.items())


def require_homomorphism(phi, F, G) -> None:
    if not is_homomorphism(phi, F, G):
        raise NotAHomomorphism(f"{phi!r} is not a homomorphism")


# -- dynamic programming over a nice decomposition ---------------------------

def _dp_tables(F: LabeledGraph, G: LabeledGraph, nice: NiceTreeDecomposition) -> dict:
    """Return the root table: sorted-root-bag assignment tuple -> count.

    Tables map tuples of target vertices (aligned with the sorted bag) to the
    number of homomorphisms of the part of ``F`` below the node that extend
    that bag assignment.
    """
    by_label: dict[str, list[int]] = {}
    for v in range(G.n):
        by_label.setdefault(G.labels[v], []).append(v)
    tables: dict[int, dict] = {}
    for node in nice.postorder():
        bag = sorted(nice.bags[node])
        kids = nice.children[node]
        if not kids:
            table = {}
            if len(bag) == 1:
                for v in by_label.get(F.labels[bag[0]], []):
                    table[(v,)] = 1
            elif not bag:
                table[()] = 1
            else:
                table = _brute_bag(F, G, bag, by_label)
        elif len(kids) == 2:
            t1, t2 = tables.pop(kids[0]), tables.pop(kids[1])
            if len(t1) > len(t2):
                t1, t2 = t2, t1
            table = {key: c * t2[key] for key, c in t1.items() if key in t2}
        else:
            child = kids[0]
            ctable = tables.pop(child)
            cbag = sorted(nice.bags[child])
            if len(cbag) > len(bag):
                # child holds one extra vertex: sum it out
                x = (set(cbag) - set(bag)).pop()
                pos = cbag.index(x)
                table = {}
                for key, c in ctable.items():
                    k2 = key[:pos] + key[pos + 1:]
                    table[k2] = table.get(k2, 0) + c
            else:
                # node holds one extra vertex: extend every child assignment
                x = (set(bag) - set(cbag)).pop()
                pos = bag.index(x)
                checks = [(cbag.index(b), lab) for b, lab in F.adj[x].items() if b in nice.bags[child]]
                cands = by_label.get(F.labels[x], [])
                table = {}
                for key, c in ctable.items():
                    for v in cands:
                        gadj = G.adj[v]
                        if all(gadj.get(key[i]) == lab for i, lab in checks):
                            table[key[:pos] + (v,) + key[pos:]] = c
        tables[node] = table
    return tables[nice.root]


def _brute_bag(F, G, bag, by_label):
    table = {}
    sub = F.induced(bag)
    for phi in iter_homomorphisms(sub, G):
        table[tuple(phi)] = 1
    return table


def count_homs_td(F: LabeledGraph, G: LabeledGraph, nice: NiceTreeDecomposition | None = None) -> int:
    """Hom count via dynamic programming over a nice tree decomposition of ``F``."""
    if F.n == 0:
        return 1
    if nice is None:
        nice = make_nice(tree_decomposition(F))
    return sum(_dp_tables(F, G, nice).values())


def count_homs(F: LabeledGraph, G: LabeledGraph) -> int:
    """Hom count using whichever method is cheaper for the inputs."""
    if F.n <= 4 or G.n ** F.n <= 10**5:
        return count_homs_bruteforce(F, G, guard=max(GUARDS.hom_product, G.n ** F.n))
    return count_homs_td(F, G)


# -- pinned partial counts -------------------------------------------------

def anchor_decomposition(F: LabeledGraph, anchor, k: int | None = None) -> NiceTreeDecomposition:
    """Nice decomposition of ``F`` of width <= k rooted at the anchor's vertex set.

    The anchor fits iff ``F`` plus a clique on the anchor vertices still has
    treewidth at most ``k``; any decomposition of that graph is one of ``F``
    with a bag containing the anchor.
    """
    anchor = tuple(anchor)
    if any(not 0 <= a < F.n for a in anchor):
        raise AnchorError("anchor entry out of range")
    k = len(anchor) if k is None else k
    verts = sorted(set(anchor))
    extra = {(a, b): F.delta[0] if F.delta else "1" for a, b in itertools.combinations(verts, 2)
             if not F.has_edge(a, b)}
    Fc = F.with_edges(extra) if extra else F
    td = tree_decomposition(Fc)
    if td.width > k:
        raise AnchorError(
            f"anchor {anchor} does not fit a bag of a width-{k} decomposition (needs {td.width})"
        )
    return make_nice(td, set(anchor))


def partial_count_table(F: LabeledGraph, anchor, G: LabeledGraph, k: int | None = None) -> dict:
    """Map ``pin -> |Hom(F,G)[anchor -> pin]|`` over all pins with a nonzero count.

    One DP rooted at the anchor bag yields every pin at once. An anchor may
    repeat a vertex (used for patterns smaller than ``k``); then only pins
    repeating the same positions can be nonzero.
    """
    anchor = tuple(anchor)
    nice = anchor_decomposition(F, anchor, k)
    root = _dp_tables(F, G, nice)
    bag = sorted(nice.bags[nice.root])
    perm = [bag.index(a) for a in anchor]
    return {tuple(key[p] for p in perm): c for key, c in root.items()}


def count_homs_extending(F: LabeledGraph, anchor, G: LabeledGraph, pin, k: int | None = None) -> int:
    """Number of homomorphisms ``F -> G`` sending ``anchor[j]`` to ``pin[j]``."""
    anchor, pin = tuple(anchor), tuple(pin)
    if len(anchor) != len(pin):
        raise DimensionMismatch("anchor and pin lengths differ")
    if any(not 0 <= v < G.n for v in pin):
        raise DimensionMismatch("pin entry out of range")
    return partial_count_table(F, anchor, G, k).get(pin, 0)


def count_homs_extending_bruteforce(F: LabeledGraph, anchor, G: LabeledGraph, pin) -> int:
    """Oracle: enumerate homomorphisms with the anchor pinned."""
    fixed = {}
    for a, v in zip(anchor, pin):
        if fixed.get(a, v) != v:
            return 0
        fixed[a] = v
    return sum(1 for _ in iter_homomorphisms(F, G, fixed))


def default_anchor(F: LabeledGraph, k: int) -> tuple:
    """First ``k``-subset (ascending indices) of ``F`` that fits a width-``k`` bag.

    Patterns with fewer than ``k`` vertices get all their vertices, padded by
    repeating the last one.
    """
    if F.n == 0:
        raise AnchorError("the empty pattern has no anchor")
    if F.n < k:
        return tuple(range(F.n)) + (F.n - 1,) * (k - F.n)
    for cand in itertools.combinations(range(F.n), k):
        try:
            anchor_decomposition(F, cand, k)
        except AnchorError:
            continue
        return cand
    raise AnchorError(f"no {k}-subset of the pattern fits a width-{k} bag")


# -- per-colour tables -----------------------------------------------------

@dataclass
class EtaTable:
    pattern: LabeledGraph
    anchor: tuple
    k: int
    table: dict = field(default_factory=dict)
    registry: ColorRegistry | None = None

    def __call__(self, color: int) -> int:
        return self.table.get(color, 0)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "anchor": list(self.anchor),
            "table": {str(c): v for c, v in sorted(self.table.items())},
        }


@dataclass
class ThetaTable:
    parameter: object
    k: int
    table: dict = field(default_factory=dict)

    def __call__(self, color: int) -> Fraction:
        return self.table.get(color, Fraction(0))


def _check_tw(F: LabeledGraph, k: int) -> None:
    tw = exact_treewidth(F)
    if tw > k:
        raise TreewidthTooLarge(
            f"pattern has treewidth {tw} > k={k}; k-WL cannot determine its hom counts"
        )


def build_eta_table(
    F: LabeledGraph,
    anchor,
    graphs,
    k: int,
    reg: ColorRegistry,
    colorings=None,
) -> EtaTable:
    """Tabulate the pinned hom count per stable colour over all tuples of ``graphs``.

    The graphs are refined jointly in ``reg`` unless ``colorings`` (already
    jointly stable in ``reg``) are supplied. Raises
    :class:`WellDefinednessViolation` if one colour sees two different counts.
    """
    _check_tw(F, k)
    anchor = tuple(anchor) if anchor is not None else default_anchor(F, k)
    if len(anchor) != k:
        raise DimensionMismatch(f"anchor has length {len(anchor)}, expected {k}")
    if colorings is None:
        colorings, _ = refine_jointly(list(graphs), k, reg)
    eta = EtaTable(F, anchor, k, {}, reg)
    for G, col in zip(graphs, colorings):
        counts = partial_count_table(F, anchor, G, k)
        for t, c in zip(col.tuples(), col.colors):
            val = counts.get(t, 0)
            prev = eta.table.setdefault(c, val)
            if prev != val:
                raise WellDefinednessViolation(
                    f"colour {c} maps to partial counts {prev} and {val} (tuple {t})"
                )
    return eta


def eta_sum(eta: EtaTable, col) -> int:
    return sum(eta(c) for c in col.colors)


def build_theta_table(gamma, graphs, k: int, reg: ColorRegistry, colorings=None) -> ThetaTable:
    """Combine per-member eta tables with the parameter's coefficients."""
    from .motif import MotifParameter  # cycle: motif imports homcount

    assert isinstance(gamma, MotifParameter)
    for F, _ in gamma.members():
        if exact_treewidth(F) > k:
            raise TreewidthTooLarge(
                f"support member of treewidth {exact_treewidth(F)} exceeds k={k}; "
                f"the parameter is not determined by {k}-WL"
            )
    graphs = list(graphs)
    if colorings is None:
        colorings, _ = refine_jointly(graphs, k, reg)
    theta = ThetaTable(gamma, k, {})
    for F, mu in gamma.members():
        eta = build_eta_table(F, default_anchor(F, k), graphs, k, reg, colorings)
        for c, val in eta.table.items():
            theta.table[c] = theta.table.get(c, Fraction(0)) + mu * val
    for col in colorings:
        for c in col.colors:
            theta.table.setdefault(c, Fraction(0))
    return theta


def evaluate_theta(gamma, G: LabeledGraph, k: int, reg: ColorRegistry | None = None) -> Fraction:
    """Sum of the per-colour value over all ``k``-tuples of ``G``."""
    if reg is None:
        reg = ColorRegistry(k)
    colorings, _ = refine_jointly([G], k, reg)
    theta = build_theta_table(gamma, [G], k, reg, colorings)
    return sum((theta(c) for c in colorings[0].colors), Fraction(0))
