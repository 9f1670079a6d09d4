"""Graph motif parameters in the homomorphism basis.

A :class:`MotifParameter` is a finite rational combination
``sum_i mu_i * homs(F_i, .)`` keyed by the canonical code of each ``F_i``.
Subgraph counts come from Mobius inversion over the partition lattice;
induced counts from a signed sum over labeled edge-supersets.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .canon import automorphism_count, canonical_form, canonical_graph
from .config import GUARDS
from .errors import GuardExceeded
from .graph import LabeledGraph, complete_graph, empty_graph
from .homcount import count_homs
from .spasm import check_spasm_guard, spasm_partitions
from .treewidth import exact_treewidth


class MotifParameter:
    """Finite support of canonical codes mapped to (representative, nonzero coefficient)."""

    def __init__(self, support: dict | None = None):
        self._support: dict[bytes, tuple[LabeledGraph, Fraction]] = {}
        for code, (F, mu) in (support or {}).items():
            self._add(code, F, Fraction(mu))
        self._normalize()

    @classmethod
    def from_terms(cls, terms) -> "MotifParameter":
        """Build from ``(graph, coefficient)`` pairs, merging isomorphic graphs."""
        p = cls()
        for F, mu in terms:
            p._add(canonical_form(F, guard=max(F.n, GUARDS.iso_n)), F, Fraction(mu))
        p._normalize()
        return p

    def _add(self, code, F, mu):
        if code in self._support:
            G, old = self._support[code]
            self._support[code] = (G, old + mu)
        else:
            self._support[code] = (F, mu)

    def _normalize(self):
        self._support = {
            c: (F, mu) for c, (F, mu) in sorted(self._support.items()) if mu != 0
        }

    # -- algebra -----------------------------------------------------------
    def __add__(self, other: "MotifParameter") -> "MotifParameter":
        p = MotifParameter(self._support)
        for code, (F, mu) in other._support.items():
            p._add(code, F, mu)
        p._normalize()
        return p

    def __mul__(self, scalar) -> "MotifParameter":
        s = Fraction(scalar)
        return MotifParameter({c: (F, mu * s) for c, (F, mu) in self._support.items()})

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + (-1) * other

    def __eq__(self, other):
        return isinstance(other, MotifParameter) and {
            c: mu for c, (_, mu) in self._support.items()
        } == {c: mu for c, (_, mu) in other._support.items()}

    def __len__(self):
        return len(self._support)

    def __repr__(self):
        terms = ", ".join(f"{F!r}: {mu}" for F, mu in self.members())
        return f"MotifParameter({{{terms}}})"

    # -- access ------------------------------------------------------------
    def keys(self):
        return list(self._support)

    def members(self):
        """``(representative, coefficient)`` pairs in canonical-code order."""
        return [(F, mu) for F, mu in self._support.values()]

    def items(self):
        return list(self._support.items())

    def coefficient(self, F: LabeledGraph) -> Fraction:
        code = canonical_form(F, guard=max(F.n, GUARDS.iso_n))
        return self._support.get(code, (None, Fraction(0)))[1]

    def without(self, graphs) -> "MotifParameter":
        drop = {canonical_form(F, guard=max(F.n, GUARDS.iso_n)) for F in graphs}
        return MotifParameter({c: v for c, v in self._support.items() if c not in drop})

    def to_list(self) -> list[dict]:
        return [
            {
                "graph": F.to_dict(),
                "coefficient": {"num": mu.numerator, "den": mu.denominator},
                "treewidth": exact_treewidth(F),
            }
            for F, mu in self.members()
        ]


def parameter_from_list(items) -> MotifParameter:
    from .graph import graph_from_dict

    terms = []
    for item in items:
        coef = item.get("coefficient", 1)
        if isinstance(coef, dict):
            mu = Fraction(coef["num"], coef.get("den", 1))
        else:
            mu = Fraction(str(coef))
        terms.append((graph_from_dict(item["graph"]), mu))
    return MotifParameter.from_terms(terms)


def evaluate_parameter(gamma: MotifParameter, G: LabeledGraph) -> Fraction:
    """``sum mu_i * homs(F_i, G)`` as an exact rational."""
    return sum((mu * count_homs(F, G) for F, mu in gamma.members()), Fraction(0))


def max_support_treewidth(gamma: MotifParameter) -> int:
    return max((exact_treewidth(F) for F, _ in gamma.members()), default=0)


# -- partition-lattice Mobius inversion --------------------------------------

def mobius_bottom(blocks) -> int:
    """``mu(0, pi)`` on the partition lattice: product of ``(-1)^(b-1) (b-1)!``."""
    out = 1
    for b in blocks:
        size = len(b)
        out *= (-1) ** (size - 1) * factorial(size - 1)
    return out


def _mobius_rgs(rgs) -> int:
    sizes: dict[int, int] = {}
    for b in rgs:
        sizes[b] = sizes.get(b, 0) + 1
    out = 1
    for s in sizes.values():
        out *= (-1) ** (s - 1) * factorial(s - 1)
    return out


def _code(G: LabeledGraph) -> bytes:
    return canonical_form(G, guard=max(G.n, GUARDS.iso_n))


@lru_cache(maxsize=4096)
def _inj_terms(code: bytes, H: LabeledGraph) -> tuple:
    acc: dict[bytes, list] = {}
    for rgs, Q in spasm_partitions(H, guard=max(H.n, GUARDS.spasm_n)):
        qc = _code(Q)
        entry = acc.setdefault(qc, [Q, Fraction(0)])
        entry[1] += _mobius_rgs(rgs)
    return tuple((c, F, mu) for c, (F, mu) in sorted(acc.items()))


def inj_to_hom(H: LabeledGraph, guard: int | None = None) -> MotifParameter:
    """Number of injective homomorphisms from ``H`` in the hom basis.

    ``inj(H, G) = sum_pi mu(0, pi) homs(H/pi, G)``; quotients with loops or
    label clashes admit no homomorphism into a loop-free graph and drop out.
    """
    check_spasm_guard(H, guard)
    H = canonical_graph(H, guard=max(H.n, GUARDS.iso_n))
    return MotifParameter({c: (F, mu) for c, F, mu in _inj_terms(_code(H), H)})


def sub_to_hom(H: LabeledGraph, guard: int | None = None) -> MotifParameter:
    """Number of subgraphs isomorphic to ``H``: injective homs over ``|Aut(H)|``."""
    check_spasm_guard(H, guard)
    aut = automorphism_count(H, guard=max(H.n, GUARDS.automorphism_n))
    return inj_to_hom(H, guard) * Fraction(1, aut)


def labeled_supersets(H: LabeledGraph):
    """Yield ``(added edge count, supergraph)`` over all labeled edge-supersets.

    Every missing pair is independently absent or present with one label of
    ``H.delta``.
    """
    delta = list(H.delta) or ["1"]
    missing = [(u, v) for u in range(H.n) for v in range(u + 1, H.n) if not H.has_edge(u, v)]
    options = [None] + delta
    for choice in itertools.product(options, repeat=len(missing)):
        extra = {p: lab for p, lab in zip(missing, choice) if lab is not None}
        yield len(extra), (H.with_edges(extra) if extra else H)


def ind_to_hom(H: LabeledGraph, guard: int | None = None) -> MotifParameter:
    """Number of induced subgraphs isomorphic to ``H`` in the hom basis.

    ``indemb(H) = sum_A (-1)^|A| inj(H + A)`` over labeled edge-supersets,
    divided by ``|Aut(H)|``.
    """
    bound = GUARDS.ind_n if guard is None else guard
    if H.n > bound:
        raise GuardExceeded("ind_n", H.n, bound)
    missing = H.n * (H.n - 1) // 2 - H.m
    count = (len(H.delta or ["1"]) + 1) ** missing
    if count > GUARDS.ind_supersets:
        raise GuardExceeded("ind_supersets", count, GUARDS.ind_supersets, "labeled edge-supersets")
    total = MotifParameter()
    grouped: dict[bytes, list] = {}
    for added, Hs in labeled_supersets(H):
        code = _code(Hs)
        entry = grouped.setdefault(code, [Hs, 0])
        entry[1] += (-1) ** added
    for code, (Hs, sign) in grouped.items():
        if sign:
            total = total + inj_to_hom(Hs, guard=max(Hs.n, GUARDS.spasm_n)) * sign
    aut = automorphism_count(H, guard=max(H.n, GUARDS.automorphism_n))
    return total * Fraction(1, aut)


def _check_k(k: int) -> None:
    if not 2 <= k <= 5:
        raise ValueError(f"k must lie in 2..5, got {k}")


def connected_graphs(k: int):
    """Isomorphism classes of connected simple graphs on ``k`` vertices (uniform labels)."""
    pairs = list(itertools.combinations(range(k), 2))
    seen: dict[bytes, LabeledGraph] = {}
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        G = LabeledGraph(k, None, edges)
        if not G.is_connected():
            continue
        code = _code(G)
        seen.setdefault(code, G)
    return [seen[c] for c in sorted(seen)]


def graphlet_parameter(k: int) -> MotifParameter:
    """Number of connected induced ``k``-vertex subgraphs, single-label alphabets."""
    _check_k(k)
    total = MotifParameter()
    for H in connected_graphs(k):
        total = total + ind_to_hom(H)
    return total


def independent_set_parameter(k: int) -> MotifParameter:
    """Number of independent vertex sets of size exactly ``k``."""
    _check_k(k)
    return ind_to_hom(empty_graph(k))


def clique_coefficient_criterion(k: int, predicate) -> int:
    """Alternating sum ``sum (-1)^|A|`` over edge sets ``A`` of ``K_k`` with ``predicate``.

    ``predicate`` receives the :class:`LabeledGraph` on ``k`` vertices with
    edge set ``A``; the strings ``"connected"`` and ``"disconnected"`` are
    accepted as shortcuts.
    """
    if not 1 <= k <= 5:
        raise ValueError(f"k must lie in 1..5, got {k}")
    if predicate == "connected":
        predicate = LabeledGraph.is_connected
    elif predicate == "disconnected":
        predicate = lambda G: not G.is_connected()  # noqa: E731
    pairs = list(itertools.combinations(range(k), 2))
    total = 0
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if predicate(LabeledGraph(k, None, edges)):
            total += (-1) ** len(edges)
    return total


def clique_coefficient(gamma: MotifParameter, k: int) -> Fraction:
    return gamma.coefficient(complete_graph(k))
