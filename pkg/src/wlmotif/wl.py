"""Folklore k-WL colour refinement with colours shared across graphs.

A :class:`ColorRegistry` interns colour structures into integer ids. Graphs
refined with the same registry in lockstep get directly comparable colours,
which is what the per-colour count tables in :mod:`wlmotif.homcount` rely on.
"""

from __future__ import annotations

import hashlib
import itertools
from collections import Counter
from dataclasses import dataclass

from .canon import atomic_type
from .config import GUARDS
from .errors import DimensionMismatch, GuardExceeded
from .graph import LabeledGraph


class ColorRegistry:
    """Injective table from colour structures to small integer ids."""

    def __init__(self, k: int | None = None):
        self.k = k
        self._table: dict = {}
        self._structure: list = []

    def intern(self, key) -> int:
        cid = self._table.get(key)
        if cid is None:
            cid = len(self._structure)
            self._table[key] = cid
            self._structure.append(key)
        return cid

    def structure(self, cid: int):
        return self._structure[cid]

    def fingerprint(self, cid: int) -> str:
        """Hash of the fully unfolded colour structure; comparable across sessions."""
        cache = self.__dict__.setdefault("_fp", {})
        if cid in cache:
            return cache[cid]
        key = self._structure[cid]
        if key[0] == "atp":
            body = repr(key)
        else:
            prev, payload = key
            if self.k == 1:
                items = [(lab, self.fingerprint(c)) for lab, c in payload]
            else:
                items = [tuple(self.fingerprint(c) for c in row) for row in payload]
            body = repr((self.fingerprint(prev), sorted(items)))
        fp = hashlib.sha256(body.encode()).hexdigest()[:16]
        cache[cid] = fp
        return fp

    def bind(self, k: int) -> None:
        if self.k is None:
            self.k = k
        elif self.k != k:
            raise DimensionMismatch(f"registry holds {self.k}-WL colours, asked for k={k}")

    def __len__(self):
        return len(self._structure)

    def __bool__(self):
        return True  # an empty registry is still a registry


@dataclass(frozen=True)
class Coloring:
    """Colour ids of all ``n**k`` tuples, in lexicographic tuple order."""

    k: int
    n: int
    round: int
    colors: tuple

    def index(self, t) -> int:
        i = 0
        for v in t:
            i = i * self.n + v
        return i

    def __getitem__(self, t) -> int:
        return self.colors[self.index(t)]

    def tuples(self):
        return itertools.product(range(self.n), repeat=self.k)

    def assignment(self) -> dict:
        return dict(zip(self.tuples(), self.colors))

    def histogram(self) -> Counter:
        return Counter(self.colors)

    def classes(self) -> int:
        return len(set(self.colors))


def _check_guard(G: LabeledGraph, k: int, guard: int | None) -> None:
    bound = GUARDS.wl_tuples if guard is None else guard
    if G.n ** k > bound:
        raise GuardExceeded("wl_tuples", G.n ** k, bound, f"n={G.n}, k={k}")


def initial_coloring(G: LabeledGraph, k: int, reg: ColorRegistry) -> Coloring:
    """Round 0: the atomic type of each tuple."""
    if k < 1:
        raise ValueError("k must be >= 1")
    reg.bind(k)
    cols = tuple(
        reg.intern(("atp", atomic_type(G, t)))
        for t in itertools.product(range(G.n), repeat=k)
    )
    return Coloring(k, G.n, 0, cols)


def wl_round(G: LabeledGraph, prev: Coloring, reg: ColorRegistry) -> Coloring:
    """One refinement step.

    For ``k = 1`` a vertex gets its old colour plus the multiset of
    ``(edge label, neighbour colour)``. For ``k > 1`` a tuple gets its old
    colour plus, over every vertex ``w``, the tuple of old colours of the
    ``k`` tuples obtained by writing ``w`` into each position.
    """
    reg.bind(prev.k)
    if prev.n != G.n:
        raise DimensionMismatch("colouring does not belong to this graph")
    k, n, c = prev.k, G.n, prev.colors
    out = []
    if k == 1:
        for v in range(n):
            payload = tuple(sorted((lab, c[w]) for w, lab in G.adj[v].items()))
            out.append(reg.intern((c[v], payload)))
    else:
        strides = [n ** (k - 1 - j) for j in range(k)]
        for idx, t in enumerate(itertools.product(range(n), repeat=k)):
            bases = [idx - t[j] * strides[j] for j in range(k)]
            payload = sorted(
                tuple(c[bases[j] + w * strides[j]] for j in range(k)) for w in range(n)
            )
            out.append(reg.intern((c[idx], tuple(payload))))
    return Coloring(k, n, prev.round + 1, tuple(out))


def _num_classes(colorings) -> int:
    return len(set().union(*(set(c.colors) for c in colorings)))


def refine_jointly(graphs, k: int, reg: ColorRegistry, rounds: int | None = None, guard: int | None = None):
    """Refine several graphs in lockstep until the union partition is stable.

    With ``rounds`` given, stop after exactly that many rounds instead.
    Returns ``(colorings, t)`` where ``t`` is the round of the colourings.
    Refinement only ever splits classes, so stability is detected by an
    unchanged class count.
    """
    for G in graphs:
        _check_guard(G, k, guard)
    cols = [initial_coloring(G, k, reg) for G in graphs]
    if rounds is not None:
        for _ in range(rounds):
            cols = [wl_round(G, c, reg) for G, c in zip(graphs, cols)]
        return cols, rounds
    count = _num_classes(cols)
    while True:
        nxt = [wl_round(G, c, reg) for G, c in zip(graphs, cols)]
        ncount = _num_classes(nxt)
        if ncount == count:
            return cols, cols[0].round if cols else 0
        cols, count = nxt, ncount


def stable_coloring(G: LabeledGraph, k: int, reg: ColorRegistry, guard: int | None = None):
    """Return ``(coloring, t)`` where round ``t`` induces the same partition as ``t + 1``."""
    (col,), t = refine_jointly([G], k, reg, guard=guard)
    return col, t


def wl_equivalent(G: LabeledGraph, H: LabeledGraph, k: int, guard: int | None = None) -> bool:
    """Whether folklore k-WL fails to distinguish ``G`` and ``H``."""
    if G.n != H.n:
        return False
    reg = ColorRegistry(k)
    (cg, ch), _ = refine_jointly([G, H], k, reg, guard=guard)
    return cg.histogram() == ch.histogram()


def wl_equivalent_bounded(G: LabeledGraph, H: LabeledGraph, k: int, rounds: int, guard: int | None = None) -> bool:
    """Colour multisets compared after exactly ``rounds`` synchronised rounds."""
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    if G.n != H.n:
        return False
    reg = ColorRegistry(k)
    (cg, ch), _ = refine_jointly([G, H], k, reg, rounds=rounds, guard=guard)
    return cg.histogram() == ch.histogram()


def partition_of(col: Coloring) -> frozenset:
    """The induced partition of tuple indices, independent of id values."""
    groups: dict[int, list[int]] = {}
    for i, c in enumerate(col.colors):
        groups.setdefault(c, []).append(i)
    return frozenset(frozenset(g) for g in groups.values())
