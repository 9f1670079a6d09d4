"""Set partitions, labeled quotients and spasm enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_form
from .config import GUARDS
from .errors import (
    GuardExceeded,
    LoopCreated,
    ParallelEdgeLabelClash,
    QuotientRejected,
    VertexLabelClash,
)
from .graph import LabeledGraph


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell number via the Bell triangle (OEIS A000110)."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def restricted_growth_strings(n: int):
    """Yield all restricted growth strings of length ``n`` in lexicographic order.

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``; each string encodes one set
    partition of ``range(n)``.
    """
    if n == 0:
        yield ()
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])

    def rec(i):
        if i == n:
            yield tuple(a)
            return
        for x in range(m[i - 1] + 2):
            a[i] = x
            m[i] = max(m[i - 1], x)
            yield from rec(i + 1)

    yield from rec(1)


def rgs_to_blocks(rgs) -> list[list[int]]:
    blocks: list[list[int]] = []
    for v, b in enumerate(rgs):
        if b == len(blocks):
            blocks.append([])
        blocks[b].append(v)
    return blocks


def set_partitions(n: int):
    """All partitions of ``range(n)`` as lists of blocks, in RGS order."""
    for rgs in restricted_growth_strings(n):
        yield rgs_to_blocks(rgs)


def _block_index(G: LabeledGraph, blocks) -> list[int]:
    idx = [-1] * G.n
    for b, block in enumerate(blocks):
        for v in block:
            if not 0 <= v < G.n or idx[v] != -1:
                raise ValueError("blocks must partition the vertex set")
            idx[v] = b
    if -1 in idx:
        raise ValueError("blocks must cover every vertex")
    return idx


def quotient(G: LabeledGraph, blocks) -> LabeledGraph:
    """Identify the vertices of each block.

    Raises a :class:`QuotientRejected` subclass naming the violated condition
    when the result would have a loop, a block with mixed vertex labels, or two
    blocks joined by edges with different labels.
    """
    blocks = [sorted(b) for b in blocks]
    idx = _block_index(G, blocks)
    labels = []
    for block in blocks:
        labs = {G.labels[v] for v in block}
        if len(labs) != 1:
            raise VertexLabelClash(f"block {block} mixes vertex labels {sorted(labs)}")
        labels.append(labs.pop())
    edges: dict[tuple[int, int], str] = {}
    for (u, v), lab in G.edges.items():
        a, b = idx[u], idx[v]
        if a == b:
            raise LoopCreated(f"edge ({u},{v}) lies inside one block")
        key = (a, b) if a < b else (b, a)
        prev = edges.get(key)
        if prev is not None and prev != lab:
            raise ParallelEdgeLabelClash(f"blocks {key} joined by labels {prev!r} and {lab!r}")
        edges[key] = lab
    return LabeledGraph(len(blocks), labels, edges, G.sigma, G.delta)


def try_quotient(G: LabeledGraph, blocks) -> LabeledGraph | None:
    try:
        return quotient(G, blocks)
    except QuotientRejected:
        return None


def valid_partitions(G: LabeledGraph):
    """Yield the RGS of every partition giving a valid labeled quotient.

    Prefixes that already put adjacent vertices, or differently labeled
    vertices, into one block are cut off; edge-label clashes are checked on
    complete strings.
    """
    n = G.n
    if n == 0:
        yield ()
        return
    a = [0] * n
    adj = G.adj
    labels = G.labels
    block_label: list[str] = []

    def rec(i, nblocks):
        if i == n:
            yield tuple(a)
            return
        for b in range(nblocks + 1):
            if b < nblocks:
                if block_label[b] != labels[i]:
                    continue
                if any(w < i and a[w] == b for w in adj[i]):
                    continue
                a[i] = b
                yield from rec(i + 1, nblocks)
            else:
                a[i] = b
                block_label.append(labels[i])
                yield from rec(i + 1, nblocks + 1)
                block_label.pop()

    for rgs in rec(0, 0):
        if _edge_labels_consistent(G, rgs):
            yield rgs


def _edge_labels_consistent(G: LabeledGraph, rgs) -> bool:
    seen: dict[tuple[int, int], str] = {}
    for (u, v), lab in G.edges.items():
        a, b = rgs[u], rgs[v]
        key = (a, b) if a < b else (b, a)
        prev = seen.setdefault(key, lab)
        if prev != lab:
            return False
    return True


def _fast_quotient(G: LabeledGraph, rgs) -> LabeledGraph:
    nb = max(rgs) + 1 if rgs else 0
    labels = [None] * nb
    for v, b in enumerate(rgs):
        labels[b] = G.labels[v]
    edges = {}
    for (u, v), lab in G.edges.items():
        a, b = rgs[u], rgs[v]
        edges[(a, b) if a < b else (b, a)] = lab
    return LabeledGraph(nb, labels, edges, G.sigma, G.delta)


@dataclass(frozen=True)
class SpasmMember:
    code: bytes
    graph: LabeledGraph
    witness: tuple  # RGS of a partition realising this quotient


def check_spasm_guard(H: LabeledGraph, guard: int | None = None) -> None:
    bound = GUARDS.spasm_n if guard is None else guard
    if H.n > bound:
        raise GuardExceeded(
            "spasm_n", H.n, bound, f"Bell({H.n}) = {bell(H.n)} partitions to enumerate"
        )


def enumerate_spasm(H: LabeledGraph, guard: int | None = None) -> dict[bytes, SpasmMember]:
    """All valid labeled quotients of ``H`` up to isomorphism, keyed by canonical code.

    The returned dict is ordered by canonical code.
    """
    check_spasm_guard(H, guard)
    found: dict[bytes, SpasmMember] = {}
    seen_exact: set = set()
    for rgs in valid_partitions(H):
        Q = _fast_quotient(H, rgs)
        exact = (Q.labels, tuple(Q.edges.items()))
        if exact in seen_exact:
            continue
        seen_exact.add(exact)
        code = canonical_form(Q, guard=max(H.n, GUARDS.iso_n))
        if code not in found:
            found[code] = SpasmMember(code, Q, rgs)
    return dict(sorted(found.items()))


def spasm_partitions(H: LabeledGraph, guard: int | None = None):
    """Yield ``(rgs, quotient)`` for every valid partition (no deduplication)."""
    check_spasm_guard(H, guard)
    for rgs in valid_partitions(H):
        yield rgs, _fast_quotient(H, rgs)
