"""Labeled graphs: representation, JSON interchange and structural transforms.

A :class:`LabeledGraph` is immutable. Vertices are ``0..n-1``; every vertex
carries one label from the vertex alphabet ``sigma`` and every edge one label
from the edge alphabet ``delta``. Alphabets are tuples of strings.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .errors import (
    DanglingVertexError,
    DuplicateEdgeError,
    GraphParseError,
    SelfLoopError,
)

DEFAULT_LABEL = "1"


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class LabeledGraph:
    """Finite simple graph with vertex and edge labels."""

    __slots__ = ("n", "labels", "edges", "sigma", "delta", "_adj", "_hash")

    def __init__(
        self,
        n: int,
        labels: Iterable[str] | None = None,
        edges: Mapping[tuple[int, int], str] | Iterable | None = None,
        sigma: Iterable[str] | None = None,
        delta: Iterable[str] | None = None,
    ):
        if n < 0:
            raise GraphParseError("negative vertex count")
        labels = tuple(labels) if labels is not None else (DEFAULT_LABEL,) * n
        if len(labels) != n:
            raise GraphParseError(f"expected {n} vertex labels, got {len(labels)}")
        emap: dict[tuple[int, int], str] = {}
        if edges is not None:
            items = edges.items() if isinstance(edges, Mapping) else edges
            for item in items:
                if len(item) == 2 and isinstance(item[0], tuple):
                    (u, v), lab = item
                elif len(item) == 2:
                    u, v = item
                    lab = DEFAULT_LABEL
                else:
                    u, v, lab = item
                if u == v:
                    raise SelfLoopError(f"self-loop at vertex {u}")
                if not (0 <= u < n and 0 <= v < n):
                    raise DanglingVertexError(f"edge ({u},{v}) references a missing vertex")
                key = _edge_key(u, v)
                if key in emap:
                    raise DuplicateEdgeError(f"duplicate edge {key}")
                emap[key] = str(lab)
        self.n = n
        self.labels = tuple(str(x) for x in labels)
        self.edges = dict(sorted(emap.items()))
        used_s = set(self.labels)
        used_d = set(self.edges.values())
        self.sigma = tuple(sorted(set(sigma) | used_s)) if sigma is not None else tuple(sorted(used_s))
        self.delta = tuple(sorted(set(delta) | used_d)) if delta is not None else tuple(sorted(used_d))
        adj: list[dict[int, str]] = [dict() for _ in range(n)]
        for (u, v), lab in self.edges.items():
            adj[u][v] = lab
            adj[v][u] = lab
        self._adj = tuple(adj)
        self._hash = None

    # -- basic queries -----------------------------------------------------
    @property
    def adj(self) -> tuple[dict[int, str], ...]:
        """Per-vertex neighbour map ``w -> edge label``. Do not mutate."""
        return self._adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_label(self, u: int, v: int) -> str | None:
        return self._adj[u].get(v)

    def neighbors(self, v: int):
        return self._adj[v].keys()

    def edge_list(self) -> list[tuple[int, int, str]]:
        return [(u, v, lab) for (u, v), lab in self.edges.items()]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> "LabeledGraph":
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        edges = {}
        for (u, v), lab in self.edges.items():
            if u in index and v in index:
                edges[(index[u], index[v])] = lab
        return LabeledGraph(len(vs), [self.labels[v] for v in vs], edges, self.sigma, self.delta)

    def relabel(self, perm: list[int]) -> "LabeledGraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        labels = [None] * self.n
        for v in range(self.n):
            labels[perm[v]] = self.labels[v]
        edges = {(perm[u], perm[v]): lab for (u, v), lab in self.edges.items()}
        return LabeledGraph(self.n, labels, edges, self.sigma, self.delta)

    def with_edges(self, extra: Mapping[tuple[int, int], str]) -> "LabeledGraph":
        edges = dict(self.edges)
        edges.update({_edge_key(u, v): lab for (u, v), lab in extra.items()})
        return LabeledGraph(self.n, self.labels, edges, self.sigma, self.delta)

    # -- dunder ------------------------------------------------------------
    def _key(self):
        return (self.n, self.labels, tuple(self.edges.items()), self.sigma, self.delta)

    def __eq__(self, other):
        return isinstance(other, LabeledGraph) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"LabeledGraph(n={self.n}, m={self.m})"

    # -- interchange -------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "delta": list(self.delta),
            "vertices": [{"id": i, "label": lab} for i, lab in enumerate(self.labels)],
            "edges": [{"u": u, "v": v, "label": lab} for (u, v), lab in self.edges.items()],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def graph_from_dict(doc) -> LabeledGraph:
    if not isinstance(doc, dict):
        raise GraphParseError("graph document must be a JSON object")
    try:
        sigma = [str(s) for s in doc.get("sigma", [])]
        delta = [str(s) for s in doc.get("delta", [])]
        verts = doc["vertices"]
        edges = doc.get("edges", [])
    except (KeyError, TypeError) as exc:
        raise GraphParseError(f"missing field: {exc}") from None
    n = len(verts)
    labels: list[str | None] = [None] * n
    for item in verts:
        try:
            i, lab = item["id"], str(item["label"])
        except (KeyError, TypeError):
            raise GraphParseError(f"malformed vertex entry {item!r}") from None
        if not isinstance(i, int) or not 0 <= i < n:
            raise GraphParseError(f"vertex ids must be 0..{n - 1}, got {i!r}")
        if labels[i] is not None:
            raise GraphParseError(f"vertex id {i} declared twice")
        if sigma and lab not in sigma:
            raise GraphParseError(f"vertex label {lab!r} not in sigma")
        labels[i] = lab
    triples = []
    for item in edges:
        try:
            u, v = item["u"], item["v"]
            lab = str(item.get("label", delta[0] if delta else DEFAULT_LABEL))
        except (KeyError, TypeError):
            raise GraphParseError(f"malformed edge entry {item!r}") from None
        if not isinstance(u, int) or not isinstance(v, int):
            raise GraphParseError(f"edge endpoints must be integers: {item!r}")
        if delta and lab not in delta:
            raise GraphParseError(f"edge label {lab!r} not in delta")
        triples.append((u, v, lab))
    return LabeledGraph(n, labels, triples, sigma or None, delta or None)


def parse_graph(text: str) -> LabeledGraph:
    """Parse a JSON graph document.

    >>> parse_graph('{"vertices":[{"id":0,"label":"a"},{"id":1,"label":"a"}],'
    ...             '"edges":[{"u":0,"v":1,"label":"x"}]}').m
    1
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from None
    return graph_from_dict(doc)


def load_graph(path: str) -> LabeledGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def disjoint_union(G: LabeledGraph, H: LabeledGraph) -> LabeledGraph:
    shift = G.n
    edges = dict(G.edges)
    for (u, v), lab in H.edges.items():
        edges[(u + shift, v + shift)] = lab
    return LabeledGraph(
        G.n + H.n,
        G.labels + H.labels,
        edges,
        set(G.sigma) | set(H.sigma),
        set(G.delta) | set(H.delta),
    )


def el_label(la: str, lb: str, kappa: str) -> str:
    """Composite edge label ``(lower endpoint label, upper, edge label)``."""
    if lb < la:
        la, lb = lb, la
    return json.dumps([la, lb, kappa], separators=(",", ":"))


def el_transform(G: LabeledGraph) -> LabeledGraph:
    """Move vertex labels onto edges; every vertex gets label ``"1"``.

    Endpoint labels are ordered by plain string comparison so the result is
    reproducible from the declared alphabets.
    """
    edges = {(u, v): el_label(G.labels[u], G.labels[v], lab) for (u, v), lab in G.edges.items()}
    delta = [
        el_label(a, b, d)
        for i, a in enumerate(sorted(G.sigma))
        for b in sorted(G.sigma)[i:]
        for d in G.delta
    ]
    return LabeledGraph(G.n, [DEFAULT_LABEL] * G.n, edges, [DEFAULT_LABEL], delta)


# -- small constructors ----------------------------------------------------

def _uniform(n, edges, vlabel, elabel):
    return LabeledGraph(n, [vlabel] * n, [(u, v, elabel) for u, v in edges])


def empty_graph(n: int = 0, vlabel: str = DEFAULT_LABEL) -> LabeledGraph:
    return LabeledGraph(n, [vlabel] * n, [])


def path_graph(n: int, vlabel: str = DEFAULT_LABEL, elabel: str = DEFAULT_LABEL) -> LabeledGraph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    return _uniform(n, [(i, i + 1) for i in range(n - 1)], vlabel, elabel)


def cycle_graph(n: int, vlabel: str = DEFAULT_LABEL, elabel: str = DEFAULT_LABEL) -> LabeledGraph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return _uniform(n, [(i, (i + 1) % n) for i in range(n)], vlabel, elabel)


def complete_graph(n: int, vlabel: str = DEFAULT_LABEL, elabel: str = DEFAULT_LABEL) -> LabeledGraph:
    return _uniform(n, [(i, j) for i in range(n) for j in range(i + 1, n)], vlabel, elabel)


def star_graph(leaves: int, vlabel: str = DEFAULT_LABEL, elabel: str = DEFAULT_LABEL) -> LabeledGraph:
    """``K_{1,leaves}`` with the centre at vertex 0."""
    return _uniform(leaves + 1, [(0, i) for i in range(1, leaves + 1)], vlabel, elabel)


def from_edges(n: int, edges, vlabel: str = DEFAULT_LABEL, elabel: str = DEFAULT_LABEL) -> LabeledGraph:
    return _uniform(n, edges, vlabel, elabel)
