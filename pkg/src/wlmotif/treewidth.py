"""Exact treewidth, tree decompositions and nice tree decompositions.

Labels are ignored throughout: treewidth is a property of the underlying
simple graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .config import GUARDS
from .errors import GuardExceeded, InvalidDecomposition
from .graph import LabeledGraph


@dataclass
class TreeDecomposition:
    bags: list[frozenset]
    tree_edges: list[tuple[int, int]]

    @property
    def width(self) -> int:
        return max(0, max((len(b) for b in self.bags), default=0) - 1)

    def neighbors(self) -> list[list[int]]:
        nb: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.tree_edges:
            nb[a].append(b)
            nb[b].append(a)
        return nb

    def to_dict(self) -> dict:
        return {
            "width": max(self.width, 0),
            "bags": [sorted(b) for b in self.bags],
            "tree_edges": [list(e) for e in self.tree_edges],
        }


@dataclass
class NiceTreeDecomposition:
    """Rooted decomposition whose node kinds describe each node relative to its parent.

    ``introduce``: bag = parent bag plus one vertex; ``forget``: parent bag
    minus one vertex; ``split``: one of two children sharing the parent's bag;
    ``leaf``: singleton bag with no children. The root has kind ``root``.
    """

    bags: list[frozenset]
    parent: list[int]
    children: list[list[int]]
    kind: list[str]
    root: int
    meta: dict = field(default_factory=dict)

    @property
    def width(self) -> int:
        return max(0, max((len(b) for b in self.bags), default=0) - 1)

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = [(p, i) for i, p in enumerate(self.parent) if p >= 0]
        return TreeDecomposition(list(self.bags), edges)

    def postorder(self) -> list[int]:
        out, stack = [], [(self.root, False)]
        while stack:
            node, done = stack.pop()
            if done:
                out.append(node)
                continue
            stack.append((node, True))
            for c in reversed(self.children[node]):
                stack.append((c, False))
        return out


def _bitadj(G: LabeledGraph) -> list[int]:
    adj = [0] * G.n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _q_size(adj: list[int], S: int, v: int) -> int:
    """Number of vertices outside ``S | {v}`` reachable from ``v`` through ``S``."""
    seen = 1 << v
    frontier = 1 << v
    reach = 0
    while frontier:
        x = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        nb = adj[x] & ~seen
        seen |= nb
        reach |= nb & ~S
        frontier |= nb & S
    return bin(reach).count("1")


def _greedy_upper(adj: list[int], n: int) -> int:
    """Min-degree elimination width, an upper bound."""
    g = list(adj)
    alive = (1 << n) - 1
    width = 0
    for _ in range(n):
        best, bd = -1, n + 1
        a = alive
        while a:
            x = (a & -a).bit_length() - 1
            a &= a - 1
            d = bin(g[x] & alive).count("1")
            if d < bd:
                best, bd = x, d
        width = max(width, bd)
        nb = g[best] & alive & ~(1 << best)
        b = nb
        while b:
            y = (b & -b).bit_length() - 1
            b &= b - 1
            g[y] |= nb & ~(1 << y)
        alive &= ~(1 << best)
    return width


def _degeneracy(adj: list[int], n: int) -> int:
    """Max over subgraphs of the min degree, a lower bound on treewidth."""
    alive = (1 << n) - 1
    best = 0
    for _ in range(n):
        a, mv, md = alive, -1, n + 1
        while a:
            x = (a & -a).bit_length() - 1
            a &= a - 1
            d = bin(adj[x] & alive).count("1")
            if d < md:
                mv, md = x, d
        best = max(best, md)
        alive &= ~(1 << mv)
    return best


def _is_forest(G: LabeledGraph) -> bool:
    return G.m == G.n - len(G.components())


def _check(G: LabeledGraph, guard: int | None) -> None:
    bound = GUARDS.treewidth_n if guard is None else guard
    if G.n > bound:
        raise GuardExceeded("treewidth_n", G.n, bound)


def elimination_order(G: LabeledGraph, guard: int | None = None) -> tuple[int, list[int]]:
    """Return ``(treewidth, optimal elimination ordering)``.

    Dynamic programming over eliminated vertex sets: ``TW(S)`` is the best
    width achievable when the vertices of ``S`` are eliminated first.
    """
    _check(G, guard)
    n = G.n
    if n == 0:
        return 0, []
    adj = _bitadj(G)
    upper = _greedy_upper(adj, n)
    lower = max(_degeneracy(adj, n), 1 if G.m else 0)
    full = (1 << n) - 1
    if upper == lower:
        return upper, _greedy_order(adj, n)

    @lru_cache(maxsize=None)
    def tw(S: int) -> int:
        if S == 0:
            return -1
        best = n
        s = S
        while s:
            v = (s & -s).bit_length() - 1
            s &= s - 1
            rest = S & ~(1 << v)
            q = _q_size(adj, rest, v)
            if q >= best:
                continue
            val = max(tw(rest), q)
            if val < best:
                best = val
                if best <= lower:
                    break
        return best

    width = tw(full)
    order: list[int] = []
    S = full
    while S:
        s = S
        while s:
            v = (s & -s).bit_length() - 1
            s &= s - 1
            rest = S & ~(1 << v)
            if max(tw(rest), _q_size(adj, rest, v)) == tw(S):
                order.append(v)
                S = rest
                break
    order.reverse()
    return width, order


def _greedy_order(adj: list[int], n: int) -> list[int]:
    g = list(adj)
    alive = (1 << n) - 1
    order = []
    for _ in range(n):
        best, bd = -1, n + 1
        a = alive
        while a:
            x = (a & -a).bit_length() - 1
            a &= a - 1
            d = bin(g[x] & alive).count("1")
            if d < bd:
                best, bd = x, d
        nb = g[best] & alive & ~(1 << best)
        b = nb
        while b:
            y = (b & -b).bit_length() - 1
            b &= b - 1
            g[y] |= nb & ~(1 << y)
        alive &= ~(1 << best)
        order.append(best)
    return order


def elimination_width(G: LabeledGraph, order) -> int:
    """Width of the decomposition induced by eliminating vertices in ``order``."""
    adj = _bitadj(G)
    S, width = 0, -1 if G.n == 0 else 0
    for v in order:
        width = max(width, _q_size(adj, S, v))
        S |= 1 << v
    return width


def exact_treewidth(G: LabeledGraph, guard: int | None = None) -> int:
    """Exact treewidth; 0 for edgeless (and empty) graphs."""
    _check(G, guard)
    if G.m == 0:
        return 0
    if _is_forest(G):
        return 1
    return elimination_order(G, guard)[0]


def decomposition_from_order(G: LabeledGraph, order) -> TreeDecomposition:
    """Tree decomposition induced by an elimination ordering."""
    n = G.n
    if n == 0:
        return TreeDecomposition([frozenset()], [])
    pos = {v: i for i, v in enumerate(order)}
    fill = [set(G.adj[v]) for v in range(n)]
    bags: list[frozenset] = []
    later: list[set] = []
    for v in order:
        higher = {w for w in fill[v] if pos[w] > pos[v]}
        for a in higher:
            fill[a] |= higher - {a}
        bags.append(frozenset(higher | {v}))
        later.append(higher)
    edges = []
    roots = []
    for i, v in enumerate(order):
        if later[i]:
            nxt = min(later[i], key=lambda w: pos[w])
            edges.append((i, pos[nxt]))
        else:
            roots.append(i)
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return _prune_redundant(TreeDecomposition(bags, edges))


def _prune_redundant(td: TreeDecomposition) -> TreeDecomposition:
    """Contract tree edges whose one bag is contained in the other."""
    bags = list(td.bags)
    nb = [set(x) for x in td.neighbors()]
    alive = [True] * len(bags)
    changed = True
    while changed:
        changed = False
        for i in range(len(bags)):
            if not alive[i]:
                continue
            for j in sorted(nb[i]):
                if bags[i] <= bags[j]:
                    for k in nb[i]:
                        if k != j:
                            nb[k].discard(i)
                            nb[k].add(j)
                            nb[j].add(k)
                    nb[j].discard(i)
                    alive[i] = False
                    nb[i] = set()
                    changed = True
                    break
    keep = [i for i in range(len(bags)) if alive[i]]
    index = {old: new for new, old in enumerate(keep)}
    edges = sorted({(min(index[i], index[j]), max(index[i], index[j])) for i in keep for j in nb[i]})
    return TreeDecomposition([bags[i] for i in keep], edges)


def tree_decomposition(G: LabeledGraph, guard: int | None = None) -> TreeDecomposition:
    """Optimal-width tree decomposition."""
    _, order = elimination_order(G, guard)
    return decomposition_from_order(G, order)


@dataclass
class ValidationReport:
    ok: bool
    uncovered_edges: list[tuple[int, int]]
    uncovered_vertices: list[int]
    disconnected_vertices: list[int]
    tree_errors: list[str]

    def __bool__(self):
        return self.ok


def validate_td(G: LabeledGraph, td: TreeDecomposition) -> ValidationReport:
    """Check both tree-decomposition conditions; violations are reported, not raised."""
    errors = []
    k = len(td.bags)
    nb = td.neighbors()
    if k == 0:
        errors.append("no bags")
    elif len(td.tree_edges) != k - 1:
        errors.append(f"{len(td.tree_edges)} tree edges for {k} nodes")
    else:
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != k:
            errors.append("tree is not connected")
    uncovered = [
        (u, v) for (u, v) in G.edges if not any(u in b and v in b for b in td.bags)
    ]
    missing = [v for v in range(G.n) if not any(v in b for b in td.bags)]
    disconnected = []
    for v in range(G.n):
        nodes = {i for i, b in enumerate(td.bags) if v in b}
        if not nodes:
            continue
        start = next(iter(nodes))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if y in nodes and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != nodes:
            disconnected.append(v)
    ok = not (errors or uncovered or missing or disconnected)
    return ValidationReport(ok, uncovered, missing, disconnected, errors)


def edge_in_bag_property(G: LabeledGraph, td: TreeDecomposition) -> bool:
    """For every subtree ``T'`` obtained by cutting one tree edge, and the node
    ``alpha`` on the other side: an edge from ``z`` in ``B(alpha) - B(T')`` to
    ``y`` in ``B(T')`` forces ``y`` into ``B(alpha)``."""
    nb = td.neighbors()
    for a, b in td.tree_edges:
        for inside, alpha in ((a, b), (b, a)):
            side = {inside}
            stack = [inside]
            while stack:
                x = stack.pop()
                for y in nb[x]:
                    if y != alpha and y not in side:
                        side.add(y)
                        stack.append(y)
            covered = set().union(*(td.bags[i] for i in side))
            for z in td.bags[alpha] - covered:
                for y in G.adj[z]:
                    if y in covered and y not in td.bags[alpha]:
                        return False
    return True


def make_nice(td: TreeDecomposition, root_bag=None) -> NiceTreeDecomposition:
    """Convert ``td`` into a nice decomposition of the same width.

    If ``root_bag`` is a nonempty vertex set it must be contained in some bag;
    the result is rooted at a node whose bag equals ``root_bag``.
    """
    if not td.bags:
        raise InvalidDecomposition("empty decomposition")
    root_bag = frozenset(root_bag or ())
    start = 0
    if root_bag:
        for i, b in enumerate(td.bags):
            if root_bag <= b:
                start = i
                break
        else:
            raise InvalidDecomposition(f"root bag {sorted(root_bag)} is not inside any bag")
    else:
        root_bag = td.bags[0]

    nb = td.neighbors()
    bags: list[frozenset] = []
    parent: list[int] = []
    kind: list[str] = []

    def new(bag, par, k):
        bags.append(frozenset(bag))
        parent.append(par)
        kind.append(k)
        return len(bags) - 1

    def chain(node, target):
        """Walk from ``bags[node]`` to ``target`` one vertex at a time; return last node."""
        cur = bags[node]
        for v in sorted(cur - target):
            cur = cur - {v}
            node = new(cur, node, "forget")
        for v in sorted(target - cur):
            cur = cur | {v}
            node = new(cur, node, "introduce")
        return node

    def expand(node, tnode, tparent):
        """``node`` carries ``td.bags[tnode]``; hang the subtree of ``tnode`` below it."""
        kids = sorted(c for c in nb[tnode] if c != tparent)
        if not kids:
            cur = bags[node]
            for v in sorted(cur)[1:]:
                cur = cur - {v}
                node = new(cur, node, "forget")
            return
        ports = []
        here = node
        for _ in range(len(kids) - 1):
            ports.append(new(bags[here], here, "split"))
            here = new(bags[here], here, "split")
        ports.append(here)
        for port, c in zip(ports, kids):
            expand(chain(port, td.bags[c]), c, tnode)

    root = new(root_bag, -1, "root")
    top = chain(root, td.bags[start])
    expand(top, start, -1)
    nice = _finalize(bags, parent, kind, root)
    return nice


def _finalize(bags, parent, kind, root) -> NiceTreeDecomposition:
    children: list[list[int]] = [[] for _ in bags]
    for i, p in enumerate(parent):
        if p >= 0:
            children[p].append(i)
    # collapse single-child links that keep the bag unchanged
    changed = True
    while changed:
        changed = False
        for i in range(len(bags)):
            p = parent[i]
            if p < 0 or parent[i] == -2:
                continue
            if len(children[p]) == 1 and bags[p] == bags[i]:
                children[p] = children[i]
                for c in children[i]:
                    parent[c] = p
                parent[i] = -2
                children[i] = []
                changed = True
    keep = [i for i in range(len(bags)) if parent[i] != -2]
    index = {old: new for new, old in enumerate(keep)}
    nbags = [bags[i] for i in keep]
    npar = [index[parent[i]] if parent[i] >= 0 else -1 for i in keep]
    nkids = [[index[c] for c in children[i]] for i in keep]
    nkind = []
    for new_i, old in enumerate(keep):
        p = npar[new_i]
        if p < 0:
            nkind.append("root")
        elif not nkids[new_i]:
            nkind.append("leaf")
        elif len(nkids[p]) == 2:
            nkind.append("split")
        elif len(nbags[new_i]) > len(nbags[p]):
            nkind.append("introduce")
        else:
            nkind.append("forget")
    return NiceTreeDecomposition(nbags, npar, nkids, nkind, index[root])


def check_nice(nice: NiceTreeDecomposition) -> list[str]:
    """Return a list of violations of the nice-decomposition node rules."""
    errs = []
    for i, b in enumerate(nice.bags):
        p = nice.parent[i]
        kids = nice.children[i]
        if not kids and len(b) != 1 and i != nice.root:
            errs.append(f"leaf {i} has bag of size {len(b)}")
        if len(kids) > 2:
            errs.append(f"node {i} has {len(kids)} children")
        if len(kids) == 2:
            for c in kids:
                if nice.bags[c] != b:
                    errs.append(f"split child {c} bag differs from parent {i}")
        if len(kids) == 1:
            c = kids[0]
            diff = nice.bags[c] ^ b
            if len(diff) != 1:
                errs.append(f"node {c} differs from parent {i} by {len(diff)} vertices")
        if p >= 0 and nice.kind[i] == "root":
            errs.append(f"non-root {i} marked root")
    return errs


def nice_decomposition(G: LabeledGraph, root_bag=None, guard: int | None = None) -> NiceTreeDecomposition:
    return make_nice(tree_decomposition(G, guard), root_bag)
