import itertools
import json

import pytest

from conftest import automorphisms, homs_product, nx_isomorphic, rand_graph
from wlmotif.canon import (
    atomic_type,
    automorphism_count,
    canonical_form,
    is_isomorphic,
)
from wlmotif.errors import (
    DanglingVertexError,
    DuplicateEdgeError,
    GraphParseError,
    GuardExceeded,
    LoopCreated,
    ParallelEdgeLabelClash,
    QuotientRejected,
    SelfLoopError,
    VertexLabelClash,
)
from wlmotif.graph import (
    LabeledGraph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    el_transform,
    empty_graph,
    parse_graph,
    path_graph,
)
from wlmotif.homcount import count_homs_bruteforce, iter_homomorphisms
from wlmotif.spasm import bell, enumerate_spasm, quotient, restricted_growth_strings, set_partitions


def doc(vertices, edges, sigma=None, delta=None):
    d = {"vertices": [{"id": i, "label": l} for i, l in enumerate(vertices)],
         "edges": [{"u": u, "v": v, "label": l} for u, v, l in edges]}
    if sigma:
        d["sigma"] = sigma
    if delta:
        d["delta"] = delta
    return json.dumps(d)


# -- parsing ---------------------------------------------------------------

def test_parse_labeled_k2():
    G = parse_graph(doc(["a", "a"], [(0, 1, "x")]))
    assert (G.n, G.m, G.labels, G.edge_label(0, 1)) == (2, 1, ("a", "a"), "x")


def test_parse_c6():
    G = parse_graph(doc(["1"] * 6, [(i, (i + 1) % 6, "1") for i in range(6)]))
    assert (G.n, G.m) == (6, 6)
    assert all(G.degree(v) == 2 for v in range(6))


@pytest.mark.parametrize(
    "text, err",
    [
        (doc(["a"], [(0, 0, "x")]), SelfLoopError),
        (doc(["a", "a"], [(0, 1, "x"), (1, 0, "x")]), DuplicateEdgeError),
        (doc(["a", "a"], [(0, 2, "x")]), DanglingVertexError),
        ("{not json", GraphParseError),
        ('{"edges": []}', GraphParseError),
        (doc(["a"], [], sigma=["b"]), GraphParseError),
    ],
)
def test_parse_errors_are_distinct(text, err):
    with pytest.raises(err):
        parse_graph(text)


def test_json_round_trip(rng):
    for _ in range(20):
        G = rand_graph(rng, rng.randint(0, 7), 0.5, "ab", "xy")
        assert parse_graph(G.to_json()) == G


# -- isomorphism and canonical codes ----------------------------------------

def test_isomorphism_examples():
    K2x = LabeledGraph(2, None, {(0, 1): "x"})
    K2y = LabeledGraph(2, None, {(0, 1): "y"})
    assert is_isomorphic(complete_graph(3), complete_graph(3))
    assert not is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3)))
    assert not is_isomorphic(K2x, K2y)


def test_isomorphism_guard():
    with pytest.raises(GuardExceeded) as exc:
        is_isomorphic(cycle_graph(13), cycle_graph(13))
    assert "iso_n" in str(exc.value) and "13" in str(exc.value)


def test_canonical_form_renumbering_and_distinctness(rng):
    P4 = path_graph(4)
    assert canonical_form(P4) == canonical_form(P4.relabel([2, 0, 3, 1]))
    assert canonical_form(P4) != canonical_form(complete_graph(3))


def test_canonical_form_collapses_symmetric_k2_labelings():
    codes = set()
    for la, lb in itertools.product("ab", repeat=2):
        codes.add(canonical_form(LabeledGraph(2, [la, lb], [(0, 1)], "ab")))
    # {a,a}, {b,b} and the two encodings of {a,b}
    assert len(codes) == 3


def test_canonical_form_complete_invariant_against_networkx(rng):
    graphs = [rand_graph(rng, rng.randint(1, 7), rng.uniform(0.2, 0.7), "ab", "xy") for _ in range(60)]
    graphs += [G.relabel(rng.sample(range(G.n), G.n)) for G in graphs[:30]]
    for G, H in itertools.combinations(graphs, 2):
        if G.n != H.n:
            continue
        same = nx_isomorphic(G, H)
        assert (canonical_form(G) == canonical_form(H)) == same
        assert is_isomorphic(G, H) == same


def test_automorphism_counts(rng):
    assert automorphism_count(complete_graph(3)) == 6
    assert automorphism_count(path_graph(3)) == 2
    assert automorphism_count(LabeledGraph(2, ["a", "b"], [(0, 1)])) == 1
    for _ in range(15):
        G = rand_graph(rng, rng.randint(1, 6), 0.5, "ab")
        assert automorphism_count(G) == automorphisms(G)


def test_atomic_type():
    G = LabeledGraph(4, None, {(0, 1): "x", (2, 3): "y"})
    assert atomic_type(G, (0, 1)) == atomic_type(G, (0, 1))
    assert atomic_type(G, (0, 1)) != atomic_type(G, (2, 3))
    assert atomic_type(G, (0, 0)) != atomic_type(G, (0, 1))


def test_atomic_type_isomorphism_invariant(rng):
    for _ in range(20):
        G = rand_graph(rng, 5, 0.5, "ab", "xy")
        perm = rng.sample(range(5), 5)
        H = G.relabel(perm)
        for t in itertools.product(range(5), repeat=2):
            assert atomic_type(G, t) == atomic_type(H, tuple(perm[v] for v in t))


# -- partitions, quotients, spasm ------------------------------------------

def test_bell_numbers_and_rgs_counts():
    assert [bell(n) for n in range(11)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
    for n in range(7):
        strings = list(restricted_growth_strings(n))
        assert len(strings) == bell(n) == len(set(strings))
        assert strings == sorted(strings)


def test_quotient_examples():
    P3 = path_graph(3)
    Q = quotient(P3, [[0, 2], [1]])
    assert (Q.n, Q.m) == (2, 1)
    with pytest.raises(LoopCreated):
        quotient(P3, [[0, 1], [2]])
    with pytest.raises(VertexLabelClash):
        quotient(LabeledGraph(3, ["a", "b", "c"], [(0, 1), (1, 2)]), [[0, 2], [1]])
    with pytest.raises(ParallelEdgeLabelClash):
        quotient(LabeledGraph(3, None, {(0, 1): "x", (1, 2): "y"}), [[0, 2], [1]])


def test_quotient_by_singletons_is_identity(rng):
    for _ in range(10):
        G = rand_graph(rng, rng.randint(1, 7), 0.5, "ab", "xy")
        assert quotient(G, [[v] for v in range(G.n)]) == G


def test_spasm_examples():
    assert len(enumerate_spasm(path_graph(3))) == 2
    assert len(enumerate_spasm(complete_graph(3))) == 1
    members = enumerate_spasm(path_graph(4))
    shapes = sorted((m.graph.n, m.graph.m) for m in members.values())
    assert shapes == [(2, 1), (3, 2), (3, 3), (4, 3)]


def test_spasm_guard_reports_bell_estimate():
    with pytest.raises(GuardExceeded) as exc:
        enumerate_spasm(path_graph(11))
    assert "Bell(11)" in str(exc.value)


def _surjective_hom_exists(H, Q):
    return any(len(set(phi)) == Q.n for phi in iter_homomorphisms(H, Q))


def test_spasm_members_are_surjective_images(rng):
    for _ in range(12):
        H = rand_graph(rng, rng.randint(1, 6), 0.5, "ab", "xy")
        members = enumerate_spasm(H)
        assert canonical_form(H) in members
        for m in members.values():
            assert _surjective_hom_exists(H, m.graph)


def test_spasm_is_exactly_the_valid_quotients(rng):
    for _ in range(8):
        H = rand_graph(rng, rng.randint(1, 5), 0.5, "ab", "xy")
        expected = set()
        for blocks in set_partitions(H.n):
            try:
                expected.add(canonical_form(quotient(H, blocks)))
            except QuotientRejected:
                continue
        assert set(enumerate_spasm(H)) == expected


# -- transforms ------------------------------------------------------------

def test_el_transform_examples():
    G = LabeledGraph(2, ["alpha", "beta"], {(0, 1): "d"})
    E = el_transform(G)
    assert E.labels == ("1", "1")
    assert json.loads(E.edge_label(0, 1)) == ["alpha", "beta", "d"]
    C = el_transform(LabeledGraph(3, None, {(0, 1): "x", (1, 2): "y"}))
    assert [json.loads(l) for l in C.edges.values()] == [["1", "1", "x"], ["1", "1", "y"]]


def test_el_transform_preserves_hom_counts(rng):
    done = 0
    while done < 20:
        F = rand_graph(rng, rng.randint(1, 4), 0.6, "ab", "xy")
        if any(F.degree(v) == 0 for v in range(F.n)):
            continue
        G = rand_graph(rng, rng.randint(1, 6), 0.5, "ab", "xy")
        assert homs_product(F, G) == count_homs_bruteforce(el_transform(F), el_transform(G))
        done += 1


def test_el_transform_forgets_isolated_vertex_labels():
    # an isolated "a" vertex may map anywhere once its label is gone
    F = LabeledGraph(1, ["a"], [], "ab")
    G = LabeledGraph(2, ["a", "b"], [], "ab")
    assert homs_product(F, G) == 1
    assert count_homs_bruteforce(el_transform(F), el_transform(G)) == 2


def test_disjoint_union(rng):
    U = disjoint_union(complete_graph(3), complete_graph(3))
    assert (U.n, U.m) == (6, 6)
    G = rand_graph(rng, 5, 0.5)
    assert disjoint_union(G, empty_graph(0)) == G
    for _ in range(10):
        F = rand_graph(rng, rng.randint(1, 4), 0.6)
        if not F.is_connected():
            continue
        G, H = rand_graph(rng, 5, 0.5), rand_graph(rng, 4, 0.5)
        assert homs_product(F, disjoint_union(G, H)) == homs_product(F, G) + homs_product(F, H)
