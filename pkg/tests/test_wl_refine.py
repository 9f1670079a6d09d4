import itertools

import pytest

from conftest import rand_graph
from wlmotif.catalog import cfi_pairs
from wlmotif.errors import DimensionMismatch, GuardExceeded
from wlmotif.graph import LabeledGraph, complete_graph, cycle_graph, disjoint_union, path_graph
from wlmotif.homcount import count_homs_bruteforce
from wlmotif.wl import (
    ColorRegistry,
    initial_coloring,
    partition_of,
    refine_jointly,
    stable_coloring,
    wl_equivalent,
    wl_equivalent_bounded,
    wl_round,
)

C6 = cycle_graph(6)
TWO_K3 = disjoint_union(complete_graph(3), complete_graph(3))


def one_round(G, k=1, reg=None):
    if reg is None:
        reg = ColorRegistry(k)
    return wl_round(G, initial_coloring(G, k, reg), reg)


def test_round_examples():
    assert one_round(C6).classes() == 1
    col = one_round(path_graph(3))
    assert col.classes() == 2 and col[(0,)] == col[(2,)] != col[(1,)]
    reg = ColorRegistry(1)
    a = one_round(LabeledGraph(2, None, {(0, 1): "x"}), reg=reg)
    b = one_round(LabeledGraph(2, None, {(0, 1): "y"}), reg=reg)
    assert set(a.colors).isdisjoint(b.colors)


def test_round_zero_is_atomic_type():
    G = LabeledGraph(3, ["a", "a", "b"], {(0, 1): "x"})
    col = initial_coloring(G, 2, ColorRegistry(2))
    assert col[(0, 1)] == col[(1, 0)]
    assert col[(0, 1)] != col[(0, 2)]
    assert col[(0, 0)] != col[(0, 1)]


def test_dimension_mismatch():
    reg = ColorRegistry(1)
    col = initial_coloring(C6, 1, reg)
    with pytest.raises(DimensionMismatch):
        initial_coloring(C6, 2, reg)
    with pytest.raises(DimensionMismatch):
        wl_round(path_graph(3), col, reg)


def test_stable_coloring_examples():
    col, t = stable_coloring(C6, 1, ColorRegistry(1))
    assert col.classes() == 1 and t <= 1
    col, _ = stable_coloring(path_graph(4), 1, ColorRegistry(1))
    assert col.classes() == 2
    a, ta = stable_coloring(path_graph(5), 2, ColorRegistry(2))
    b, tb = stable_coloring(path_graph(5), 2, ColorRegistry(2))
    assert (a, ta) == (b, tb)


def test_stable_round_is_a_fixpoint(rng):
    for _ in range(10):
        G = rand_graph(rng, rng.randint(2, 7), 0.4, "ab", "xy")
        for k in (1, 2):
            reg = ColorRegistry(k)
            col, _ = stable_coloring(G, k, reg)
            assert partition_of(wl_round(G, col, reg)) == partition_of(col)


def test_refinement_is_monotone(rng):
    for _ in range(10):
        G = rand_graph(rng, 6, 0.4, "ab")
        reg = ColorRegistry(2)
        col = initial_coloring(G, 2, reg)
        for _ in range(4):
            nxt = wl_round(G, col, reg)
            for i, j in itertools.combinations(range(len(col.colors)), 2):
                if nxt.colors[i] == nxt.colors[j]:
                    assert col.colors[i] == col.colors[j]
            col = nxt


def test_equivalence_examples():
    assert wl_equivalent(C6, TWO_K3, 1)
    assert not wl_equivalent(C6, TWO_K3, 2)
    assert wl_equivalent(C6, C6, 3)
    assert wl_equivalent_bounded(C6, TWO_K3, 1, 3)
    assert wl_equivalent_bounded(C6, C6, 2, 0)


def test_bounded_equivalence_is_monotone_in_rounds(rng):
    for _ in range(15):
        G, H = rand_graph(rng, 6, 0.4), rand_graph(rng, 6, 0.4)
        verdicts = [wl_equivalent_bounded(G, H, 1, r) for r in range(5)]
        for r in range(1, 5):
            if verdicts[r]:
                assert verdicts[r - 1]


def test_isomorphic_graphs_are_equivalent(rng):
    for _ in range(8):
        G = rand_graph(rng, 6, 0.5, "ab", "xy")
        H = G.relabel(rng.sample(range(6), 6))
        assert wl_equivalent(G, H, 1) and wl_equivalent(G, H, 2)


def test_dimension_monotonicity_on_cfi_and_random(rng):
    pairs = [(a, b) for _, a, b in cfi_pairs(max_tw=3) if a.n <= 12]
    pairs += [(rand_graph(rng, 6, 0.5), rand_graph(rng, 6, 0.5)) for _ in range(10)]
    for G, H in pairs:
        if wl_equivalent(G, H, 2):
            assert wl_equivalent(G, H, 1)


def test_equivalent_graphs_agree_on_low_treewidth_homs():
    trees = [path_graph(n) for n in range(1, 6)] + [LabeledGraph(4, None, [(0, 1), (0, 2), (0, 3)])]
    assert wl_equivalent(C6, TWO_K3, 1)
    for T in trees:
        assert count_homs_bruteforce(T, C6) == count_homs_bruteforce(T, TWO_K3)
    assert count_homs_bruteforce(complete_graph(3), C6) != count_homs_bruteforce(complete_graph(3), TWO_K3)


def test_joint_refinement_shares_colours():
    reg = ColorRegistry(1)
    (a, b), _ = refine_jointly([C6, TWO_K3], 1, reg)
    assert set(a.colors) == set(b.colors)


def test_tuple_guard():
    with pytest.raises(GuardExceeded) as exc:
        stable_coloring(cycle_graph(11), 6, ColorRegistry(6))
    assert "wl_tuples" in str(exc.value)


def test_fingerprints_agree_across_sessions():
    # the second session interns other colours first, so raw ids differ
    r1, r2 = ColorRegistry(1), ColorRegistry(1)
    refine_jointly([cycle_graph(5)], 1, r2)
    (c1,), _ = refine_jointly([path_graph(3)], 1, r1)
    (c2,), _ = refine_jointly([path_graph(3)], 1, r2)
    assert c1.colors != c2.colors
    assert [r1.fingerprint(c) for c in c1.colors] == [r2.fingerprint(c) for c in c2.colors]
