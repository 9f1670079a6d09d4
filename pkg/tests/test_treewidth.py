import pytest

from conftest import rand_graph, treewidth_oracle
from wlmotif.errors import GuardExceeded
from wlmotif.graph import LabeledGraph, complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph
from wlmotif.treewidth import (
    TreeDecomposition,
    check_nice,
    exact_treewidth,
    make_nice,
    tree_decomposition,
    validate_td,
)


def test_treewidth_examples():
    assert exact_treewidth(path_graph(5)) == 1
    assert exact_treewidth(LabeledGraph(5, None, [(0, 1), (0, 2), (0, 3), (3, 4)])) == 1
    for k in range(1, 7):
        assert exact_treewidth(complete_graph(k)) == k - 1
    assert exact_treewidth(cycle_graph(5)) == 2
    assert exact_treewidth(empty_graph(0)) == 0
    assert exact_treewidth(empty_graph(4)) == 0


def test_treewidth_guard():
    with pytest.raises(GuardExceeded):
        exact_treewidth(cycle_graph(15))


def test_treewidth_matches_elimination_oracle(rng):
    for _ in range(40):
        G = rand_graph(rng, rng.randint(1, 7), rng.uniform(0.2, 0.8))
        assert exact_treewidth(G) == treewidth_oracle(G)


def test_treewidth_of_eight_vertex_graphs(rng):
    for _ in range(6):
        G = rand_graph(rng, 8, rng.uniform(0.3, 0.7))
        assert exact_treewidth(G) == treewidth_oracle(G)


def test_treewidth_is_max_over_components(rng):
    for _ in range(10):
        G, H = rand_graph(rng, 5, 0.5), rand_graph(rng, 5, 0.6)
        assert exact_treewidth(disjoint_union(G, H)) == max(exact_treewidth(G), exact_treewidth(H))


def test_tree_decomposition_examples():
    td = tree_decomposition(path_graph(3))
    assert td.width == 1 and sorted(map(sorted, td.bags)) == [[0, 1], [1, 2]]
    td = tree_decomposition(complete_graph(3))
    assert td.width == 2 and len(td.bags) == 1
    td = tree_decomposition(cycle_graph(4))
    assert td.width == 2 and len(td.bags) == 2 and validate_td(cycle_graph(4), td)


def test_tree_decompositions_validate(rng):
    for _ in range(40):
        G = rand_graph(rng, rng.randint(0, 9), rng.uniform(0.2, 0.7))
        td = tree_decomposition(G)
        assert validate_td(G, td)
        assert td.width == exact_treewidth(G)


def test_validate_reports_violations():
    P3 = path_graph(3)
    missing = TreeDecomposition([{0, 1}, {2}], [(0, 1)])
    rep = validate_td(P3, missing)
    assert not rep and (1, 2) in rep.uncovered_edges
    split = TreeDecomposition([{0, 1}, {1, 2}, {0}], [(0, 1), (1, 2)])
    rep = validate_td(P3, split)
    assert not rep and 0 in rep.disconnected_vertices


def test_make_nice_examples():
    nice = make_nice(tree_decomposition(complete_graph(2)))
    leaves = [i for i in range(len(nice.bags)) if not nice.children[i]]
    assert all(len(nice.bags[i]) == 1 for i in leaves)
    nice = make_nice(tree_decomposition(path_graph(3)), {0})
    assert nice.bags[nice.root] == {0} and nice.width == 1
    assert not check_nice(nice)


def test_make_nice_properties(rng):
    for _ in range(50):
        G = rand_graph(rng, rng.randint(1, 8), rng.uniform(0.2, 0.7))
        td = tree_decomposition(G)
        nice = make_nice(td)
        assert not check_nice(nice)
        assert nice.width == td.width
        assert validate_td(G, nice.as_tree_decomposition())
        bag = sorted(td.bags[rng.randrange(len(td.bags))])
        root = set(bag[: rng.randint(1, len(bag))]) if bag else set()
        rooted = make_nice(td, root)
        assert not check_nice(rooted)
        if root:
            assert rooted.bags[rooted.root] == root


def test_make_nice_rejects_unrealisable_root():
    from wlmotif.errors import InvalidDecomposition

    with pytest.raises(InvalidDecomposition):
        make_nice(tree_decomposition(path_graph(3)), {0, 2})
