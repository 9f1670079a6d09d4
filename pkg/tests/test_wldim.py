from conftest import rand_graph
from wlmotif.graph import complete_graph, cycle_graph, empty_graph, path_graph
from wlmotif.motif import MotifParameter, sub_to_hom
from wlmotif.treewidth import exact_treewidth
from wlmotif.wldim import (
    hereditary_treewidth,
    wl_dimension_graphlet,
    wl_dimension_ind,
    wl_dimension_parameter,
    wl_dimension_sub,
)


def test_parameter_dimension_examples():
    assert wl_dimension_parameter(sub_to_hom(complete_graph(2))).dimension == 1
    from wlmotif.motif import ind_to_hom

    assert wl_dimension_parameter(ind_to_hom(empty_graph(3))).dimension == 2
    assert wl_dimension_parameter(MotifParameter.from_terms([(cycle_graph(5), 1)])).dimension == 2


def test_dimension_floor_is_one():
    rep = wl_dimension_parameter(MotifParameter.from_terms([(empty_graph(1), 1)]))
    assert rep.dimension == 1
    assert wl_dimension_parameter(MotifParameter()).dimension == 1


def test_sub_dimension_examples():
    assert wl_dimension_sub(cycle_graph(7)).dimension == 2
    assert wl_dimension_sub(cycle_graph(8)).dimension == 3
    rep = wl_dimension_sub(path_graph(4))
    assert rep.dimension == 2 and (rep.witness.n, rep.witness.m) == (3, 3)


def test_seven_edge_path_reaches_k4():
    # the walk a-b-c-a-d-b-c-d covers every edge of K4 with 7 steps
    P8 = path_graph(8)
    walk = [0, 1, 2, 0, 3, 1, 2, 3]
    phi = dict(enumerate(walk))
    assert all(complete_graph(4).has_edge(phi[u], phi[v]) for u, v in P8.edges)
    assert hereditary_treewidth(P8) == 3
    assert hereditary_treewidth(path_graph(7)) == 2


def test_ind_dimension_examples():
    assert wl_dimension_ind(complete_graph(3)).dimension == 2
    assert wl_dimension_ind(cycle_graph(5)).dimension == 4
    assert wl_dimension_ind(complete_graph(2)).dimension == 1
    assert wl_dimension_ind(path_graph(4), cross_check=True).dimension == 3


def test_hereditary_treewidth_examples_and_monotonicity(rng):
    assert hereditary_treewidth(path_graph(3)) == 1
    assert hereditary_treewidth(cycle_graph(7)) == 2
    assert hereditary_treewidth(complete_graph(4)) == 3
    for _ in range(15):
        H = rand_graph(rng, rng.randint(1, 7), 0.4, "ab", "xy")
        assert hereditary_treewidth(H) >= exact_treewidth(H)


def test_graphlet_dimensions():
    for k in (2, 3, 4, 5):
        rep = wl_dimension_graphlet(k)
        assert rep.dimension == k - 1
        if k > 2:
            assert rep.witness.m == k * (k - 1) // 2


def test_sub_dimension_matches_parameter_route(rng):
    for _ in range(20):
        H = rand_graph(rng, rng.randint(1, 6), 0.5, "ab", "xy")
        assert wl_dimension_sub(H).dimension == wl_dimension_parameter(sub_to_hom(H)).dimension


def test_ind_formula_matches_parameter_route_small():
    from wlmotif.catalog import all_graphs

    for n in range(1, 5):
        for H in all_graphs(n):
            assert wl_dimension_ind(H, cross_check=True).dimension == max(1, n - 1)
