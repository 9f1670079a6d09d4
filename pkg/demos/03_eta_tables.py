"""Hom counts are constant on WL colour classes.

C6 and two triangles look identical to 1-WL, so the number of edge
homomorphisms through each coloured vertex is the same in both.
"""

from wlmotif import complete_graph, cycle_graph, disjoint_union, path_graph
from wlmotif.homcount import build_eta_table, eta_sum, evaluate_theta
from wlmotif.motif import ind_to_hom, sub_to_hom
from wlmotif.wl import ColorRegistry, refine_jointly

graphs = [cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))]
reg = ColorRegistry(1)
colorings, rounds = refine_jointly(graphs, 1, reg)
eta = build_eta_table(complete_graph(2), (0,), graphs, 1, reg, colorings)
print(f"stable after {rounds} rounds")
for color, count in eta.table.items():
    print(f"  colour {reg.fingerprint(color)}: {count} homs extend each vertex")
print("totals:", [eta_sum(eta, c) for c in colorings])

print("\nmotif counts read off colour tables")
print("  subgraph P3 in K3:", evaluate_theta(sub_to_hom(path_graph(3)), complete_graph(3), 1))
print("  induced K3 in K4:", evaluate_theta(ind_to_hom(complete_graph(3)), complete_graph(4), 2))
