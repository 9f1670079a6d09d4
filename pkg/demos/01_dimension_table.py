"""How many WL dimensions does it take to count paths, cycles and graphlets?

Each row expands the subgraph count into homomorphism counts and reports the
largest treewidth in that expansion together with a pattern attaining it.
"""

from wlmotif import complete_graph, cycle_graph, path_graph
from wlmotif.wldim import wl_dimension_graphlet, wl_dimension_ind, wl_dimension_sub


def shape(G):
    return f"{G.n} vertices, {G.m} edges"


print("subgraph counts")
for name, H in [*((f"path, {m} edge{'s' * (m > 1)}", path_graph(m + 1)) for m in range(1, 9)),
                *((f"cycle C{n}", cycle_graph(n)) for n in range(3, 9))]:
    rep = wl_dimension_sub(H)
    print(f"  {name:16s} dimension {rep.dimension}  (support {rep.support_size}, witness {shape(rep.witness)})")

# A 7-edge path folds onto K4 along the walk a-b-c-a-d-b-c-d.
print("\ninduced counts need one dimension fewer than the pattern has vertices")
for H in (complete_graph(3), path_graph(4), cycle_graph(5)):
    print(f"  {shape(H):24s} dimension {wl_dimension_ind(H).dimension}")

print("\nconnected k-vertex graphlets")
for k in range(2, 6):
    rep = wl_dimension_graphlet(k)
    print(f"  k={k}: dimension {rep.dimension}, support {rep.support_size}")
