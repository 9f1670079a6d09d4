"""Graphlet and independent-set counts through the homomorphism basis."""

import random

from wlmotif.catalog import random_graph
from wlmotif.motif import clique_coefficient, evaluate_parameter, graphlet_parameter, independent_set_parameter

rng = random.Random(7)
G = random_graph(rng, 9, 0.4)
print(f"random graph: {G.n} vertices, {G.m} edges")
for k in range(2, 5):
    g, s = graphlet_parameter(k), independent_set_parameter(k)
    print(f"  k={k}: {evaluate_parameter(g, G)} connected sets, {evaluate_parameter(s, G)} independent sets,"
          f" clique coefficient {clique_coefficient(g, k)}, support {len(g)}")
