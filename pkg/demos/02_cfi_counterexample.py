"""Build two graphs that (tw(F) - 1)-WL confuses yet which disagree on homs from F.

The pair is a CFI product of F's widest component and its twisted copy, each
joined with an anchor that receives every small labeled graph.
"""

import sys

from wlmotif import complete_graph, cycle_graph
from wlmotif.cfi import counterexample_pair, find_weak_oddomorphism, hom_gap
from wlmotif.wl import wl_equivalent

for F in (complete_graph(3), cycle_graph(5), complete_graph(4)):
    pair = counterexample_pair(F)
    left, right = hom_gap(F, pair)
    eq = wl_equivalent(pair.left, pair.right, pair.k)
    print(f"F with {F.n} vertices and {F.m} edges, k = {pair.k}")
    print(f"  graphs of size {pair.left.n}; {pair.k}-WL equivalent: {eq}")
    print(f"  hom counts {left} vs {right}")
    w = find_weak_oddomorphism(F, pair.component)
    print(f"  oddomorphism witness on {len(w.vertices)} vertices and {len(w.edges)} edges")
    if not eq or left == right:
        sys.exit("unexpected result")
