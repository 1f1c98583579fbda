"""Building every SC graph on a few vertices.

Each SC graph has an antimorphism sigma (a relabeling that sends it to its
complement).  Fix sigma, and the graph is pinned down by one bit per orbit of
sigma on vertex pairs.  Canonical forms then remove the isomorphic repeats.
"""

from scgraph import enumerate_sc, g6_encode, is_self_complementary, sc_count
from scgraph.graph import complement, degree_sequence, diameter
from scgraph.sc_enum import antimorphism_cycle_types, pair_orbits, representative_permutation

n = 8
for ct in antimorphism_cycle_types(n):
    sigma = representative_permutation(ct)
    print(ct, sigma, len(pair_orbits(sigma)), "pair orbits")

graphs = enumerate_sc(n)
print(len(graphs), "classes, formula says", sc_count(n).value)

for g in graphs:
    # every one is its own complement up to relabeling
    assert is_self_complementary(g)
    print(g6_encode(g), g.num_edges(), degree_sequence(g), diameter(g))

# complementing gives a different labeled graph but the same class
g = graphs[0]
print(g == complement(g), is_self_complementary(complement(g)))
