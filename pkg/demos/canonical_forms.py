"""Canonical labels and isomorphism testing.

A canonical form is a relabeling that depends only on the isomorphism class,
so two graphs are isomorphic exactly when their certificates agree.
"""

import random

from scgraph import are_isomorphic, canonical_form, g6_decode, g6_encode
from scgraph.canon import canonical_labeling

p4 = g6_decode("Ch")
print(p4.edges())

rng = random.Random(7)
perm = list(range(4))
rng.shuffle(perm)
q = p4.relabel(perm)
print(q.edges(), canonical_form(p4) == canonical_form(q))

# the labeling itself, and the canonical graph it produces
lab = canonical_labeling(q)
print(lab, canonical_form(q).graph6())

# the 4-vertex graphs fall into 11 classes
from itertools import combinations
from scgraph.graph import Graph

pairs = list(combinations(range(4), 2))
certs = {
    canonical_form(Graph.from_edges(4, [p for k, p in enumerate(pairs) if m >> k & 1]))
    for m in range(1 << len(pairs))
}
print(len(certs), "classes on 4 vertices")

c5 = g6_decode("Dhc")
print(g6_encode(c5), are_isomorphic(c5, c5.relabel([2, 4, 1, 3, 0])))
