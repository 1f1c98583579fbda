"""Weak reconstruction of SC graphs from their decks.

The deck of G is the multiset of its vertex-deleted subgraphs.  For every
pair of SC graphs on n vertices we check that the decks differ.  Cheap
invariants split the listing into classes first; only graphs inside one
class need their decks compared.
"""

import math

from scgraph import build_deck, enumerate_sc, verify_all
from scgraph.deck import level1_key

graphs = enumerate_sc(9)
deck = build_deck(graphs[0])
print(sum(b.count for b in deck.buckets), "cards in", len(deck.buckets), "degree buckets")
print(deck.profile())

key = level1_key(graphs[0])
print(key.ds, key.cp, key.diam)

for mode in ("certificate", "pairwise"):
    report = verify_all(graphs, mode=mode)
    print(mode, report.verified, len(report.classes), "classes")

# how much the invariant classes save at n = 12
report = verify_all(enumerate_sc(12), mode="pairwise")
print("all pairs     ", math.comb(report.graph_count, 2))
print("same class    ", report.level1_pairs)
print("iso checks    ", report.iso_checks, "<=", report.level2_bound)
for cls in sorted(report.classes, key=lambda c: -c.size)[:5]:
    print(cls.size, cls.diameter, cls.char_poly)

import json
print(sorted(json.loads(report.to_json(timing=False))))
