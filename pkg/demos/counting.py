"""How many self-complementary graphs are there?

Exact counts from the cycle-index formula, printed in full, plus the
log10 growth curve that the ``count --table`` CLI writes as CSV.
"""

import math

from scgraph import sc_count
from scgraph.sc_count import counts_table

# small cases, small enough to check by hand
for n in (1, 4, 5, 8, 9, 12, 13):
    print(n, sc_count(n).value)

# n = 2, 3 (mod 4) have no SC graphs: the edge count n(n-1)/4 is not an integer
print(6, sc_count(6).value)

# growth is roughly 2**(n**2 / 4) divided by a factorial-ish symmetry term
rows = counts_table(101)
for n, value, digits in rows[-5:]:
    print(f"n={n:3d}  digits={digits:3d}  log10={math.log10(value):.3f}")

# the largest count
n, value, digits = rows[-1]
print(str(value)[:30] + "...", digits, "digits")
