"""Exact number of self-complementary graphs on ``n`` vertices.

The cycle-index formula for SC graphs: sum over partition vectors ``k`` of ``N``
(``sum(s * k_s) == N``) of ``2**R / prod(s**k_s * k_s!)``, with ``N = n // 4``
and exponent ``R`` for ``n = 4N`` or ``R'`` for ``n = 4N + 1``.  Terms are
exact fractions; only their sum is an integer.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, List, NamedTuple, Tuple

PartitionVector = Tuple[int, ...]


class SCCount(NamedTuple):
    n: int
    value: int


def partitions(N: int) -> Iterator[PartitionVector]:
    """Vectors ``(k_1, ..., k_N)`` with ``sum(s * k_s) == N``, largest parts first."""
    if N < 1:
        raise ValueError("N must be positive")

    def descend(remaining: int, largest: int, k: List[int]) -> Iterator[PartitionVector]:
        if remaining == 0:
            yield tuple(k)
            return
        for s in range(min(remaining, largest), 0, -1):
            k[s - 1] += 1
            yield from descend(remaining - s, s, k)
            k[s - 1] -= 1

    yield from descend(N, N, [0] * N)


def _cross_term(k: PartitionVector) -> int:
    total = 0
    for a in range(len(k)):
        if not k[a]:
            continue
        for b in range(a + 1, len(k)):
            if k[b]:
                total += k[a] * k[b] * math.gcd(a + 1, b + 1)
    return 4 * total


def exponent_R(k: PartitionVector) -> int:
    return 2 * sum(ks * (s * ks - 1) for s, ks in enumerate(k, start=1)) + _cross_term(k)


def exponent_Rprime(k: PartitionVector) -> int:
    return sum(ks * (2 * s * ks - 1) for s, ks in enumerate(k, start=1)) + _cross_term(k)


def term(k: PartitionVector, exponent: int) -> Fraction:
    denom = 1
    for s, ks in enumerate(k, start=1):
        denom *= s**ks * math.factorial(ks)
    return Fraction(1 << exponent, denom)


def sc_count(n: int) -> SCCount:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return SCCount(1, 1)
    if n % 4 in (2, 3):
        return SCCount(n, 0)
    N = n // 4
    exponent = exponent_R if n % 4 == 0 else exponent_Rprime
    total = Fraction(0)
    for k in partitions(N):
        total += term(k, exponent(k))
    assert total.denominator == 1, f"non-integral count for n={n}: {total}"
    return SCCount(n, total.numerator)


def counts_table(max_n: int) -> List[Tuple[int, int, int]]:
    """Rows ``(n, count, digits)`` for every ``n <= max_n`` with SC graphs."""
    if max_n < 1:
        raise ValueError("max_n must be positive")
    rows = []
    for n in range(1, max_n + 1):
        if n == 1 or n % 4 in (0, 1):
            value = sc_count(n).value
            rows.append((n, value, len(str(value))))
    return rows
