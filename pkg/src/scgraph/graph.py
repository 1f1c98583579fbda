"""Labeled simple graphs stored as adjacency bitrows, and their invariants.

A :class:`Graph` keeps one Python ``int`` per vertex; bit ``j`` of row ``i`` is
set when ``i`` and ``j`` are adjacent.  Everything here is an immutable value,
so graphs can be hashed, cached and shipped to worker processes freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

MAX_VERTICES = 64

DegreeSequence = Tuple[int, ...]
Diameter = Union[int, float]

#: Diameter of a disconnected graph.
INFINITE: float = math.inf


@dataclass(frozen=True, slots=True)
class Graph:
    """A labeled simple graph on vertices ``0..n-1``.

    ``rows[i]`` is the neighbourhood of ``i`` as a bitmask.  Construction
    validates symmetry, irreflexivity and that no bit at position ``>= n`` is
    set; use :meth:`from_edges` when building graphs by hand.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
        if len(self.rows) != n:
            raise ValueError(f"expected {n} rows, got {len(self.rows)}")
        full = (1 << n) - 1
        for i, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {i} has bits outside 0..{n - 1}")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
                r ^= low

    @classmethod
    def _trusted(cls, n: int, rows: Tuple[int, ...]) -> "Graph":
        # Skips validation; callers must guarantee a valid adjacency.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << i) for i in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[Tuple[int, int]]:
        out = []
        for i, row in enumerate(self.rows):
            r = row >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    out.append((i, j))
                r >>= 1
                j += 1
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        rows = [0] * n
        for v, row in enumerate(self.rows):
            image = 0
            r = row
            while r:
                low = r & -r
                image |= 1 << perm[low.bit_length() - 1]
                r ^= low
            rows[perm[v]] = image
        return Graph._trusted(n, tuple(rows))

    def adjacency_matrix(self) -> np.ndarray:
        n = self.n
        a = np.zeros((n, n), dtype=np.int64)
        for i, row in enumerate(self.rows):
            for j in range(n):
                if row >> j & 1:
                    a[i, j] = 1
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, tuple(full ^ row ^ (1 << i) for i, row in enumerate(g.rows)))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above it shift down by one."""
    n = g.n
    if n < 2:
        raise ValueError("cannot delete a vertex from a one-vertex graph")
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for n={n}")
    low_mask = (1 << v) - 1
    rows = []
    for i, row in enumerate(g.rows):
        if i != v:
            rows.append((row & low_mask) | ((row >> (v + 1)) << v))
    return Graph._trusted(n - 1, tuple(rows))


def degree_sequence(g: Graph) -> DegreeSequence:
    return tuple(sorted((r.bit_count() for r in g.rows), reverse=True))


def diameter(g: Graph) -> Diameter:
    """Largest BFS distance over all vertex pairs, ``INFINITE`` if disconnected."""
    n = g.n
    rows = g.rows
    full = (1 << n) - 1
    best = 0
    for s in range(n):
        seen = frontier = 1 << s
        depth = 0
        while seen != full:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                return INFINITE
            seen |= nxt
            frontier = nxt
            depth += 1
        if depth > best:
            best = depth
    return best


@dataclass(frozen=True, slots=True)
class CharPoly:
    """Monic integer polynomial ``det(xI - A)``, highest power first."""

    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        d = self.degree
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = d - i
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if p == 1 else f"x^{p}")
            sign = "-" if c < 0 else "+"
            terms.append(body if not terms and sign == "+" else sign + body)
        return "".join(terms) or "0"


@lru_cache(maxsize=None)
def _int64_safe(n: int) -> bool:
    # |c_{n-j}| <= C(n,j) * j^(j/2) (Hadamard on principal minors) and walk
    # counts are <= (n-1)^m, so every Faddeev-LeVerrier intermediate, including
    # matmul partial sums and traces, is below n * bound.
    bound = sum(
        math.comb(n, j) * (math.isqrt(j**j) + 1) * (n - 1) ** (n - j) for j in range(n + 1)
    )
    return n * n * bound < 2**63


def char_poly(g: Graph) -> CharPoly:
    """Characteristic polynomial by Faddeev-LeVerrier in exact integers."""
    n = g.n
    dtype = np.int64 if _int64_safe(n) else object
    a = g.adjacency_matrix().astype(dtype)
    eye = np.eye(n, dtype=np.int64).astype(dtype)
    # coeffs[k] is the coefficient of x^(n-k)
    coeffs = [1] + [0] * n
    m = np.zeros((n, n), dtype=dtype)
    for k in range(1, n + 1):
        m = a @ m + eye * coeffs[k - 1]
        tr = int(np.trace(a @ m))
        q, r = divmod(-tr, k)
        assert r == 0, f"inexact Faddeev-LeVerrier division at step {k}"
        coeffs[k] = q
    return CharPoly(tuple(coeffs))
