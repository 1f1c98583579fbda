"""Canonical labeling by equitable refinement and individualization.

The search tree is the usual one: refine the unit partition to an equitable
one, pick a target cell, individualize each of its vertices in turn and
recurse.  Every leaf is a discrete partition, read as a vertex ordering, and
the leaf whose relabeled upper triangle is lexicographically smallest wins.

Two sound prunings keep highly symmetric graphs tractable.  Whenever two
leaves give the same relabeled graph, the map between them is an
automorphism; it is stored, and children in the same orbit of the stored
automorphisms that fix the current node pointwise are skipped.  If the
automorphism also carries the earlier leaf's path onto the current path, the
whole current subtree is an image of an explored one and is abandoned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .graph import Graph, degree_sequence

OrderedPartition = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, order=True, slots=True)
class CanonicalCertificate:
    """Isomorphism-class key: vertex count plus packed canonical upper triangle.

    ``bits`` is the graph6 body of the canonical relabeling, so byte order
    agrees with bit-string order and the certificate decodes back to a graph.
    """

    n: int
    bits: bytes

    def graph6(self) -> str:
        from .graph6 import _encode_size

        return _encode_size(self.n) + self.bits.decode("ascii")

    def to_graph(self) -> Graph:
        from .graph6 import g6_decode

        return g6_decode(self.graph6())


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(rows: Sequence[int], cells: List[List[int]], queue: deque) -> List[List[int]]:
    # Splits cells in place (list-wise) until equitable w.r.t. every queued mask.
    while queue:
        w = queue.popleft()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = [(rows[v] & w).bit_count() for v in cell]
            c0 = counts[0]
            if all(c == c0 for c in counts):
                i += 1
                continue
            groups: dict[int, List[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            pieces = [groups[c] for c in sorted(groups)]
            cells[i : i + 1] = pieces
            for piece in pieces:
                queue.append(_mask(piece))
            i += len(pieces)
    return cells


def refine(g: Graph, p: Sequence[Sequence[int]]) -> OrderedPartition:
    """Coarsest equitable refinement of ``p``.

    Cells split by neighbour count into the splitting cell, smaller counts
    first; sub-cells keep the position of the cell they came from.
    """
    cells = [sorted(c) for c in p]
    seen = sorted(v for c in cells for v in c)
    if seen != list(range(g.n)) or any(not c for c in cells):
        raise ValueError("p is not an ordered partition of the vertex set")
    queue = deque(_mask(c) for c in cells)
    return tuple(tuple(c) for c in _refine(g.rows, cells, queue))


class _Search:
    __slots__ = ("rows", "n", "best", "first", "auts", "_orbit_cache")

    def __init__(self, rows: Tuple[int, ...]):
        self.rows = rows
        self.n = len(rows)
        self.best: Optional[tuple] = None  # (key, lab, seq)
        self.first: Optional[tuple] = None
        self.auts: List[Tuple[int, ...]] = []
        self._orbit_cache: dict = {}

    def leaf_key(self, lab: Sequence[int]) -> int:
        rows = self.rows
        key = 0
        for j in range(1, self.n):
            rj = rows[lab[j]]
            for i in range(j):
                key = key << 1 | (rj >> lab[i] & 1)
        return key

    def orbit_roots(self, seq: Tuple[int, ...]) -> List[int]:
        # Union-find over automorphisms that fix seq pointwise.
        cache_key = (seq, len(self.auts))
        hit = self._orbit_cache.get(cache_key)
        if hit is not None:
            return hit
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.auts:
            if any(gamma[v] != v for v in seq):
                continue
            for v, w in enumerate(gamma):
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        roots = [find(v) for v in range(self.n)]
        self._orbit_cache[cache_key] = roots
        return roots

    def leaf(self, cells: List[List[int]], seq: Tuple[int, ...]) -> Optional[int]:
        lab = [c[0] for c in cells]
        key = self.leaf_key(lab)
        if self.first is None:
            self.first = self.best = (key, lab, seq)
            return None
        jump = None
        for ref_key, ref_lab, ref_seq in (self.first, self.best):
            if key != ref_key:
                continue
            gamma = [0] * self.n
            for a, b in zip(ref_lab, lab):
                gamma[a] = b
            gamma_t = tuple(gamma)
            if gamma_t not in self.auts:
                self.auts.append(gamma_t)
            level = 0
            while level < len(seq) and level < len(ref_seq) and seq[level] == ref_seq[level]:
                level += 1
            # gamma must fix the shared prefix and map the earlier branch onto ours.
            if level < len(seq) and level < len(ref_seq) and all(
                gamma[ref_seq[i]] == seq[i] for i in range(level + 1)
            ):
                jump = level if jump is None else min(jump, level)
        if jump is None and key < self.best[0]:
            self.best = (key, lab, seq)
        return jump

    def search(self, cells: List[List[int]], seq: Tuple[int, ...]) -> Optional[int]:
        target = -1
        size = self.n + 1
        for idx, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = idx, len(cell)
                if size == 2:
                    break
        if target < 0:
            return self.leaf(cells, seq)
        depth = len(seq)
        cell = cells[target]
        explored_roots: set = set()
        for v in cell:
            roots = self.orbit_roots(seq)
            if roots[v] in explored_roots:
                continue
            explored_roots.add(roots[v])
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + [list(c) for c in cells[target + 1 :]]
            _refine(self.rows, child, deque([1 << v]))
            jump = self.search(child, seq + (v,))
            if jump is not None and jump < depth:
                return jump
            # Stored automorphisms may have merged orbits of explored children.
            roots = self.orbit_roots(seq)
            explored_roots = {roots[r] for r in explored_roots}
        return None


def canonical_labeling(g: Graph) -> Tuple[int, ...]:
    """Vertex order of the canonical form: position ``i`` holds the old vertex."""
    return _canonical(g)[1]


@lru_cache(maxsize=1 << 17)
def _canonical(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    n = g.n
    if n == 1:
        return 0, (0,)
    cells = _refine(g.rows, [list(range(n))], deque([(1 << n) - 1]))
    s = _Search(g.rows)
    s.search(cells, ())
    key, lab, _ = s.best
    return key, tuple(lab)


def _pack_key(key: int, n: int) -> bytes:
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    key <<= nchars * 6 - nbits
    return bytes(63 + (key >> (6 * (nchars - 1 - k)) & 63) for k in range(nchars))


def canonical_form(g: Graph) -> CanonicalCertificate:
    key, _ = _canonical(g)
    return CanonicalCertificate(g.n, _pack_key(key, g.n))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    if degree_sequence(g1) != degree_sequence(g2):
        return False
    return _canonical(g1)[0] == _canonical(g2)[0]
