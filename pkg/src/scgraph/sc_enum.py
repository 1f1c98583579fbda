"""Self-complementary graphs from complementing permutations.

A permutation ``sigma`` with ``sigma(G) = complement(G)`` forces every
``sigma``-orbit of vertex pairs to alternate edge / non-edge, so a graph with
that antimorphism is fixed by one parity bit per pair orbit.  Such
permutations have every cycle length divisible by 4 plus at most one fixed
point, and conjugate permutations give relabeled families, so one block-form
representative per cycle type covers every SC graph.

The families are large (``2**21`` labeled graphs for ``n = 13``) but carry the
symmetry of the centralizer of ``sigma``: a commuting permutation maps a
family member to another member, acting on the parity bits as a signed bit
permutation.  :func:`enumerate_sc` only canonicalizes assignment vectors that
no listed centralizer element makes smaller, which keeps the minimum of every
centralizer orbit and so loses no isomorphism class.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .canon import CanonicalCertificate, canonical_form
from .graph import Graph, complement

CycleType = Tuple[int, ...]
Permutation = Tuple[int, ...]

# Largest centralizer used in full; bigger ones are cut to this many elements.
CENTRALIZER_LIMIT = 4096
_CHUNK = 1 << 20


@dataclass(frozen=True)
class PairOrbit:
    """Vertex pairs ``pairs[i+1] = sigma(pairs[i])``, starting at the smallest."""

    pairs: Tuple[Tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)


def antimorphism_cycle_types(n: int) -> List[CycleType]:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return [(1,)]
    if n % 4 in (2, 3):
        return []
    tail = (1,) if n % 4 == 1 else ()

    def parts(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
        if total == 0:
            yield ()
            return
        for p in range(min(total, largest), 3, -1):
            if p % 4 == 0:
                for rest in parts(total - p, p):
                    yield (p,) + rest

    return [p + tail for p in parts(n - len(tail), n)]


def representative_permutation(ct: Sequence[int]) -> Permutation:
    sigma = []
    start = 0
    for length in ct:
        sigma.extend(start + (i + 1) % length for i in range(length))
        start += length
    return tuple(sigma)


def cycles(sigma: Sequence[int]) -> List[List[int]]:
    seen = [False] * len(sigma)
    out = []
    for v in range(len(sigma)):
        if seen[v]:
            continue
        cyc = []
        w = v
        while not seen[w]:
            seen[w] = True
            cyc.append(w)
            w = sigma[w]
        out.append(cyc)
    return out


def _pair(a: int, b: int) -> Tuple[int, int]:
    return (a, b) if a < b else (b, a)


def pair_orbits(sigma: Sequence[int]) -> List[PairOrbit]:
    n = len(sigma)
    seen = set()
    orbits = []
    for p in itertools.combinations(range(n), 2):
        if p in seen:
            continue
        seq = []
        q = p
        while q not in seen:
            seen.add(q)
            seq.append(q)
            q = _pair(sigma[q[0]], sigma[q[1]])
        assert len(seq) % 2 == 0, f"odd pair orbit {seq}; sigma is not an antimorphism type"
        orbits.append(PairOrbit(tuple(seq)))
    return orbits


def _orbit_rows(n: int, orbits: Sequence[PairOrbit]) -> List[Tuple[List[int], List[int]]]:
    # Per orbit, adjacency rows contributed when the even / odd positions are edges.
    out = []
    for orb in orbits:
        parity_rows = ([0] * n, [0] * n)
        for t, (a, b) in enumerate(orb.pairs):
            rows = parity_rows[t & 1]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        out.append(parity_rows)
    return out


def _assemble(n: int, orbit_rows, x: int) -> Graph:
    rows = [0] * n
    for k, parity_rows in enumerate(orbit_rows):
        src = parity_rows[x >> k & 1]
        for v in range(n):
            rows[v] |= src[v]
    return Graph._trusted(n, tuple(rows))


def graphs_for_permutation(sigma: Sequence[int]) -> Iterator[Graph]:
    """All ``2**len(pair_orbits(sigma))`` graphs with antimorphism ``sigma``.

    Bit ``k`` of the assignment picks the odd positions of orbit ``k`` as
    edges; assignments are yielded in increasing order.
    """
    n = len(sigma)
    orbit_rows = _orbit_rows(n, pair_orbits(sigma))
    for x in range(1 << len(orbit_rows)):
        yield _assemble(n, orbit_rows, x)


def centralizer(sigma: Sequence[int], limit: int = CENTRALIZER_LIMIT) -> List[Permutation]:
    """Permutations commuting with ``sigma``, at most ``limit`` of them.

    Elements permute equal-length cycles and rotate each cycle independently.
    Order is deterministic, generators first, so a truncated list still
    generates the whole group.
    """
    cyc = cycles(sigma)
    by_len: dict[int, List[int]] = {}
    for idx, c in enumerate(cyc):
        by_len.setdefault(len(c), []).append(idx)
    n = len(sigma)

    def build(assign: dict) -> Permutation:
        pi = [0] * n
        for c_idx, (d_idx, rot) in assign.items():
            src, dst = cyc[c_idx], cyc[d_idx]
            L = len(src)
            for t, v in enumerate(src):
                pi[v] = dst[(t + rot) % L]
        return tuple(pi)

    identity = {i: (i, 0) for i in range(len(cyc))}
    gens = []
    for i, c in enumerate(cyc):
        if len(c) > 1:
            gens.append(build({**identity, i: (i, 1)}))
    for idxs in by_len.values():
        for a, b in zip(idxs, idxs[1:]):
            gens.append(build({**identity, a: (b, 0), b: (a, 0)}))

    per_len = []
    for L, idxs in sorted(by_len.items()):
        options = (
            {c: (d, r) for c, d, r in zip(idxs, perm, rots)}
            for perm in itertools.permutations(idxs)
            for rots in itertools.product(range(L), repeat=len(idxs))
        )
        per_len.append(list(options))
    elems = []
    for combo in itertools.product(*per_len):
        assign: dict = {}
        for part in combo:
            assign.update(part)
        elems.append(build(assign))
        if len(elems) > limit + len(gens):
            break
    return _dedupe(gens + [tuple(sigma)] + elems)[:limit]


def _dedupe(perms: List[Permutation]) -> List[Permutation]:
    out = []
    seen = set()
    for p in perms:
        if p not in seen and p != tuple(range(len(p))):
            seen.add(p)
            out.append(p)
    return out


def _signed_bit_maps(orbits: Sequence[PairOrbit], perms: Sequence[Permutation]):
    """Each commuting permutation as (destination bit, flip) per source bit."""
    where = {}
    for k, orb in enumerate(orbits):
        for t, p in enumerate(orb.pairs):
            where[p] = (k, t & 1)
    maps = []
    for pi in perms:
        m = []
        for orb in orbits:
            a, b = orb.pairs[0]
            k2, t2 = where[_pair(pi[a], pi[b])]
            m.append((k2, t2))
        maps.append(m)
    return maps


def _lookup_tables(bit_map, nbits: int):
    # Split the assignment into bytes; one 256-entry table per byte.
    tables = []
    flip = 0
    for src, (dst, f) in enumerate(bit_map):
        flip |= f << dst
    for base in range(0, nbits, 8):
        width = min(8, nbits - base)
        idx = np.arange(1 << width, dtype=np.int64)
        table = np.zeros(1 << width, dtype=np.int64)
        for off in range(width):
            dst = bit_map[base + off][0]
            table |= ((idx >> off) & 1) << dst
        tables.append((base, width, table))
    return tables, flip


def _apply(tables, flip: int, x: np.ndarray) -> np.ndarray:
    y = np.full(x.shape, flip, dtype=np.int64)
    for base, width, table in tables:
        y ^= table[(x >> base) & ((1 << width) - 1)]
    return y


def candidate_assignments(sigma: Sequence[int]) -> List[int]:
    """Assignment vectors not beaten by any listed centralizer element.

    Contains the minimum of every centralizer orbit, hence a member of every
    isomorphism class realized by ``sigma``'s family.
    """
    orbits = pair_orbits(sigma)
    k = len(orbits)
    transforms = [_lookup_tables(m, k) for m in _signed_bit_maps(orbits, centralizer(sigma))]
    if k > 62:
        raise ValueError(f"{k} pair orbits is beyond this enumerator")
    out: List[int] = []
    total = 1 << k
    for start in range(0, total, _CHUNK):
        x = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        for tables, flip in transforms:
            x = x[_apply(tables, flip, x) >= x]
            if not len(x):
                break
        out.extend(int(v) for v in x)
    return out


def _certificates(args) -> List[CanonicalCertificate]:
    sigma, xs = args
    n = len(sigma)
    orbit_rows = _orbit_rows(n, pair_orbits(sigma))
    return [canonical_form(_assemble(n, orbit_rows, x)) for x in xs]


def sc_certificates(n: int, workers: int = 1) -> List[CanonicalCertificate]:
    """Sorted canonical certificates of all SC graphs on ``n`` vertices."""
    jobs = []
    for ct in antimorphism_cycle_types(n):
        sigma = representative_permutation(ct)
        xs = candidate_assignments(sigma)
        step = max(1, math.ceil(len(xs) / (4 * workers)))
        jobs.extend((sigma, xs[i : i + step]) for i in range(0, len(xs), step))
    found = set()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for certs in pool.map(_certificates, jobs):
                found.update(certs)
    else:
        for job in jobs:
            found.update(_certificates(job))
    return sorted(found)


def enumerate_sc(n: int, workers: int = 1) -> List[Graph]:
    """One graph per isomorphism class of SC graphs on ``n`` vertices.

    The graphs are the canonical forms, sorted by certificate; ``n`` congruent
    to 2 or 3 mod 4 gives an empty list.
    """
    return [c.to_graph() for c in sc_certificates(n, workers)]


def is_self_complementary(g: Graph) -> bool:
    if 4 * g.num_edges() != g.n * (g.n - 1):
        return False
    return canonical_form(g) == canonical_form(complement(g))
