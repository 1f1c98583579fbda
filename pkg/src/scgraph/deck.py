"""Decks, pruning classes and the weak-reconstruction check.

A deck is stored as cards grouped into buckets by degree sequence, each with
its count.  Graphs are first split into classes by (degree sequence,
characteristic polynomial, diameter); all three are reconstructible from the
deck of an SC graph, so two graphs in different classes can never share a
deck.  Within a class, a pair of decks is rejected outright when their bucket
profiles differ, and otherwise cards are matched bucket by bucket.
"""

from __future__ import annotations

import hashlib
import json
import math
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .canon import CanonicalCertificate, are_isomorphic, canonical_form
from .graph import (
    INFINITE,
    CharPoly,
    DegreeSequence,
    Diameter,
    Graph,
    char_poly,
    degree_sequence,
    delete_vertex,
    diameter,
)
from .graph6 import g6_encode

MODES = ("certificate", "pairwise")

DeckCertificate = Tuple[CanonicalCertificate, ...]


class DuplicateGraphError(ValueError):
    """Two entries of a listing are isomorphic; indices are 0-based."""

    def __init__(self, first: int, second: int):
        super().__init__(f"entries {first} and {second} are isomorphic")
        self.first = first
        self.second = second


@dataclass(frozen=True)
class Card:
    graph: Graph
    ds: DegreeSequence


@dataclass(frozen=True)
class DegreeBucket:
    ds: DegreeSequence
    cards: Tuple[Card, ...]

    @property
    def count(self) -> int:
        return len(self.cards)


@dataclass(frozen=True)
class Deck:
    owner_n: int
    buckets: Tuple[DegreeBucket, ...]

    def profile(self) -> Tuple[Tuple[DegreeSequence, int], ...]:
        return tuple((b.ds, b.count) for b in self.buckets)


def build_deck(g: Graph) -> Deck:
    if g.n < 2:
        raise ValueError("decks need at least two vertices")
    groups: Dict[DegreeSequence, List[Card]] = defaultdict(list)
    for v in range(g.n):
        card = delete_vertex(g, v)
        ds = degree_sequence(card)
        groups[ds].append(Card(card, ds))
    buckets = tuple(DegreeBucket(ds, tuple(groups[ds])) for ds in sorted(groups, reverse=True))
    return Deck(g.n, buckets)


class ClassKey(NamedTuple):
    ds: DegreeSequence
    cp: CharPoly
    diam: Diameter

    def sort_key(self):
        return (self.ds, self.cp.coeffs, self.diam)

    def digest(self) -> str:
        text = f"{list(self.ds)}|{list(self.cp.coeffs)}|{_diam_text(self.diam)}"
        return hashlib.sha256(text.encode()).hexdigest()[:16]


def _diam_text(d: Diameter) -> str:
    return "inf" if d == INFINITE else str(d)


def level1_key(g: Graph) -> ClassKey:
    return ClassKey(degree_sequence(g), char_poly(g), diameter(g))


def partition_classes(graphs: Sequence[Graph]) -> Dict[ClassKey, List[Graph]]:
    """Group graphs by :func:`level1_key`; keys come out sorted, members keep input order."""
    groups: Dict[ClassKey, List[Graph]] = defaultdict(list)
    for g in graphs:
        groups[level1_key(g)].append(g)
    return {k: groups[k] for k in sorted(groups, key=ClassKey.sort_key)}


def deck_signature(g: Graph) -> DeckCertificate:
    if g.n < 2:
        raise ValueError("decks need at least two vertices")
    return tuple(sorted(canonical_form(delete_vertex(g, v)) for v in range(g.n)))


def level2_bound(d1: Deck, d2: Deck) -> int:
    """Worst-case card comparisons: sum of C(m_i + 1, 2) over shared buckets."""
    counts2 = {b.ds: b.count for b in d2.buckets}
    total = 0
    for b in d1.buckets:
        if b.ds in counts2:
            m = min(b.count, counts2[b.ds])
            total += math.comb(m + 1, 2)
    return total


def decks_isomorphic_pairwise(d1: Deck, d2: Deck) -> Tuple[bool, int]:
    """Whether two decks are equal as multisets of unlabeled cards.

    Returns the verdict and the number of card isomorphism tests spent.  Each
    card of ``d2`` is matched against the still-unmatched cards of the same
    bucket in ``d1``, so a bucket of ``m`` cards costs at most C(m + 1, 2) tests.
    """
    if d1.owner_n != d2.owner_n:
        raise ValueError("decks of different orders")
    if d1.profile() != d2.profile():
        return False, 0
    checks = 0
    for b1, b2 in zip(d1.buckets, d2.buckets):
        unmatched = [c.graph for c in b1.cards]
        for card in b2.cards:
            for idx, cand in enumerate(unmatched):
                checks += 1
                if are_isomorphic(cand, card.graph):
                    del unmatched[idx]
                    break
            else:
                return False, checks
    return True, checks


@dataclass
class ClassStats:
    key: str
    degree_sequence: List[int]
    char_poly: str
    diameter: str
    size: int
    naive_pairs: int
    pairs_compared: int = 0
    level2_pruned: int = 0
    iso_checks: int = 0
    level2_bound: int = 0
    members: List[str] = field(default_factory=list)


@dataclass
class VerificationReport:
    """Outcome of :func:`verify_all`; ``collisions`` empty means verified."""

    n: int
    graph_count: int
    mode: str
    total_pairs: int
    level1_pairs: int
    naive_iso_bound: int
    iso_checks: int
    level2_bound: int
    bound_violations: int
    classes: List[ClassStats]
    collisions: List[Tuple[str, str]]
    wall_time: Optional[float] = None

    @property
    def verified(self) -> bool:
        return not self.collisions

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["collisions"] = [list(p) for p in self.collisions]
        d["verified"] = self.verified
        if not timing:
            d["wall_time"] = None
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True) + "\n"

    def collision_set(self) -> set:
        return {tuple(sorted(p)) for p in self.collisions}

    def memberships(self) -> Dict[str, List[str]]:
        return {c.key: c.members for c in self.classes}


def _check_listing(graphs: Sequence[Graph]) -> List[CanonicalCertificate]:
    if not graphs:
        return []
    n = graphs[0].n
    for i, g in enumerate(graphs):
        if g.n != n:
            raise ValueError(f"entry {i} has {g.n} vertices, expected {n}")
    if n < 2:
        raise ValueError("verification needs graphs on at least two vertices")
    certs = [canonical_form(g) for g in graphs]
    first_seen: Dict[CanonicalCertificate, int] = {}
    for i, c in enumerate(certs):
        if c in first_seen:
            raise DuplicateGraphError(first_seen[c], i)
        first_seen[c] = i
    return certs


def _pairwise_class(members: List[Graph]):
    decks = [build_deck(g) for g in members]
    stats = {"pairs_compared": 0, "level2_pruned": 0, "iso_checks": 0, "level2_bound": 0,
             "violations": 0}
    collisions = []
    for i, j in combinations(range(len(members)), 2):
        stats["pairs_compared"] += 1
        same, checks = decks_isomorphic_pairwise(decks[i], decks[j])
        bound = level2_bound(decks[i], decks[j])
        if decks[i].profile() != decks[j].profile():
            stats["level2_pruned"] += 1
        stats["iso_checks"] += checks
        stats["level2_bound"] += bound
        stats["violations"] += checks > bound
        if same:
            collisions.append((i, j))
    return stats, collisions


def _signatures(graphs: Sequence[Graph]) -> List[DeckCertificate]:
    return [deck_signature(g) for g in graphs]


def _chunks(seq: Sequence, parts: int) -> List[Sequence]:
    step = max(1, math.ceil(len(seq) / parts))
    return [seq[i : i + step] for i in range(0, len(seq), step)]


def verify_all(graphs: Sequence[Graph], mode: str = "certificate", workers: int = 1) -> VerificationReport:
    """Look for two graphs in the listing with isomorphic decks.

    ``pairwise`` compares every pair inside each level-1 class with
    :func:`decks_isomorphic_pairwise`.  ``certificate`` hashes
    :func:`deck_signature` for every graph and only confirms signature
    collisions pairwise.  The report is identical for any ``workers``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    start = time.perf_counter()
    graphs = list(graphs)
    _check_listing(graphs)
    n = graphs[0].n if graphs else 0
    index = {g: i for i, g in enumerate(graphs)}
    classes = partition_classes(graphs)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        class_stats: List[ClassStats] = []
        collisions: List[Tuple[int, int]] = []
        for key, members in classes.items():
            class_stats.append(
                ClassStats(
                    key=key.digest(),
                    degree_sequence=list(key.ds),
                    char_poly=str(key.cp),
                    diameter=_diam_text(key.diam),
                    size=len(members),
                    naive_pairs=math.comb(len(members), 2),
                    members=[g6_encode(g) for g in members],
                )
            )
        violations = 0
        if mode == "pairwise":
            member_lists = list(classes.values())
            results = pool.map(_pairwise_class, member_lists) if pool else map(_pairwise_class, member_lists)
            for cs, members, (stats, pairs) in zip(class_stats, member_lists, results):
                cs.pairs_compared = stats["pairs_compared"]
                cs.level2_pruned = stats["level2_pruned"]
                cs.iso_checks = stats["iso_checks"]
                cs.level2_bound = stats["level2_bound"]
                violations += stats["violations"]
                collisions.extend((index[members[i]], index[members[j]]) for i, j in pairs)
        else:
            if pool:
                sigs = [s for part in pool.map(_signatures, _chunks(graphs, 4 * workers)) for s in part]
            else:
                sigs = _signatures(graphs)
            by_sig: Dict[DeckCertificate, List[int]] = defaultdict(list)
            for i, s in enumerate(sigs):
                by_sig[s].append(i)
            class_of = {}
            for cs, members in zip(class_stats, classes.values()):
                for g in members:
                    class_of[index[g]] = cs
            for idxs in by_sig.values():
                for i, j in combinations(idxs, 2):
                    cs = class_of[i] if class_of[i] is class_of[j] else None
                    d1, d2 = build_deck(graphs[i]), build_deck(graphs[j])
                    same, checks = decks_isomorphic_pairwise(d1, d2)
                    bound = level2_bound(d1, d2)
                    violations += checks > bound
                    if cs is not None:
                        cs.pairs_compared += 1
                        cs.iso_checks += checks
                        cs.level2_bound += bound
                    if same:
                        collisions.append((i, j))
    finally:
        if pool:
            pool.shutdown()

    collisions.sort()
    return VerificationReport(
        n=n,
        graph_count=len(graphs),
        mode=mode,
        total_pairs=math.comb(len(graphs), 2),
        level1_pairs=sum(cs.naive_pairs for cs in class_stats),
        naive_iso_bound=sum(cs.naive_pairs for cs in class_stats) * math.comb(n + 1, 2),
        iso_checks=sum(cs.iso_checks for cs in class_stats),
        level2_bound=sum(cs.level2_bound for cs in class_stats),
        bound_violations=violations,
        classes=class_stats,
        collisions=[(g6_encode(graphs[i]), g6_encode(graphs[j])) for i, j in collisions],
        wall_time=round(time.perf_counter() - start, 3),
    )
