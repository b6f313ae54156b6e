"""Exhaustive ground truth at small orders.

Graphs are enumerated isomorph-free by canonical augmentation: a child ``H``
of a canonical parent ``P`` is kept iff removing the last vertex of the
canonical labeling of ``H`` leaves a graph isomorphic to ``P``.  Every class is
produced from exactly one parent class, and duplicates from the same parent
are dropped by certificate.
"""

from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb, factorial
from typing import Iterator

from .canon import automorphism_count, canonical_form, canonical_graph, canonical_labeling
from .deck import Deck, deck
from .errors import OrderTooSmall, SizeLimitExceeded
from .graph import Graph, from_graph6
from .interval import clique_ordering

GRAPH_LIMIT = 9
INTERVAL_LIMIT = 10


def _children(parent: Graph, interval_only: bool) -> list[Graph]:
    target = canonical_form(parent)
    n = parent.n
    out: dict[str, Graph] = {}
    for nbrs in range(1 << n):
        h = parent.add_vertex(v for v in range(n) if nbrs >> v & 1)
        lab = canonical_labeling(h)
        if canonical_form(h.remove_vertex(lab[-1])) != target:
            continue
        if interval_only and clique_ordering(h) is None:
            continue
        cert = canonical_form(h)
        if cert not in out:
            out[cert] = canonical_graph(h)
    return [out[k] for k in sorted(out)]


def _descend(g: Graph, n: int, interval_only: bool) -> Iterator[Graph]:
    if g.n == n:
        yield g
        return
    for child in _children(g, interval_only):
        yield from _descend(child, n, interval_only)


def _check(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > limit:
        raise SizeLimitExceeded(f"n={n} exceeds enumeration limit {limit}")


def _level(k: int, interval_only: bool) -> list[Graph]:
    return list(_descend(Graph.empty(0), k, interval_only))


def _shard(args: tuple[str, int, bool]) -> list[str]:
    g6, n, interval_only = args
    return [canonical_form(h) for h in _descend(from_graph6(g6), n, interval_only)]


def _enumerate(n: int, interval_only: bool, jobs: int) -> Iterator[Graph]:
    if jobs <= 1 or n < 4:
        yield from _descend(Graph.empty(0), n, interval_only)
        return
    # one task per graph of order n - 2; workers extend it twice
    roots = _level(n - 2, interval_only)
    tasks = [(canonical_form(r), n, interval_only) for r in roots]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_shard, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    # roots come in depth-first order, so concatenating the shards in task
    # order reproduces the sequential stream exactly
    for part in parts:
        for cert in part:
            yield from_graph6(cert)


def enumerate_graphs(n: int, *, jobs: int = 1, limit: int = GRAPH_LIMIT) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order ``n``."""
    _check(n, limit)
    return _enumerate(n, False, jobs)


def enumerate_interval_graphs(n: int, *, jobs: int = 1,
                              limit: int = INTERVAL_LIMIT) -> Iterator[Graph]:
    """Interval graphs of order ``n``; induced subgraphs of interval graphs
    are interval, so only interval parents are extended."""
    _check(n, limit)
    return _enumerate(n, True, jobs)


def enumerate_naive(n: int) -> list[Graph]:
    """Every labeled graph, deduplicated by certificate (test oracle, n <= 6)."""
    if n > 6:
        raise SizeLimitExceeded("naive enumeration is limited to n <= 6")
    pairs = list(combinations(range(n), 2))
    seen: dict[str, Graph] = {}
    for m in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if m >> i & 1])
        seen.setdefault(canonical_form(g), g)
    return [from_graph6(k) for k in sorted(seen)]


def labeled_mass(graphs: list[Graph]) -> int:
    """``sum n!/|Aut(G)|``; equals ``2^(n choose 2)`` for a complete list."""
    return sum(factorial(g.n) // automorphism_count(g) for g in graphs)


@dataclass
class EnumerationReport:
    n: int
    counts: dict[str, int]
    elapsed: float

    def to_dict(self) -> dict:
        return asdict(self)


def enumeration_report(n: int, *, jobs: int = 1) -> EnumerationReport:
    start = time.perf_counter()
    counts = {"graphs": 0, "connected": 0, "interval": 0, "connected_interval": 0}
    for g in enumerate_graphs(n, jobs=jobs):
        conn = g.is_connected()
        inter = clique_ordering(g) is not None
        counts["graphs"] += 1
        counts["connected"] += conn
        counts["interval"] += inter
        counts["connected_interval"] += conn and inter
    return EnumerationReport(n, counts, time.perf_counter() - start)


# decks ------------------------------------------------------------------------


def graphs_with_deck(d: Deck, *, limit: int = GRAPH_LIMIT) -> set[str]:
    """Certificates of all graphs whose deck is ``d``.

    For ``n >= 3`` the edge count, and with it the degree of the removed
    vertex, is fixed by the deck, so it suffices to extend one card by every
    neighbor set of that size.
    """
    if d.n > limit:
        raise SizeLimitExceeded(f"n={d.n} exceeds limit {limit}")
    if d.n < 3:
        return {canonical_form(g) for g in enumerate_graphs(d.n) if deck(g) == d}
    graphs = {c: from_graph6(c) for c, _ in d.cards}
    total = sum(graphs[c].num_edges() * k for c, k in d.cards)
    if total % (d.n - 2):
        return set()
    m = total // (d.n - 2)
    # the card whose vertex has the fewest candidate neighbor sets
    cert = min(graphs, key=lambda c: (comb(d.n - 1, max(0, m - graphs[c].num_edges())), c))
    h = graphs[cert]
    dv = m - h.num_edges()
    if dv < 0 or dv > h.n:
        return set()
    found: set[str] = set()
    tried: set[str] = set()
    for xs in combinations(range(h.n), dv):
        g = h.add_vertex(xs)
        c = canonical_form(g)
        if c in tried:
            continue
        tried.add(c)
        if deck(g) == d:
            found.add(c)
    return found


@dataclass
class CollisionReport:
    n: int
    mode: str
    checked: int
    collisions: list[list[str]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def _deck_key(d: Deck) -> int:
    return hash(d.cards)


def _unique_for(g6: str) -> list[str]:
    g = from_graph6(g6)
    found = graphs_with_deck(deck(g))
    return sorted(found) if found != {g6} else []


def verify_theorem(n: int, *, jobs: int = 1) -> CollisionReport:
    """Deck collisions involving interval graphs of order ``n``.

    Up to ``n = 7`` the decks of all graphs are bucketed.  At ``n = 8`` each
    interval graph's deck is inverted by :func:`graphs_with_deck`, which
    compares it against every graph of that order.
    """
    if n < 3:
        raise OrderTooSmall("the statement concerns graphs on at least three vertices")
    if n > 8:
        raise SizeLimitExceeded("verify_theorem supports n <= 8")
    if n <= 7:
        buckets: dict[int, list[tuple[Deck, str, bool]]] = defaultdict(list)
        checked = 0
        for g in enumerate_graphs(n, jobs=jobs):
            d = deck(g)
            buckets[_deck_key(d)].append((d, canonical_form(g), clique_ordering(g) is not None))
            checked += 1
        collisions = []
        for entries in buckets.values():
            if len(entries) < 2:
                continue
            by_deck: dict[Deck, list[tuple[str, bool]]] = defaultdict(list)
            for d, c, inter in entries:
                by_deck[d].append((c, inter))
            for group in by_deck.values():
                if len(group) > 1 and any(i for _, i in group):
                    collisions.append(sorted(c for c, _ in group))
        return CollisionReport(n, "all-graphs", checked, sorted(collisions))
    certs = [canonical_form(g) for g in enumerate_interval_graphs(n, jobs=jobs)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_unique_for, certs, chunksize=16))
    else:
        results = [_unique_for(c) for c in certs]
    return CollisionReport(n, "interval-decks-inverted", len(certs), sorted(r for r in results if r))


def connected_interval_graphs(n: int, *, jobs: int = 1) -> Iterator[Graph]:
    return (g for g in enumerate_interval_graphs(n, jobs=jobs) if g.is_connected())



# invariant suite ---------------------------------------------------------------------


@dataclass
class LemmaReport:
    n: int
    graphs: int
    results: dict[str, dict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r["failed"] == 0 for r in self.results.values())

    def to_dict(self) -> dict:
        return {**asdict(self), "ok": self.ok}


def _lemma_shard(g6: str) -> dict[str, bool | None]:
    from .lemmas import check_graph

    return check_graph(from_graph6(g6))


def verify_lemma_suite(n: int, *, jobs: int = 1) -> LemmaReport:
    """Every registered invariant over the connected interval graphs of order
    ``n``: pass, fail and not-applicable counts, plus the first failing graph."""
    from .lemmas import REGISTRY

    if n > 8:
        raise SizeLimitExceeded("verify_lemma_suite supports n <= 8")
    certs = [canonical_form(g) for g in connected_interval_graphs(n, jobs=jobs)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_lemma_shard, certs, chunksize=8))
    else:
        rows = [_lemma_shard(c) for c in certs]
    report = LemmaReport(n, len(certs))
    for name, inv in REGISTRY.items():
        entry = {"module": inv.module, "passed": 0, "failed": 0, "skipped": 0, "counterexample": None}
        for cert, row in zip(certs, rows):
            outcome = row[name]
            if outcome is None:
                entry["skipped"] += 1
            elif outcome:
                entry["passed"] += 1
            else:
                entry["failed"] += 1
                entry["counterexample"] = entry["counterexample"] or cert
        report.results[name] = entry
    return report
