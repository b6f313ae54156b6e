"""Reconstruction of interval graphs from their decks.

The dispatch follows the structure theory: disconnected decks, decks with a
universal vertex, then the number and sizes of the flanks.  Inside each case
the graph is rebuilt by one of three checked constructions:

* gluing annotated parts of a clean clique separation, the far part being
  recovered from the card of a distant flank vertex;
* putting the removed vertex back into a designated card, restricted to the
  vertices it can be adjacent to and to the degree data of the deck;
* duplicating a twin of the removed maximum-degree vertex.

Each candidate is accepted only if its own deck equals the input.  A case
yields a result only if exactly one isomorphism class survives; none raises
``CaseUnmatched`` and several raise ``AmbiguousDeck``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from . import structure as st
from .assembly import AnnotatedGraph, annotated_part, assemble, distant_vertex_candidates
from .canon import canonical_form, canonical_graph
from .deck import (
    CardInfo,
    Deck,
    _expand,
    _flank_count,
    _max_twin_classes,
    deck,
    flank_sizes,
    has_universal_vertex,
    is_connected_deck,
    is_interval_deck,
    local_fact,
    multiset_E,
    outsider_cards,
    outsider_sizes,
    q1_cards,
    q_ge2_cards,
    reconstruct_degree_info,
)
from .errors import (
    AmbiguousDeck,
    CaseUnmatched,
    IncompatibleParts,
    IntreconError,
    NotIntervalDeck,
    NotLinearlyOrdered,
    OrderTooSmall,
)
from .graph import Graph
from .interval import clique_ordering


@dataclass(frozen=True)
class ReconstructionResult:
    graph: Graph
    method: str
    trace: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"g6": canonical_form(self.graph), "method": self.method, "trace": list(self.trace)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class _Run:
    d: Deck
    trace: list[str] = field(default_factory=list)

    @property
    def info(self):
        return reconstruct_degree_info(self.d)

    def note(self, step: str) -> None:
        self.trace.append(step)

    def cards(self, ms) -> list[CardInfo]:
        return _expand(self.info, ms)


# checked constructions -----------------------------------------------------------


def _accept(run: _Run, graphs: Iterable[Graph], what: str) -> Graph:
    found: dict[str, Graph] = {}
    for g in graphs:
        c = canonical_form(g)
        if c not in found and deck(g) == run.d:
            found[c] = g
    if not found:
        raise CaseUnmatched(f"{what}: no candidate reproduces the deck")
    if len(found) > 1:
        raise AmbiguousDeck(f"{what}: {len(found)} non-isomorphic candidates share the deck")
    (cert,) = found
    return canonical_graph(found[cert])


def _reinsertions(card: CardInfo, region: Iterable[int] | None = None,
                  connected: bool = True) -> list[Graph]:
    h = card.graph
    pool = sorted(region) if region is not None else list(range(h.n))
    degs = h.degrees()
    out: dict[str, Graph] = {}
    for xs in combinations(pool, card.degree):
        if tuple(sorted(degs[x] + 1 for x in xs)) != card.neighbor_degrees:
            continue
        g = h.add_vertex(xs)
        if connected and not g.is_connected():
            continue
        out.setdefault(canonical_form(g), g)
    return [out[k] for k in sorted(out)]


def _reinsert(run: _Run, card: CardInfo, region: Iterable[int] | None, what: str) -> Graph:
    run.note(f"reinsert removed vertex into {what}")
    return _accept(run, _reinsertions(card, region), what)


def _duplicate(run: _Run, card: CardInfo, degree: int, what: str) -> Graph:
    """Add a twin of some vertex of the given degree in ``card``."""
    run.note(f"duplicate a degree-{degree} vertex of {what}")
    h = card.graph
    cands = []
    for u in range(h.n):
        if h.degree(u) == degree:
            cands.append(h.add_vertex(h.neighbors(u)))
            cands.append(h.add_vertex(h.neighbors(u) | {u}))
    return _accept(run, cands, what)


def _glue(run: _Run, far: list[AnnotatedGraph], near: list[AnnotatedGraph], what: str) -> Graph:
    run.note("glue annotated parts along a clean clique separation")
    graphs = []
    for ha in far:
        for hb in near:
            try:
                graphs.append(assemble(ha, hb))
            except (IncompatibleParts, NotLinearlyOrdered):
                continue
    return _accept(run, graphs, what)


def _without_max_degree(card: CardInfo, delta: int) -> set[int]:
    h = card.graph
    return {x for x in range(h.n) if h.degree(x) != delta}


def _flank_parts(h: Graph) -> list[frozenset[int]]:
    return [f for f in st.flanks(h) if f]


# top level ------------------------------------------------------------------------------


def reconstruct(d: Deck) -> ReconstructionResult:
    if d.n < 3:
        raise OrderTooSmall("graphs on fewer than three vertices are not reconstructible")
    run = _Run(d)
    if not is_connected_deck(d):
        g, method = reconstruct_disconnected(d, run)
        # disconnected graphs are determined by their decks
        if clique_ordering(g) is None:
            raise NotIntervalDeck("the graph with this deck is not an interval graph")
        return ReconstructionResult(g, method, tuple(run.trace))
    if not is_interval_deck(d):
        raise NotIntervalDeck("some graph with this deck is not an interval graph")
    run.note("interval deck")
    if has_universal_vertex(d):
        g = reconstruct_universal(d, run)
        return ReconstructionResult(g, "universal-vertex", tuple(run.trace))
    sizes = flank_sizes(d)
    run.note(f"flank sizes {sizes[0]},{sizes[1]}")
    if sizes[0] > 0:
        g, method = reconstruct_two_flanks(d, run)
    elif sizes[1] > 0:
        g, method = reconstruct_one_flank(d, run)
    else:
        g, method = reconstruct_no_flank(d, run)
    return ReconstructionResult(g, method, tuple(run.trace))


def reconstruct_disconnected(d: Deck, run: _Run | None = None) -> tuple[Graph, str]:
    """Components via reinsertion into a card; oracle search if that fails."""
    run = run or _Run(d)
    run.note("disconnected deck")
    info = run.info
    card = min(info.cards, key=lambda c: (c.degree, c.cert))
    try:
        run.note("reinsert removed vertex into a card of minimum degree")
        return _accept(run, _reinsertions(card, connected=False), "disconnected"), "disconnected"
    except CaseUnmatched:
        from .oracle import graphs_with_deck

        run.note("exhaustive search")
        found = graphs_with_deck(d)
        if len(found) != 1:
            raise AmbiguousDeck(f"{len(found)} graphs share the deck")
        from .graph import from_graph6

        return from_graph6(found.pop()), "oracle-fallback"


def reconstruct_universal(d: Deck, run: _Run | None = None) -> Graph:
    run = run or _Run(d)
    info = run.info
    card = min((c for c in info.cards if c.degree == d.n - 1), key=lambda c: c.cert)
    run.note("add a universal vertex to the card of a universal vertex")
    return _accept(run, [card.graph.add_vertex(range(card.graph.n))], "universal-vertex")


# two flanks --------------------------------------------------------------------------


def _single_max_class(run: _Run) -> bool:
    """Whether the maximum-degree vertices form one twin class."""
    return bool(local_fact(run.d, run.info.cards[0], lambda g, v: len(_max_twin_classes(g)) == 1))


def _max_vertex_count(run: _Run) -> int:
    info = run.info
    return info.degree_sequence.count(info.max_degree)


def reconstruct_two_flanks(d: Deck, run: _Run | None = None) -> tuple[Graph, str]:
    run = run or _Run(d)
    s1, s2 = flank_sizes(d)
    if not (s1 > 0 and s2 > 0):
        raise CaseUnmatched("deck does not have two flanks")
    e = run.cards(multiset_E(d))
    if s1 > 1 or s2 > 2:
        case = 1 if 1 < s1 < s2 else (2 if s1 == 1 else 3)
        t = s2 if case == 2 else s1
        run.note(f"two flanks case {case}")
        return _two_flanks_by_parts(run, e, t), f"two-flanks case {case}"
    delta = run.info.max_degree
    if (s1, s2) == (1, 2):
        return _two_flanks_case4(run, e, delta)
    # both flanks are single vertices
    tag = _max_class_tag(run)
    run.note(f"two flanks case 5{tag}")
    if tag == "a":
        return _duplicate_max(run, delta), "two-flanks case 5a"
    card = min(e, key=lambda c: c.cert)
    region = _flank_region(card, delta)
    return _reinsert(run, card, region, "card of a flank vertex"), f"two-flanks case 5{tag}"


def _max_class_tag(run: _Run) -> str:
    if _max_vertex_count(run) == 1:
        return "c"
    return "a" if _single_max_class(run) else "b"


def _duplicate_max(run: _Run, delta: int) -> Graph:
    card = min((c for c in run.info.cards if c.degree == delta), key=lambda c: c.cert)
    return _duplicate(run, card, delta - 1, "card of a maximum-degree vertex")


def _flank_region(card: CardInfo, delta: int) -> set[int]:
    """Possible neighbors of a removed lone flank vertex: away from the
    other flank and from the maximum-degree vertices."""
    h = card.graph
    other = set()
    for f in _flank_parts(h):
        other |= h.closed_nbhd(f)
    return _without_max_degree(card, delta) - other


def _two_flanks_by_parts(run: _Run, e: list[CardInfo], t: int) -> Graph:
    """Glue the part around a flank of size ``t`` to the rest of the graph."""
    far: dict[tuple, AnnotatedGraph] = {}
    near: dict[tuple, AnnotatedGraph] = {}
    for card in e:
        h = card.graph
        core = h.closed_nbhd(st.bulk(h))
        for f in _flank_parts(h):
            ring = h.open_nbhd(f) & core
            if len(f) == t:
                part = annotated_part(h, f, ring)
                far.setdefault(part.certificate(), part)
            if len(f) == t - 1:
                rest = frozenset(range(h.n)) - f - ring
                for part in distant_vertex_candidates(h, rest, ring, card.neighbor_degrees):
                    near.setdefault(part.certificate(), part)
    run.note(f"parts around flanks of size {t} from flank cards")
    run.note("distant-vertex recovery of the far part")
    return _glue(run, [far[k] for k in sorted(far)], [near[k] for k in sorted(near)],
                 "two-flank separation")


def _two_flanks_case4(run: _Run, e: list[CardInfo], delta: int) -> tuple[Graph, str]:
    lone = [c for c in e if len(_flank_parts(c.graph)) == 1]
    pair = [c for c in e if len(_flank_parts(c.graph)) == 2]
    if not lone or not pair:
        raise CaseUnmatched("flank cards of sizes 1 and 2 not found")
    f1_degree = lone[0].degree
    card = min(pair, key=lambda c: (c.degree, c.cert))
    h = card.graph
    ends = [next(iter(f)) for f in _flank_parts(h)]
    odd = [x for x in ends if h.degree(x) != f1_degree]
    if len(odd) == 1:
        run.note("two flanks case 4: flank vertices of the smaller pair card differ in degree")
        f2 = odd[0]
        region = h.closed_neighbors(f2)
        return _reinsert(run, card, region, "card of the smaller flank-pair vertex"), "two-flanks case 4"
    tag = _max_class_tag(run)
    run.note(f"two flanks case 4{tag}")
    if tag == "a":
        return _duplicate_max(run, delta), "two-flanks case 4a"
    card = lone[0]
    return _reinsert(run, card, _flank_region(card, delta), "card of the lone flank vertex"), f"two-flanks case 4{tag}"


# no flank -------------------------------------------------------------------------------


def reconstruct_no_flank(d: Deck, run: _Run | None = None) -> tuple[Graph, str]:
    run = run or _Run(d)
    info = run.info
    delta = info.max_degree
    o_small, o_big = outsider_sizes(d)
    if o_big > 1:
        run.note("no flank case 1: an outsider class with several vertices")
        card = min(run.cards(q_ge2_cards(d)), key=lambda c: c.cert)
        region = _without_max_degree(card, delta)
        return _reinsert(run, card, region, "card of an outsider"), "no-flank case 1"
    if delta == d.n - 2:
        run.note("no flank case 2: maximum degree n-2")
        lower = [c for c in info.cards if c.degree == delta - 1]
        card = min(lower or [c for c in info.cards if c.degree == delta], key=lambda c: c.cert)
        return _reinsert(run, card, None, "card of a high-degree vertex"), "no-flank case 2"
    run.note("no flank case 3: two lone outsiders")
    card = min(run.cards(q1_cards(d)), key=lambda c: c.cert)
    region = _without_max_degree(card, delta)
    return _reinsert(run, card, region, "card of a lone outsider"), "no-flank case 3"


# one flank -------------------------------------------------------------------------------


def _outsider_card_case(card: CardInfo, delta: int) -> int:
    h = card.graph
    if h.max_degree() < delta:
        return 3
    return 1 if _flank_count(h) <= 1 else 2


def reconstruct_one_flank(d: Deck, run: _Run | None = None) -> tuple[Graph, str]:
    run = run or _Run(d)
    info = run.info
    delta = info.max_degree
    _, size = flank_sizes(d)
    e = run.cards(multiset_E(d))
    outs = run.cards(outsider_cards(d))
    if size > 1:
        case = _outsider_card_case(min(outs, key=lambda c: c.cert), delta)
        run.note(f"one flank of size {size}, outsider card case {case}")
        card = max(e, key=lambda c: (_y_weight(c), _neg(c.cert)))
        h = card.graph
        region = set(range(h.n)) - st.bulk(h)
        return _reinsert(run, card, region, "card of a flank vertex"), f"one-flank big case {case}"
    (card_f,) = e
    single = _single_max_class(run)
    o1 = outsider_sizes(d)[1]
    if single:
        count = _max_vertex_count(run)
        if count > 1:
            run.note("one flank of size 1, case 1 with several maximum-degree twins")
            return _duplicate_max(run, delta), "one-flank small case 1-dup"
        card_a = next(c for c in info.cards if c.degree == delta)
        if not card_a.graph.is_connected():
            run.note("one flank of size 1, case 1 with a cut vertex of maximum degree")
            return _reinsert(run, card_a, None, "card of the maximum-degree vertex"), "one-flank small case 1-split"
        tag = "1.a" if o1 == 2 else "1.b"
    else:
        if o1 > 2:
            tag = "2.a"
        elif o1 == 2:
            tag = "2.b"
        else:
            tag = "2.c" if _second_outsider_size(card_f) != 1 else "2.d"
    run.note(f"one flank of size 1, case {tag}")
    region = _without_max_degree(card_f, delta)
    return _reinsert(run, card_f, region, "card of the flank vertex"), f"one-flank small case {tag}"


def _second_outsider_size(card: CardInfo) -> int:
    """Size of the outsider class of ``G - f`` other than a lone outsider."""
    try:
        o1, o2 = st.outsiders(card.graph)
    except IntreconError:
        return 0
    sizes = sorted((len(o1), len(o2)))
    if 1 in sizes:
        sizes.remove(1)
    return sizes[-1]


def _y_weight(card: CardInfo) -> int:
    """Degree sum over the vertices joining the bulk of the card to its flanks."""
    h = card.graph
    core = h.closed_nbhd(st.bulk(h))
    ring = set()
    for f in _flank_parts(h):
        ring |= h.open_nbhd(f)
    return sum(h.degree(y) for y in core & ring)


def _neg(cert: str) -> tuple[int, ...]:
    return tuple(-ord(ch) for ch in cert)

