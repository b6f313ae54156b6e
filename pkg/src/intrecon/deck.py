"""Decks and the invariants that can be read off a deck alone.

Every procedure here looks only at the cards.  The functions ending in
``_direct`` read the hidden graph instead and exist as test oracles.

Several steps need a fact about the removed vertex ``v`` of one card, for
example "the maximum-degree neighbors of ``v`` form a twin class".  Such facts
are read by *local consensus*: all one-vertex extensions of the card that are
consistent with ``deg(v)`` and the degree multiset of ``N(v)`` are built, and
the fact is accepted when they all agree.  Since the true graph is one of the
extensions, an agreed value is always correct.  When the extensions disagree
the candidates are narrowed to those whose own deck equals the input deck;
``RESOLUTION_STATS`` counts how often that happens.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Hashable, Iterable, Mapping

from .canon import canonical_form, colored_form
from .errors import NotApplicable, OrderTooSmall
from .graph import Graph, bits, from_graph6, mask_of, twin_classes
from .interval import clique_ordering
from . import structure as st

CardMultiset = Counter  # certificate -> multiplicity

RESOLUTION_STATS: Counter = Counter()


@dataclass(frozen=True)
class Deck:
    """Multiset of cards, stored as sorted ``(certificate, count)`` pairs."""

    n: int
    cards: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if sum(c for _, c in self.cards) != self.n:
            raise ValueError("card multiplicities must sum to n")
        if any(c <= 0 for _, c in self.cards):
            raise ValueError("card counts must be positive")
        if list(self.cards) != sorted(self.cards):
            raise ValueError("cards must be sorted by certificate")

    @classmethod
    def from_counter(cls, n: int, counts: Mapping[str, int]) -> "Deck":
        return cls(n, tuple(sorted((k, c) for k, c in counts.items() if c)))

    def counter(self) -> Counter:
        return Counter(dict(self.cards))

    def graphs(self) -> list[Graph]:
        return [from_graph6(c) for c, _ in self.cards]

    def to_dict(self) -> dict:
        return {"n": self.n, "cards": [{"g6": c, "count": k} for c, k in self.cards]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Deck":
        counts: Counter = Counter()
        for entry in data["cards"]:
            counts[canonical_form(from_graph6(entry["g6"]))] += int(entry["count"])
        return cls.from_counter(int(data["n"]), counts)

    @classmethod
    def from_json(cls, text: str) -> "Deck":
        return cls.from_dict(json.loads(text))


def card_of(g: Graph, v: int) -> str:
    return canonical_form(g.remove_vertex(v))


def deck(g: Graph) -> Deck:
    if g.n < 1:
        raise ValueError("deck needs at least one vertex")
    return Deck.from_counter(g.n, Counter(card_of(g, v) for v in range(g.n)))


def cards_of(g: Graph, vs: Iterable[int]) -> Counter:
    """The multiset ``{{G - v : v in vs}}``."""
    return Counter(card_of(g, v) for v in vs)


# degree information ---------------------------------------------------------


@dataclass(frozen=True)
class CardInfo:
    """A distinct card together with what the deck says about its vertex."""

    cert: str
    count: int
    graph: Graph
    degree: int
    neighbor_degrees: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return self.graph.max_degree()


@dataclass(frozen=True)
class DeckInfo:
    n: int
    num_edges: int
    degree_sequence: tuple[int, ...]
    cards: tuple[CardInfo, ...]

    @property
    def max_degree(self) -> int:
        return self.degree_sequence[0]


def _degree_counts(degs: Iterable[int], top: int) -> list[int]:
    c = [0] * (top + 2)
    for d in degs:
        c[d] += 1
    return c


@lru_cache(maxsize=4096)
def reconstruct_degree_info(d: Deck) -> DeckInfo:
    """Degree of each removed vertex and the degree multiset of its neighbors.

    Edge count is ``sum |E(card)| / (n - 2)``.  For the neighbor multiset, let
    ``c`` count degrees in ``G - v`` taking each vertex at its ``G``-degree
    except neighbors of ``v``; the number of neighbors of degree ``t`` follows
    from the top degree down.
    """
    if d.n < 3:
        raise OrderTooSmall("degree information needs n >= 3")
    graphs = {c: from_graph6(c) for c, _ in d.cards}
    total = sum(graphs[c].num_edges() * k for c, k in d.cards)
    if total % (d.n - 2):
        raise ValueError("cards do not form a deck")
    m = total // (d.n - 2)
    degs = [m - graphs[c].num_edges() for c, k in d.cards for _ in range(k)]
    top = max(degs)
    whole = _degree_counts(degs, top)
    infos = []
    for c, k in d.cards:
        h = graphs[c]
        dv = m - h.num_edges()
        # G-degree counts of the vertices other than v
        rest = list(whole)
        rest[dv] -= 1
        card_counts = _degree_counts(h.degrees(), top)
        nbr = [0] * (top + 2)
        # a neighbor of G-degree t has card degree t - 1
        for t in range(top, 0, -1):
            nbr[t] = rest[t] - card_counts[t] + nbr[t + 1]
        nd = tuple(sorted(t for t in range(1, top + 1) for _ in range(nbr[t])))
        if len(nd) != dv or any(x < 0 for x in nbr):
            raise ValueError("inconsistent deck")
        infos.append(CardInfo(c, k, h, dv, nd))
    return DeckInfo(d.n, m, tuple(sorted(degs, reverse=True)), tuple(infos))


def card_extensions(info: DeckInfo, card: CardInfo, *, connected: bool = True,
                    interval: bool = True) -> list[Graph]:
    """Non-isomorphic one-vertex extensions of ``card`` matching its degree data.

    The new vertex is ``n - 1``.  ``connected``/``interval`` restrict to graphs
    of those classes.
    """
    return list(_extensions(card.graph, card.degree, card.neighbor_degrees, connected, interval))


@lru_cache(maxsize=8192)
def _extensions(h: Graph, dv: int, nd: tuple[int, ...], connected: bool,
                interval: bool) -> tuple[Graph, ...]:
    degs = h.degrees()
    seen: dict[tuple, Graph] = {}
    for xs in combinations(range(h.n), dv):
        if tuple(sorted(degs[x] + 1 for x in xs)) != nd:
            continue
        g = h.add_vertex(xs)
        if connected and not g.is_connected():
            continue
        if interval and clique_ordering(g) is None:
            continue
        # keep the new vertex distinguishable: facts are about it
        seen.setdefault(colored_form(g, [0] * h.n + [1]), g)
    return tuple(seen[k] for k in sorted(seen))


def local_fact(d: Deck, card: CardInfo, fact: Callable[[Graph, int], Hashable],
               *, connected: bool = True) -> Hashable:
    """Value of ``fact(G, v)`` for the removed vertex ``v`` of ``card``."""
    info = reconstruct_degree_info(d)
    exts = card_extensions(info, card, connected=connected)
    values = {fact(g, g.n - 1) for g in exts}
    if len(values) == 1:
        RESOLUTION_STATS["consensus"] += 1
        return values.pop()
    RESOLUTION_STATS["deck-narrowed"] += 1
    values = {fact(g, g.n - 1) for g in exts if deck(g) == d}
    if len(values) != 1:
        raise NotApplicable("card admits no consistent extension")
    return values.pop()


# graph-class preconditions ----------------------------------------------------


def is_interval_deck(d: Deck) -> bool:
    """True iff every graph with this deck is an interval graph."""
    if d.n < 3:
        raise OrderTooSmall("interval recognition from a deck needs n >= 3")
    if not all(clique_ordering(g) is not None for g in d.graphs()):
        return False
    from .oracle import graphs_with_deck

    found = graphs_with_deck(d)
    return bool(found) and all(clique_ordering(from_graph6(c)) is not None for c in found)


def is_connected_deck(d: Deck) -> bool:
    """For ``n >= 3`` a graph is connected iff at least two cards are."""
    if d.n < 3:
        raise OrderTooSmall("connectivity from a deck needs n >= 3")
    return sum(k for g, (_, k) in zip(d.graphs(), d.cards) if g.is_connected()) >= 2


def has_universal_vertex(d: Deck) -> bool:
    info = reconstruct_degree_info(d)
    return info.max_degree == d.n - 1


def _require_flank_preconditions(d: Deck) -> DeckInfo:
    info = reconstruct_degree_info(d)
    if not all(clique_ordering(g) is not None for g in d.graphs()):
        raise NotApplicable("not an interval deck")
    if not is_connected_deck(d):
        raise NotApplicable("deck of a disconnected graph")
    return info


def _require_outsider_preconditions(d: Deck) -> DeckInfo:
    info = _require_flank_preconditions(d)
    if has_universal_vertex(d):
        raise NotApplicable("graph has a universal vertex")
    if 0 not in flank_sizes(d):
        raise NotApplicable("graph has two flanks")
    return info


# flanks -------------------------------------------------------------------------


def _span_size(g: Graph) -> int:
    """``|N[span(V_max)]|`` of a card, components taken together."""
    return len(g.closed_nbhd(st.span(g, g.max_degree_vertices())))


def _every_max_vertex_two_sided(g: Graph) -> bool:
    return all(len(st.sides(g, s)) == 2 for s in g.max_degree_vertices())


def has_no_flanks(d: Deck) -> bool:
    info = _require_flank_preconditions(d)
    delta = info.max_degree
    # cards of vertices outside N[V_max]
    far = [c for c in info.cards if c.degree != delta and delta not in c.neighbor_degrees]
    if not far:
        return True
    h = far[0].graph
    if h.is_connected(h.max_degree_vertices()):
        return False
    same = [c for c in info.cards if c.max_degree == delta]
    return not any(_every_max_vertex_two_sided(c.graph) for c in same)


def multiset_E(d: Deck) -> Counter:
    """Connected cards keeping the maximum degree and the largest ``|N[bulk]|``."""
    info = _require_flank_preconditions(d)
    if has_no_flanks(d):
        return Counter()
    delta = info.max_degree
    same = [c for c in info.cards if c.max_degree == delta]
    target = max(_span_size(c.graph) for c in same)
    return Counter({c.cert: c.count for c in same
                    if c.graph.is_connected() and _span_size(c.graph) == target})


def _expand(info: DeckInfo, ms: Counter) -> list[CardInfo]:
    by_cert = {c.cert: c for c in info.cards}
    return [by_cert[k] for k in sorted(ms) for _ in range(ms[k])]


def flank_adjacent_pair(d: Deck) -> bool:
    """With two flank vertices ``m, m'`` in a single flank: are they adjacent?"""
    info = reconstruct_degree_info(d)
    e = _expand(info, multiset_E(d))
    dm = min(c.degree for c in e)
    for c in e:
        f = st.flank_vertices(c.graph)
        if any(c.graph.degree(x) == dm - 1 for x in f):
            return True
    return False


def flank_pair_share_neighbor(d: Deck) -> bool:
    """With two flank vertices ``m, m'`` that are not adjacent: common neighbor?

    Without a common neighbor the remaining flank vertex of the card of ``m``
    keeps the neighbor degrees of ``m'``.
    """
    info = reconstruct_degree_info(d)
    e = _expand(info, multiset_E(d))
    big = max(e, key=lambda c: (c.degree, c.cert))
    s = big.neighbor_degrees
    for c in e:
        h = c.graph
        (x,) = st.flank_vertices(h)
        seq = tuple(sorted(h.degree(u) for u in h.neighbors(x)))
        if seq == s:
            return False
    return True


def flank_sizes(d: Deck) -> tuple[int, int]:
    """``(min, max)`` of the two flank sizes."""
    info = _require_flank_preconditions(d)
    if has_no_flanks(d):
        return (0, 0)
    e = _expand(info, multiset_E(d))
    e_flanks = [st.flanks(c.graph) for c in e]
    total = len(e_flanks[0][0]) + len(e_flanks[0][1]) + 1
    if total >= 3:
        if any(f2 for _, f2 in e_flanks):
            big = max(len(f1) for f1, _ in e_flanks)
            return (total - big, big)
        return (0, total)
    if total == 2:
        if len(e) == 1:
            return (0, 2)
        if flank_adjacent_pair(d):
            return (0, 2)
        return (0, 2) if flank_pair_share_neighbor(d) else (1, 1)
    return (0, 1)


def multiset_E_direct(g: Graph) -> Counter:
    st._require_connected_interval(g)
    target = len(g.closed_nbhd(st.bulk(g)))
    delta = g.max_degree()
    out: Counter = Counter()
    if not st.flank_vertices(g):
        return out
    for v in range(g.n):
        h = g.remove_vertex(v)
        if h.is_connected() and h.max_degree() == delta and _span_size(h) == target:
            out[canonical_form(h)] += 1
    return out


def flank_sizes_direct(g: Graph) -> tuple[int, int]:
    f1, f2 = st.flanks(g)
    return tuple(sorted((len(f1), len(f2))))  # type: ignore[return-value]


# outsiders --------------------------------------------------------------------


def _max_twin_classes(g: Graph) -> list[frozenset[int]]:
    vd = g.max_degree_vertices()
    return [c for c, _ in twin_classes(g) if c <= vd]


def _nbrs_in_max_are_twin_class(g: Graph, v: int) -> bool:
    """``N(v) & V_max`` is a whole twin class of ``V_max``."""
    vd = g.max_degree_vertices()
    part = g.neighbors(v) & vd
    return bool(part) and part in _max_twin_classes(g)


def _closed_nbrs_in_max_are_twin_class(g: Graph, v: int) -> bool:
    part = g.closed_neighbors(v) & g.max_degree_vertices()
    return bool(part) and part in _max_twin_classes(g)


def _flank_count(g: Graph) -> int:
    return sum(1 for f in st.flanks(g) if f)


def _degree_class_count(g: Graph, degree: int) -> int:
    return sum(1 for c, _ in twin_classes(g) if g.degree(next(iter(c))) == degree)


def _extremal_span_cover(g: Graph, delta: int) -> int:
    """``|X_w|`` for a card: vertices inside the span of an end class.

    The end classes are the first and last twin classes, in the maximum-degree
    order, of the vertices of degree at least ``delta - 1`` that no vertex of
    larger degree contains.
    """
    cand = frozenset(v for v in st.maximal_neighborhood_vertices(g) if g.degree(v) >= delta - 1)
    order = st.max_degree_order(g, cand)
    out = 0
    for cls in {order.classes[0], order.classes[-1]}:
        sp = mask_of(st.span(g, cls))
        out |= mask_of(x for x in range(g.n) if g.closed_mask(x) & ~sp == 0)
    return bin(out).count("1")


def q_ge2_cards(d: Deck) -> Counter:
    """Cards of outsiders whose outsider class has at least two members."""
    info = _require_outsider_preconditions(d)
    delta = info.max_degree
    n_flanks = sum(1 for x in flank_sizes(d) if x)
    w_prime = []
    for c in info.cards:
        h = c.graph
        if c.degree == delta or not h.is_connected():
            continue
        if not (_flank_count(h) > n_flanks or h.max_degree() < delta):
            continue
        if not local_fact(d, c, _nbrs_in_max_are_twin_class):
            continue
        w_prime.append(c)
    if not w_prime:
        return Counter()
    single = local_fact(d, info.cards[0], lambda g, v: len(_max_twin_classes(g)) == 1)
    w = w_prime
    if single:
        best = max(_degree_class_count(c.graph, delta - 1) for c in w_prime)
        w = [c for c in w_prime if _degree_class_count(c.graph, delta - 1) == best]
    sizes = {c.cert: _extremal_span_cover(c.graph, delta) for c in w}
    low = min(sizes.values())
    return Counter({c.cert: c.count for c in w if sizes[c.cert] == low})


def _a_inf_interior_size(g: Graph) -> int:
    """Vertices whose closed neighborhood lies in the span of a chain class.

    Counting the whole span instead does not separate a lone outsider from
    the vertex at the far end of its chain.
    """
    a1, a2 = st.a_infinity(g)
    out = 0
    for a in (a1, a2):
        if a:
            sp = mask_of(st.span(g, a))
            out |= mask_of(x for x in bits(sp) if g.closed_mask(x) & ~sp == 0)
    return bin(out).count("1")


def q1_cards(d: Deck) -> Counter:
    """Cards of outsiders that are alone in their outsider class."""
    info = _require_outsider_preconditions(d)
    q2 = q_ge2_cards(d)
    sizes = _outsider_sizes_from(d, info, q2)
    if 1 not in sizes:
        return Counter()
    delta = info.max_degree
    n_flanks = sum(1 for x in flank_sizes(d) if x)
    cand = []
    for c in info.cards:
        h = c.graph
        if c.degree >= delta or not h.is_connected():
            continue
        if _flank_count(h) != n_flanks:
            continue
        if not local_fact(d, c, _closed_nbrs_in_max_are_twin_class):
            continue
        cand.append(c)
    if not cand:
        return Counter()
    sz = {c.cert: _a_inf_interior_size(c.graph) for c in cand}
    low = min(sz.values())
    return Counter({c.cert: c.count for c in cand if sz[c.cert] == low})


def _outsider_sizes_from(d: Deck, info: DeckInfo, q2: Counter) -> tuple[int, int]:
    fs = flank_sizes(d)
    one_flank = fs[1] > 0
    total = sum(q2.values())
    if total == 0:
        return (0, 1) if one_flank else (1, 1)
    if one_flank:
        return (0, max(1, total))
    seen = []
    for c in _expand(info, q2):
        # the card has one flank, so a single outsider class
        o1, o2 = st.outsiders(c.graph)
        seen.append(len(o1) + len(o2))
    if all(s == 1 for s in seen):
        return (1, total)
    return tuple(sorted(set(seen) if len(set(seen)) == 2 else (seen[0], seen[0])))  # type: ignore[return-value]


def outsider_sizes(d: Deck) -> tuple[int, int]:
    info = _require_outsider_preconditions(d)
    return _outsider_sizes_from(d, info, q_ge2_cards(d))


def outsider_cards(d: Deck) -> Counter:
    return q1_cards(d) + q_ge2_cards(d)


def q_ge2_cards_direct(g: Graph) -> Counter:
    o1, o2 = st.outsiders(g)
    return cards_of(g, [v for o in (o1, o2) if len(o) >= 2 for v in o])


def q1_cards_direct(g: Graph) -> Counter:
    o1, o2 = st.outsiders(g)
    return cards_of(g, [v for o in (o1, o2) if len(o) == 1 for v in o])


def outsider_sizes_direct(g: Graph) -> tuple[int, int]:
    o1, o2 = st.outsiders(g)
    return tuple(sorted((len(o1), len(o2))))  # type: ignore[return-value]
