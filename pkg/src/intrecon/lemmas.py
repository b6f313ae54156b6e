"""Registered structural invariants, checked graph by graph.

Each check takes a connected interval graph and returns whether the invariant
holds.  Checks that do not apply to a graph raise ``NotApplicable``.  Deck
procedures are compared against the same quantity read off the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import structure as st
from .assembly import annotated_isomorphic, annotated_part, annotated_parts, assemble, distant_vertex_candidates
from .canon import canonical_form
from .deck import (
    _max_twin_classes,
    deck,
    flank_sizes,
    flank_sizes_direct,
    has_no_flanks,
    has_universal_vertex,
    is_connected_deck,
    local_fact,
    multiset_E,
    multiset_E_direct,
    outsider_sizes,
    outsider_sizes_direct,
    q1_cards,
    q1_cards_direct,
    q_ge2_cards,
    q_ge2_cards_direct,
    reconstruct_degree_info,
)
from .errors import NotApplicable, OrderTooSmall
from .graph import Graph, degree_sequence
from .interval import (
    Separation,
    clique_count,
    find_asteroidal_triple,
    has_linearly_ordered_neighborhoods,
    is_clean_clique_separation,
    is_interval,
    is_tidy,
    is_tidy_bruteforce,
    perfect_elimination_order,
    recognize_interval,
    tidy_representation,
)


@dataclass(frozen=True)
class Invariant:
    name: str
    module: str
    check: Callable[[Graph], bool]


REGISTRY: dict[str, Invariant] = {}


def invariant(module: str):
    def wrap(fn: Callable[[Graph], bool]) -> Callable[[Graph], bool]:
        name = fn.__name__.removeprefix("check_").replace("_", "-")
        REGISTRY[name] = Invariant(name, module, fn)
        return fn
    return wrap


def _need(cond: bool, why: str) -> None:
    if not cond:
        raise NotApplicable(why)


def _flank_separations(g: Graph) -> list[Separation]:
    _need(not g.universal_vertices(), "universal vertex")
    seps = []
    for f in st.flanks(g):
        if f:
            ring = g.open_nbhd(f)
            seps.append(Separation.of(f, ring, set(range(g.n)) - f - ring))
    _need(bool(seps), "no flank")
    return seps


# interval model --------------------------------------------------------------


@invariant("interval_model")
def check_recognition_is_chordal_and_at_free(g: Graph) -> bool:
    """Checked on the graph and on each of its cards."""
    for h in [g] + [g.remove_vertex(v) for v in range(g.n)]:
        definitional = perfect_elimination_order(h) is not None and find_asteroidal_triple(h) is None
        if is_interval(h) != definitional:
            return False
    return True


@invariant("interval_model")
def check_representation_realizes(g: Graph) -> bool:
    return recognize_interval(g).realizes(g)


@invariant("interval_model")
def check_compact_endpoints_match_cliques(g: Graph) -> bool:
    return len(recognize_interval(g).endpoints()) == clique_count(g)


@invariant("interval_model")
def check_tidy_agrees_with_bruteforce(g: Graph) -> bool:
    rep = recognize_interval(g)
    tidy = tidy_representation(rep)
    return (tidy.realizes(g) and is_tidy(g, tidy) and is_tidy_bruteforce(g, tidy)
            and is_tidy(g, rep) == is_tidy_bruteforce(g, rep))


@invariant("interval_model")
def check_clean_separation_has_nested_neighborhoods(g: Graph) -> bool:
    return all(has_linearly_ordered_neighborhoods(g, s)
               for s in _flank_separations(g) if is_clean_clique_separation(g, s))


# structure ------------------------------------------------------------------------


@invariant("structure")
def check_coating_agrees_with_bruteforce(g: Graph) -> bool:
    sets = [g.max_degree_vertices()] + _max_twin_classes(g)
    return all(st.coating(g, s) == st.coating_bruteforce(g, s) for s in sets)


@invariant("structure")
def check_bulk_contains_max_degree_vertices(g: Graph) -> bool:
    return g.max_degree_vertices() <= st.bulk(g)


@invariant("structure")
def check_high_degree_vertices_have_at_most_two_sides(g: Graph) -> bool:
    delta = g.max_degree()
    return all(len(st.sides(g, v)) <= 2 for v in range(g.n) if g.degree(v) >= delta - 1)


@invariant("structure")
def check_at_most_two_flanks(g: Graph) -> bool:
    return len(st.approx_classes(g, st.bulk(g))) <= 2


@invariant("structure")
def check_flank_neighborhood_is_clean_separator(g: Graph) -> bool:
    return all(is_clean_clique_separation(g, s) for s in _flank_separations(g))


# deck procedures --------------------------------------------------------------


@invariant("deck_ops")
def check_degree_data_from_deck(g: Graph) -> bool:
    info = reconstruct_degree_info(deck(g))
    if info.degree_sequence != degree_sequence(g) or info.num_edges != g.num_edges():
        return False
    want = sorted((g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors(v)))) for v in range(g.n))
    got = sorted((c.degree, c.neighbor_degrees) for c in info.cards for _ in range(c.count))
    return want == got


@invariant("deck_ops")
def check_connectivity_and_universal_from_deck(g: Graph) -> bool:
    d = deck(g)
    return is_connected_deck(d) and has_universal_vertex(d) == bool(g.universal_vertices())


@invariant("deck_ops")
def check_no_flank_test(g: Graph) -> bool:
    return has_no_flanks(deck(g)) == (flank_sizes_direct(g) == (0, 0))


@invariant("deck_ops")
def check_flank_sizes_from_deck(g: Graph) -> bool:
    return flank_sizes(deck(g)) == flank_sizes_direct(g)


@invariant("deck_ops")
def check_flank_cards_from_deck(g: Graph) -> bool:
    return multiset_E(deck(g)) == multiset_E_direct(g)


def _outsider_graph(g: Graph) -> None:
    _need(not g.universal_vertices(), "universal vertex")
    _need(0 in flank_sizes_direct(g), "two flanks")


@invariant("deck_ops")
def check_outsider_sizes_from_deck(g: Graph) -> bool:
    _outsider_graph(g)
    return outsider_sizes(deck(g)) == outsider_sizes_direct(g)


@invariant("deck_ops")
def check_large_outsider_cards_from_deck(g: Graph) -> bool:
    _outsider_graph(g)
    return q_ge2_cards(deck(g)) == q_ge2_cards_direct(g)


@invariant("deck_ops")
def check_lone_outsider_cards_from_deck(g: Graph) -> bool:
    _outsider_graph(g)
    return q1_cards(deck(g)) == q1_cards_direct(g)


@invariant("deck_ops")
def check_max_twin_class_count_from_card(g: Graph) -> bool:
    d = deck(g)
    info = reconstruct_degree_info(d)
    want = len(_max_twin_classes(g)) == 1
    return all(local_fact(d, c, lambda h, v: len(_max_twin_classes(h)) == 1) == want
               for c in info.cards)


# assembly ------------------------------------------------------------------------------


@invariant("assembly")
def check_assemble_round_trip(g: Graph) -> bool:
    target = canonical_form(g)
    for s in _flank_separations(g):
        ha, hb = annotated_parts(g, s)
        if canonical_form(assemble(ha, hb)) != target:
            return False
    return True


@invariant("assembly")
def check_far_part_recovered_from_distant_card(g: Graph) -> bool:
    """The flank-side part is among the parts recovered from the card of a
    far vertex whose removal keeps the graph connected and which has the
    fewest separator neighbors."""
    for s in _flank_separations(g):
        want = annotated_part(g, s.a, s.c)
        movable = [b for b in s.b if g.remove_vertex(b).is_connected()]
        if not movable:
            continue
        low = min(len(g.neighbors(b) & s.c) for b in movable)
        for b in movable:
            if len(g.neighbors(b) & s.c) != low:
                continue
            keep = [v for v in range(g.n) if v != b]
            pos = {v: i for i, v in enumerate(keep)}
            card = g.remove_vertex(b)
            nd = sorted(g.degree(u) for u in g.neighbors(b))
            cands = distant_vertex_candidates(card, [pos[v] for v in s.a], [pos[v] for v in s.c], nd)
            if not any(annotated_isomorphic(want, h) for h in cands):
                return False
    return True


def check_graph(g: Graph) -> dict[str, bool | None]:
    """Every registered invariant on one graph; ``None`` marks not applicable."""
    out: dict[str, bool | None] = {}
    for name, inv in REGISTRY.items():
        try:
            out[name] = bool(inv.check(g))
        except (NotApplicable, OrderTooSmall):
            out[name] = None
    return out
