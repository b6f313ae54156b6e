from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given

from intrecon.errors import NotASeparation, NotInterval, RepresentationMismatch
from intrecon.graph import Graph
from intrecon.interval import (
    IntervalRepresentation,
    Separation,
    compact_representation,
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
from intrecon.oracle import enumerate_naive

from _brute_clean import clean_by_representations
from named import C4, CAT1, P3, P5, T2
from strategies import graphs, interval_graphs


def test_c4_witness_is_the_cycle():
    with pytest.raises(NotInterval) as exc:
        recognize_interval(C4.graph)
    kind, vertices = exc.value.witness
    assert kind == "cycle" and sorted(vertices) == [0, 1, 2, 3]


def test_subdivided_claw_witness_is_leaf_triple():
    with pytest.raises(NotInterval) as exc:
        recognize_interval(T2.graph)
    kind, vertices = exc.value.witness
    assert kind == "asteroidal_triple"
    assert frozenset(vertices) == T2.set("x y z")


def test_path_representation_realizes():
    assert recognize_interval(P5.graph).realizes(P5.graph)


@given(graphs(max_n=7))
def test_recognition_matches_definition(g):
    definitional = perfect_elimination_order(g) is not None and find_asteroidal_triple(g) is None
    assert is_interval(g) == definitional


@given(interval_graphs())
def test_random_interval_graphs_are_recognized(g):
    rep = recognize_interval(g)
    assert rep.realizes(g)
    assert is_tidy(g, rep)


def test_compact_endpoint_counts():
    assert len(compact_representation(Graph.complete(3)).endpoints()) == 1
    assert len(compact_representation(P3.graph).endpoints()) == 2
    assert len(compact_representation(P5.graph).endpoints()) == 4


def test_tidy_examples():
    # each endpoint of K2 sees the whole graph, so both intervals must be equal
    k2 = IntervalRepresentation(((0, 1), (1, 2)))
    assert not is_tidy(Graph.complete(2), k2)
    assert not is_tidy_bruteforce(Graph.complete(2), k2)
    assert is_tidy(Graph.complete(2), IntervalRepresentation(((1, 1), (1, 1))))
    wide = IntervalRepresentation(((0, 5), (4, 9)))
    out = tidy_representation(wide)
    assert is_tidy(Graph.complete(2), out) and out.realizes(Graph.complete(2))
    p3 = IntervalRepresentation(((0, 0), (-10, 10), (1, 1)))
    assert p3.realizes(P3.graph)
    assert not is_tidy(P3.graph, p3)
    assert not is_tidy_bruteforce(P3.graph, p3)


def test_tidy_shrinks_stretched_tail():
    # CAT1 with the center stretched far right and the tail x reaching back
    # over it; N[x] lies in N[{c, y}] so x must be pulled in
    v = CAT1.index
    iv = [(0, 0)] * 6
    iv[v["a"]], iv[v["b"]], iv[v["d"]] = (0, 0), (2, 2), (4, 4)
    iv[v["c"]] = (0, 12)
    iv[v["x"]] = (5, 14)
    iv[v["y"]] = (13, 15)
    rep = IntervalRepresentation(tuple(iv))
    assert rep.realizes(CAT1.graph)
    assert not is_tidy(CAT1.graph, rep)
    out = tidy_representation(rep)
    assert out.realizes(CAT1.graph) and is_tidy_bruteforce(CAT1.graph, out)
    assert all(l0 <= l1 and r1 <= r0 for (l0, r0), (l1, r1) in zip(rep.intervals, out.intervals))


def test_compact_representations_are_tidy():
    for g in enumerate_naive(5):
        if is_interval(g):
            assert is_tidy(g, compact_representation(g))


@given(interval_graphs(max_n=6))
def test_tidy_predicate_matches_bruteforce(g):
    # a deliberately loose representation of the same graph
    rep = recognize_interval(g)
    loose = IntervalRepresentation(tuple((2 * l - (v % 2), 2 * r + (v % 3 == 0)) for v, (l, r) in enumerate(rep.intervals)))
    if loose.realizes(g):
        assert is_tidy(g, loose) == is_tidy_bruteforce(g, loose)
    src = loose if loose.realizes(g) else rep
    out = tidy_representation(src)
    assert out.realizes(g) and is_tidy_bruteforce(g, out)
    assert all(l0 <= l1 and r1 <= r0 for (l0, r0), (l1, r1) in zip(src.intervals, out.intervals))


def test_tidy_rejects_foreign_representation():
    with pytest.raises(RepresentationMismatch):
        is_tidy(Graph.complete(2), IntervalRepresentation(((0, 0), (1, 1))))


def test_clean_separation_examples():
    s = P5.set
    assert is_clean_clique_separation(P5.graph, Separation.of(s("v1"), s("v2"), s("v3 v4 v5")))
    assert is_clean_clique_separation(P5.graph, Separation.of(s("v1 v2"), s("v3"), s("v4 v5")))
    with pytest.raises(NotASeparation):
        is_clean_clique_separation(Graph.complete(3), Separation.of({0}, {1}, {2}))
    assert not is_clean_clique_separation(Graph.complete(3), Separation.of((), {0, 1, 2}, ()))


def test_clean_separation_needs_clique():
    s = P5.set
    assert not is_clean_clique_separation(P5.graph, Separation.of(s("v1"), s("v2 v4"), s("v3 v5")))


def test_non_interval_graph_raises():
    with pytest.raises(NotInterval):
        is_clean_clique_separation(C4.graph, Separation.of({0}, {1, 3}, {2}))


def _separations(g: Graph):
    for labels in product(range(3), repeat=g.n):
        parts = [frozenset(v for v in range(g.n) if labels[v] == k) for k in range(3)]
        sep = Separation.of(*parts)
        if any(g.adj[a] & sum(1 << b for b in sep.b) for a in sep.a):
            continue
        yield sep


@pytest.mark.parametrize("n", [3, 4])
def test_clean_separation_matches_representation_search(n):
    for g in enumerate_naive(n):
        if not is_interval(g):
            continue
        for sep in _separations(g):
            assert is_clean_clique_separation(g, sep) == clean_by_representations(g, sep), (g, sep)


def test_linear_order_examples():
    c4 = C4.set
    assert has_linearly_ordered_neighborhoods(C4.graph, Separation.of(c4("a"), c4("b d"), c4("c")))
    assert has_linearly_ordered_neighborhoods(P5.graph, Separation.of(range(5), (), ()))


def test_clean_separations_have_linearly_ordered_neighborhoods():
    for g in enumerate_naive(5):
        if not is_interval(g):
            continue
        for sep in _separations(g):
            if is_clean_clique_separation(g, sep):
                assert has_linearly_ordered_neighborhoods(g, sep)
