from __future__ import annotations

import pytest

from intrecon.canon import canonical_form
from intrecon.deck import deck
from intrecon.errors import OrderTooSmall, SizeLimitExceeded
from intrecon.graph import Graph
from intrecon.interval import is_interval
from intrecon.oracle import (
    enumerate_graphs,
    enumerate_interval_graphs,
    enumerate_naive,
    enumeration_report,
    graphs_with_deck,
    labeled_mass,
    verify_lemma_suite,
    verify_theorem,
)

from named import P5

# unlabeled graph counts by order
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]


@pytest.mark.parametrize("n", range(0, 7))
def test_enumeration_matches_naive_sweep(n):
    fast = [canonical_form(g) for g in enumerate_graphs(n)]
    assert len(fast) == len(set(fast)) == GRAPH_COUNTS[n]
    assert sorted(fast) == sorted(canonical_form(g) for g in enumerate_naive(n))


def test_enumeration_examples():
    assert len(list(enumerate_graphs(3))) == 4
    assert len(list(enumerate_graphs(4))) == 11
    assert [g.n for g in enumerate_graphs(0)] == [0]
    assert len(list(enumerate_interval_graphs(2))) == 2
    assert len(list(enumerate_interval_graphs(3))) == 4
    assert len(list(enumerate_interval_graphs(4))) == 10


@pytest.mark.parametrize("n", range(1, 7))
def test_interval_enumeration_is_the_filter(n):
    fast = sorted(canonical_form(g) for g in enumerate_interval_graphs(n))
    assert fast == sorted(canonical_form(g) for g in enumerate_graphs(n) if is_interval(g))


@pytest.mark.parametrize("n", range(0, 6))
def test_labeled_mass(n):
    assert labeled_mass(list(enumerate_graphs(n))) == 2 ** (n * (n - 1) // 2)


def test_size_limits():
    with pytest.raises(SizeLimitExceeded):
        enumerate_graphs(10)
    with pytest.raises(SizeLimitExceeded):
        enumerate_interval_graphs(11)
    with pytest.raises(SizeLimitExceeded):
        verify_lemma_suite(9)


def test_parallel_enumeration_is_deterministic():
    one = [canonical_form(g) for g in enumerate_graphs(6)]
    two = [canonical_form(g) for g in enumerate_graphs(6, jobs=2)]
    assert one == two


def test_enumeration_report():
    counts = enumeration_report(4).counts
    assert counts == {"graphs": 11, "connected": 6, "interval": 10, "connected_interval": 5}


def test_graphs_with_deck_examples():
    k2, e2 = Graph.complete(2), Graph.empty(2)
    assert graphs_with_deck(deck(k2)) == {canonical_form(k2), canonical_form(e2)}
    assert graphs_with_deck(deck(P5.graph)) == {canonical_form(P5.graph)}
    k3 = Graph.complete(3)
    assert graphs_with_deck(deck(k3)) == {canonical_form(k3)}


@pytest.mark.parametrize("n", range(1, 6))
def test_graphs_with_deck_contains_the_graph(n):
    for g in enumerate_graphs(n):
        assert canonical_form(g) in graphs_with_deck(deck(g))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_no_collisions_small(n):
    report = verify_theorem(n)
    assert report.collisions == [] and report.checked == GRAPH_COUNTS[n]


def test_theorem_needs_three_vertices():
    with pytest.raises(OrderTooSmall):
        verify_theorem(2)


@pytest.mark.parametrize("n", [1, 4, 6])
def test_lemma_suite_passes(n):
    report = verify_lemma_suite(n)
    assert report.ok
    assert len(report.results) >= 15
    assert all(r["counterexample"] is None for r in report.results.values())


def test_lemma_suite_is_vacuous_at_one_vertex():
    report = verify_lemma_suite(1)
    assert report.graphs == 1
    # deck procedures need three vertices
    assert report.results["flank-sizes-from-deck"]["skipped"] == 1
