"""The seven acceptance criteria.  Each test records one pass/fail line,
printed in the terminal summary.  All comparisons are exact (tolerance 0)."""

from __future__ import annotations

import pytest

from intrecon.canon import canonical_form
from intrecon.deck import (
    deck,
    flank_sizes,
    flank_sizes_direct,
    multiset_E,
    multiset_E_direct,
    outsider_sizes,
    outsider_sizes_direct,
    q1_cards,
    q1_cards_direct,
    q_ge2_cards,
    q_ge2_cards_direct,
)
from intrecon.errors import IntreconError
from intrecon.graph import Graph
from intrecon.interval import is_interval
from intrecon.oracle import (
    connected_interval_graphs,
    enumerate_graphs,
    graphs_with_deck,
    labeled_mass,
    verify_lemma_suite,
    verify_theorem,
)
from intrecon.reconstruct import reconstruct

from _definitional import is_interval_by_definition
from _method_oracle import expected_method

# pinned tolerances and counts
TOLERANCE = 0  # every comparison below is exact
GRAPHS_ON_SEVEN = 1044
MIN_INVARIANTS = 15
ORDERS_THEOREM = range(3, 9)
ORDERS_RECONSTRUCT = range(3, 9)
ORDERS_ORACLE_CROSSCHECK = range(3, 8)
ORDERS_LEMMAS = range(1, 9)
ORDERS_DECK = range(3, 9)
ORDERS_MASS = range(0, 7)


@pytest.fixture
def record(acceptance_results):
    def put(k: int, ok: bool, detail: str) -> None:
        acceptance_results[k] = (ok, detail)
        assert ok, detail
    return put


def test_criterion_1_no_deck_collisions(record):
    found = {}
    for n in ORDERS_THEOREM:
        report = verify_theorem(n)
        found[n] = (report.mode, report.checked, len(report.collisions))
    bad = {n: v for n, v in found.items() if v[2] != TOLERANCE}
    detail = "; ".join(f"n={n} {m} checked={c} collisions={k}" for n, (m, c, k) in found.items())
    record(1, not bad, detail)


def test_criterion_2_reconstructor_soundness(record):
    wrong, errors, dishonest, oracle_mismatch, total = [], [], [], [], 0
    for n in ORDERS_RECONSTRUCT:
        for g in connected_interval_graphs(n):
            total += 1
            c = canonical_form(g)
            d = deck(g)
            try:
                r = reconstruct(d)
            except IntreconError as exc:
                errors.append((c, type(exc).__name__))
                continue
            if canonical_form(r.graph) != c:
                wrong.append(c)
            if r.method != expected_method(g) or not r.trace:
                dishonest.append((c, r.method))
            if n in ORDERS_ORACLE_CROSSCHECK and graphs_with_deck(d) != {c}:
                oracle_mismatch.append(c)
    ok = not (wrong or errors or dishonest or oracle_mismatch)
    record(2, ok, f"{total} graphs, wrong={len(wrong)} errors={len(errors)} "
                  f"method-mismatch={len(dishonest)} oracle-mismatch={len(oracle_mismatch)}"
                  + (f" first={(wrong + errors + dishonest + oracle_mismatch)[0]}" if not ok else ""))


def test_criterion_3_two_vertex_counterexample(record):
    k2, e2 = Graph.complete(2), Graph.empty(2)
    got = graphs_with_deck(deck(k2))
    record(3, got == {canonical_form(k2), canonical_form(e2)}, f"graphs with deck(K2): {sorted(got)}")


def test_criterion_4_lemma_suite(record):
    failures, names = [], set()
    for n in ORDERS_LEMMAS:
        report = verify_lemma_suite(n)
        names |= set(report.results)
        failures += [(n, k, r["counterexample"]) for k, r in report.results.items() if r["failed"]]
    ok = not failures and len(names) >= MIN_INVARIANTS
    record(4, ok, f"{len(names)} invariants, n=1..8, failures={failures[:3]}")


def test_criterion_5_deck_invariants(record):
    checks = {
        "flank_sizes": (flank_sizes, flank_sizes_direct, False),
        "multiset_E": (multiset_E, multiset_E_direct, False),
        "outsider_sizes": (outsider_sizes, outsider_sizes_direct, True),
        "q_ge2_cards": (q_ge2_cards, q_ge2_cards_direct, True),
        "q1_cards": (q1_cards, q1_cards_direct, True),
    }
    counts = {k: 0 for k in checks}
    bad = []
    for n in ORDERS_DECK:
        for g in connected_interval_graphs(n):
            d = deck(g)
            outsider_case = not g.universal_vertices() and 0 in flank_sizes_direct(g)
            for name, (from_deck, direct, needs_outsiders) in checks.items():
                if needs_outsiders and not outsider_case:
                    continue
                counts[name] += 1
                if from_deck(d) != direct(g):
                    bad.append((name, canonical_form(g)))
    record(5, not bad, f"compared {counts}, disagreements={len(bad)}" + (f" first={bad[0]}" if bad else ""))


def test_criterion_6_recognition_agreement(record):
    graphs = list(enumerate_graphs(7))
    bad = [canonical_form(g) for g in graphs if is_interval(g) != is_interval_by_definition(g)]
    ok = len(graphs) == GRAPHS_ON_SEVEN and not bad
    record(6, ok, f"{len(graphs)} graphs on 7 vertices, disagreements={len(bad)}")


def test_criterion_7_labeled_mass(record):
    rows = {n: (labeled_mass(list(enumerate_graphs(n))), 2 ** (n * (n - 1) // 2)) for n in ORDERS_MASS}
    bad = {n: v for n, v in rows.items() if v[0] - v[1] != TOLERANCE}
    record(7, not bad, "; ".join(f"n={n} {m}={w}" for n, (m, w) in rows.items()))
