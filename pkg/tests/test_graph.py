from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings

from intrecon.canon import are_isomorphic, automorphism_count, canonical_form, colored_form
from intrecon.graph import (
    Graph,
    degree_sequence,
    from_graph6,
    neighborhood_partition,
    to_graph6,
    twin_classes,
)
from intrecon.oracle import enumerate_naive

from named import C4, P3, P5
from strategies import graph_and_perm, graphs


def test_degree_sequences():
    assert degree_sequence(Graph.complete(3)) == (2, 2, 2)
    assert degree_sequence(P5.graph) == (2, 2, 2, 1, 1)
    assert degree_sequence(Graph.empty(0)) == ()


def test_twin_classes_examples():
    assert twin_classes(Graph.empty(2)) == [(frozenset({0, 1}), "true")]
    assert twin_classes(Graph.complete(2)) == [(frozenset({0, 1}), "false")]
    got = dict(twin_classes(P3.graph))
    assert got == {P3.set("a c"): "true", frozenset({P3["b"]}): None}


@given(graphs(max_n=7))
def test_twins_swap_is_automorphism(g):
    for cls, _ in twin_classes(g):
        members = sorted(cls)
        for u, v in zip(members, members[1:]):
            perm = list(range(g.n))
            perm[u], perm[v] = v, u
            assert g.relabel(perm).adj == g.adj


def test_neighborhood_partition_examples():
    k3 = Graph.complete(3)
    assert neighborhood_partition(k3, [0]) == (frozenset({0}), frozenset({1, 2}), frozenset())
    v = P5.index
    assert neighborhood_partition(P5.graph, [v["v3"]]) == (
        frozenset({v["v3"]}), P5.set("v2 v4"), P5.set("v1 v5"))
    assert neighborhood_partition(C4.graph, range(4)) == (frozenset(range(4)), frozenset(), frozenset())


@given(graphs(max_n=7))
def test_neighborhood_partition_partitions(g):
    s = [v for v in range(g.n) if v % 3 == 0]
    a, b, c = neighborhood_partition(g, s)
    assert a | b | c == frozenset(range(g.n))
    assert not (a & b or a & c or b & c)


def test_neighborhood_partition_rejects_foreign_vertices():
    with pytest.raises(ValueError):
        neighborhood_partition(P3.graph, [7])


@given(graphs(max_n=9))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)).adj == g.adj


def test_graph6_known_strings():
    # bit-exact graph6 strings
    assert to_graph6(Graph.complete(2)) == "A_"
    assert to_graph6(Graph.empty(0)) == "?"
    assert to_graph6(Graph.path(3)) == "Bg"
    assert to_graph6(Graph.complete(4)) == "C~"


def test_canonical_form_examples():
    a, b, c = 0, 1, 2
    p3 = Graph.from_edges(3, [(a, b), (b, c)])
    relabeled = Graph.from_edges(3, [(c, a), (a, b)])
    assert canonical_form(p3) == canonical_form(relabeled)
    assert canonical_form(Graph.complete(2)) != canonical_form(Graph.empty(2))
    assert len({canonical_form(g) for g in enumerate_naive(3)}) == 4


@given(graph_and_perm(max_n=8))
def test_canonical_form_relabeling_invariant(gp):
    g, perm = gp
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


def _iso_bruteforce(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    return any(g.relabel(p).adj == h.adj for p in permutations(range(g.n)))


@settings(max_examples=150)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_agrees_with_permutation_search(g, h):
    assert are_isomorphic(g, h) == _iso_bruteforce(g, h)
    assert are_isomorphic(g, h) == (canonical_form(g) == canonical_form(h))


def test_isomorphism_examples():
    assert are_isomorphic(C4.graph, C4.graph.relabel([2, 0, 3, 1]))
    p4 = Graph.path(4)
    k1k3 = Graph.from_edges(4, [(1, 2), (2, 3), (1, 3)])
    assert not are_isomorphic(p4, k1k3)
    assert not are_isomorphic(Graph.complete(2), Graph.empty(2))


def test_automorphism_counts():
    assert automorphism_count(Graph.complete(4)) == 24
    assert automorphism_count(Graph.path(5)) == 2
    assert automorphism_count(Graph.cycle(5)) == 10


@given(graph_and_perm(max_n=7))
def test_colored_form_respects_colors(gp):
    g, perm = gp
    colors = [v % 2 for v in range(g.n)]
    moved = [0] * g.n
    for v in range(g.n):
        moved[perm[v]] = colors[v]
    assert colored_form(g, colors) == colored_form(g.relabel(perm), moved)
