from __future__ import annotations

import pytest

from intrecon.assembly import (
    AnnotatedGraph,
    annotated_isomorphic,
    annotated_parts,
    assemble,
    distant_vertex_candidates,
    distant_vertex_recover,
)
from intrecon.canon import canonical_form
from intrecon.errors import IncompatibleParts, NotClean
from intrecon.graph import Graph, mask_of
from intrecon.interval import Separation, is_clean_clique_separation
from intrecon.oracle import connected_interval_graphs

from named import DBL, P5


def _edge(label_of_second: int) -> AnnotatedGraph:
    return AnnotatedGraph(Graph.complete(2), (None, label_of_second))


def _dbl_flank_sep() -> Separation:
    s = DBL.set
    return Separation.of(s("x2"), s("x1"), s("m a b y1 y2"))


def _p5_sep() -> Separation:
    s = P5.set
    return Separation.of(s("v1"), s("v2"), s("v3 v4 v5"))


def test_dbl_flank_parts():
    ha, hb = annotated_parts(DBL.graph, _dbl_flank_sep())
    assert annotated_isomorphic(ha, _edge(2))
    assert sorted(ha.labels, key=lambda a: -1 if a is None else a) == [None, 2]
    assert hb.graph.n == 6 and sorted(a for a in hb.labels if a is not None) == [2]
    rest = DBL.graph.induced(sorted(DBL.set("m a b y1 y2 x1")))
    assert canonical_form(hb.graph) == canonical_form(rest)


def test_p5_parts():
    ha, hb = annotated_parts(P5.graph, _p5_sep())
    assert annotated_isomorphic(ha, _edge(2))
    path = AnnotatedGraph(Graph.path(4), (2, None, None, None))
    assert annotated_isomorphic(hb, path)


def test_parts_need_a_separator():
    s = P5.set
    with pytest.raises(NotClean):
        annotated_parts(P5.graph, Separation.of(s("v1 v2 v3 v4 v5"), (), ()))


def test_annotated_isomorphism():
    h = _edge(2)
    assert annotated_isomorphic(h, h)
    assert not annotated_isomorphic(h, _edge(3))
    ha, _ = annotated_parts(DBL.graph, _dbl_flank_sep())
    swapped = AnnotatedGraph(Graph.complete(2), (2, None))
    assert annotated_isomorphic(ha, swapped)


def test_annotated_json_round_trip():
    _, hb = annotated_parts(DBL.graph, _dbl_flank_sep())
    back = AnnotatedGraph.from_json(hb.to_json())
    assert back == hb


def test_assemble_round_trips():
    assert canonical_form(assemble(*annotated_parts(P5.graph, _p5_sep()))) == canonical_form(P5.graph)
    assert canonical_form(assemble(*annotated_parts(DBL.graph, _dbl_flank_sep()))) == canonical_form(DBL.graph)


def test_assemble_rejects_degenerate_parts():
    lone = AnnotatedGraph(Graph.empty(1), (0,))
    with pytest.raises(IncompatibleParts):
        assemble(lone, lone)


def test_assemble_rejects_mismatched_annotations():
    with pytest.raises(IncompatibleParts):
        assemble(_edge(2), _edge(3))


def test_distant_vertex_recovery_examples():
    # card of v5: the remaining path keeps v1..v4 as 0..3
    card = P5.graph.remove_vertex(P5["v5"])
    got = distant_vertex_recover(card, [0], [1], [2])
    assert annotated_isomorphic(got, _edge(2))
    keep = [v for v in range(DBL.graph.n) if v != DBL["y2"]]
    pos = {v: i for i, v in enumerate(keep)}
    card = DBL.graph.remove_vertex(DBL["y2"])
    got = distant_vertex_recover(card, [pos[DBL["x2"]]], [pos[DBL["x1"]]], [2])
    want, _ = annotated_parts(DBL.graph, _dbl_flank_sep())
    assert annotated_isomorphic(got, want)


def _clean_closed_separations(g: Graph):
    for s in range(1, 1 << g.n):
        a = [v for v in range(g.n) if s >> v & 1]
        c = g.open_nbhd(a)
        b = set(range(g.n)) - set(a) - c
        if not c or not b:
            continue
        # C must be a clique
        cm = mask_of(c)
        if any(g.adj[v] & cm != cm & ~(1 << v) for v in c):
            continue
        sep = Separation.of(a, c, b)
        if is_clean_clique_separation(g, sep):
            yield sep


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_assemble_inverts_every_clean_separation(n):
    for g in connected_interval_graphs(n):
        for sep in _clean_closed_separations(g):
            assert canonical_form(assemble(*annotated_parts(g, sep))) == canonical_form(g)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_distant_vertex_candidates_contain_the_true_part(n):
    for g in connected_interval_graphs(n):
        for sep in _clean_closed_separations(g):
            want, _ = annotated_parts(g, sep)
            movable = [b for b in sep.b if g.remove_vertex(b).is_connected()]
            if not movable:
                continue
            low = min(len(g.neighbors(b) & sep.c) for b in movable)
            for b in movable:
                if len(g.neighbors(b) & sep.c) != low:
                    continue
                pos = {v: i for i, v in enumerate(v for v in range(g.n) if v != b)}
                nd = [g.degree(u) for u in g.neighbors(b)]
                cands = distant_vertex_candidates(g.remove_vertex(b), [pos[v] for v in sep.a],
                                                  [pos[v] for v in sep.c], nd)
                assert any(annotated_isomorphic(want, h) for h in cands)
