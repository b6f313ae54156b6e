"""Annotated parts of clean clique separations, gluing, and part recovery.

An annotated graph carries, per vertex, either its degree in some host graph
or ``None`` (unannotated).  The parts of a clean clique separation ``(A, C, B)``
are ``G[A | C]`` and ``G[B | C]`` with exactly the vertices of ``C`` annotated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .canon import colored_form
from .errors import IncompatibleParts, NotClean, NotLinearlyOrdered, PreconditionUnverifiable
from .graph import Graph, from_graph6, mask_of, to_graph6
from .interval import Separation, clique_ordering, is_clean_clique_separation

Annotation = tuple  # per-vertex int or None


@dataclass(frozen=True)
class AnnotatedGraph:
    graph: Graph
    labels: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise ValueError("one annotation per vertex required")

    @property
    def annotated(self) -> list[int]:
        return [v for v, a in enumerate(self.labels) if a is not None]

    @property
    def unannotated(self) -> list[int]:
        return [v for v, a in enumerate(self.labels) if a is None]

    def certificate(self) -> tuple:
        return colored_form(self.graph, [-1 if a is None else a for a in self.labels])

    def to_dict(self) -> dict:
        return {"g6": to_graph6(self.graph), "annotations": list(self.labels)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "AnnotatedGraph":
        return cls(from_graph6(data["g6"]), tuple(data["annotations"]))

    @classmethod
    def from_json(cls, text: str) -> "AnnotatedGraph":
        return cls.from_dict(json.loads(text))


def annotated_isomorphic(h1: AnnotatedGraph, h2: AnnotatedGraph) -> bool:
    if h1.graph.n != h2.graph.n or sorted(h1.labels, key=_label_key) != sorted(h2.labels, key=_label_key):
        return False
    return h1.certificate() == h2.certificate()


def _label_key(a: int | None) -> int:
    return -1 if a is None else a


def annotated_part(g: Graph, keep: Iterable[int], c: Iterable[int]) -> AnnotatedGraph:
    """``G[keep | C]`` with the vertices of ``C`` annotated by their degree in ``g``."""
    cs = set(c)
    order = sorted(set(keep) | cs)
    return AnnotatedGraph(g.induced(order), tuple(g.degree(v) if v in cs else None for v in order))


def annotated_parts(g: Graph, sep: Separation) -> tuple[AnnotatedGraph, AnnotatedGraph]:
    if not sep.c or not is_clean_clique_separation(g, sep):
        raise NotClean("not a clean clique separation")
    return annotated_part(g, sep.a, sep.c), annotated_part(g, sep.b, sep.c)


def _check_chain(h: AnnotatedGraph) -> None:
    rest = mask_of(h.unannotated)
    nbhds = sorted((h.graph.adj[c] & rest for c in h.annotated), key=lambda m: bin(m).count("1"))
    for x, y in zip(nbhds, nbhds[1:]):
        if x & ~y:
            raise NotLinearlyOrdered("neighborhoods into the remainder are not nested")


def assemble(ha: AnnotatedGraph, hb: AnnotatedGraph) -> Graph:
    """Glue two annotated parts along their annotated cliques.

    Annotated vertices of equal annotation are paired so that part degrees add
    up to the annotation; by nestedness, ties are twins and any pairing works.
    Vertex order of the result: remainder of ``ha``, the clique, remainder of
    ``hb``.
    """
    ca, cb = ha.annotated, hb.annotated
    if not ca or len(ca) != len(cb):
        raise IncompatibleParts("annotated vertex sets differ in size or are empty")
    if sorted(ha.labels[v] for v in ca) != sorted(hb.labels[v] for v in cb):
        raise IncompatibleParts("annotation multisets differ")
    if not ha.unannotated or not hb.unannotated:
        raise IncompatibleParts("a part has nothing outside the clique")
    for h in (ha, hb):
        cm = mask_of(h.annotated)
        if any(h.graph.adj[c] & cm != cm & ~(1 << c) for c in h.annotated):
            raise IncompatibleParts("annotated vertices do not form a clique")
        _check_chain(h)
    k = len(ca)
    sa = sorted(ca, key=lambda v: (ha.labels[v], ha.graph.degree(v)))
    sb = sorted(cb, key=lambda v: (hb.labels[v], -hb.graph.degree(v)))
    for x, y in zip(sa, sb):
        if ha.labels[x] != hb.labels[y]:
            raise IncompatibleParts("annotations cannot be paired")
        if ha.graph.degree(x) + hb.graph.degree(y) - (k - 1) != ha.labels[x]:
            raise IncompatibleParts("part degrees do not add up to the annotation")
    ra, rb = ha.unannotated, hb.unannotated
    index_a = {v: i for i, v in enumerate(ra)}
    index_a.update({x: len(ra) + i for i, x in enumerate(sa)})
    index_b = {y: len(ra) + i for i, y in enumerate(sb)}
    index_b.update({v: len(ra) + k + i for i, v in enumerate(rb)})
    edges = {tuple(sorted((index_a[u], index_a[v]))) for u, v in ha.graph.edges()}
    edges |= {tuple(sorted((index_b[u], index_b[v]))) for u, v in hb.graph.edges()}
    g = Graph.from_edges(len(ra) + k + len(rb), edges)
    sep = Separation.of(range(len(ra)), range(len(ra), len(ra) + k), range(len(ra) + k, g.n))
    got = annotated_parts(g, sep) if is_clean_clique_separation(g, sep) else None
    if got is None or not (annotated_isomorphic(got[0], ha) and annotated_isomorphic(got[1], hb)):
        raise IncompatibleParts("glued graph does not reproduce the parts")
    return g


# recovery of the far part from a card ----------------------------------------


def distant_vertex_candidates(card: Graph, a: Iterable[int], c: Iterable[int],
                              neighbor_degrees: Sequence[int]) -> list[AnnotatedGraph]:
    """All ``H_A`` obtainable by putting the removed vertex ``b`` back.

    ``card = G - b`` with ``A`` and ``C`` located; ``b`` lies in ``B`` and its
    clique neighbors are as few as possible among vertices of ``B`` whose
    removal keeps the graph connected.  Candidates are deduplicated up to
    annotated isomorphism.
    """
    a, c = frozenset(a), frozenset(c)
    rest = [v for v in range(card.n) if v not in a and v not in c]
    rest_mask = mask_of(rest)
    # clique vertices seeing all of B - b; only these may be adjacent to b
    x = [v for v in sorted(c) if card.adj[v] & rest_mask == rest_mask]
    pool = x + rest
    nd = tuple(sorted(neighbor_degrees))
    degs = card.degrees()
    found: dict[tuple, AnnotatedGraph] = {}
    for nbrs in combinations(pool, len(nd)):
        if tuple(sorted(degs[u] + 1 for u in nbrs)) != nd:
            continue
        g = card.add_vertex(nbrs)
        b = g.n - 1
        sep = Separation.of(a, c, rest + [b])
        if not g.is_connected() or clique_ordering(g) is None:
            continue
        if not is_clean_clique_separation(g, sep):
            continue
        own = len(set(nbrs) & c)
        if any(bin(g.adj[w] & mask_of(c)).count("1") < own
               for w in rest if g.remove_vertex(w).is_connected()):
            continue
        h = annotated_part(g, a, c)
        found.setdefault(h.certificate(), h)
    return [found[k] for k in sorted(found)]


def distant_vertex_recover(card: Graph, a: Iterable[int], c: Iterable[int],
                           neighbor_degrees: Sequence[int]) -> AnnotatedGraph:
    """``H_A`` of the host graph, read from the card of a distant vertex of ``B``."""
    cands = distant_vertex_candidates(card, a, c, neighbor_degrees)
    if len(cands) != 1:
        raise PreconditionUnverifiable(f"{len(cands)} candidate parts; location or minimality fails")
    return cands[0]
