"""Bulk, flanks, one-sided classes and outsiders of interval graphs.

Vertex sets are ``frozenset``s of vertex indices.  Where two parts play
symmetric roles (two flanks, two one-sided classes) they are ordered by size,
larger first, with ties broken by the colored certificate of the graph with
that part marked.  This makes reports deterministic and isomorphism-invariant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .canon import colored_form
from .errors import (
    DegreeTooSmall,
    HasUniversalVertex,
    InvalidVertexSet,
    NotConnected,
    NotInterval,
)
from .graph import Graph, bits, mask_of, popcount, twin_classes
from .interval import (
    IntervalRepresentation,
    clique_ordering,
    compact_representation,
    tidy_representation,
)

VertexSet = frozenset

EMPTY: frozenset[int] = frozenset()


def _require_interval(g: Graph) -> None:
    if clique_ordering(g) is None:
        from .interval import _witness

        raise NotInterval(_witness(g))


def _require_connected_interval(g: Graph) -> None:
    if not g.is_connected():
        raise NotConnected("graph is not connected")
    _require_interval(g)


def _require_no_universal(g: Graph) -> None:
    if g.universal_vertices():
        raise HasUniversalVertex("graph has a universal vertex")


def tidy_rep(g: Graph) -> IntervalRepresentation:
    """A tidy interval representation of ``g``."""
    return tidy_representation(compact_representation(g))


# neighborhood containment ----------------------------------------------


def non_neighborhood_contained(g: Graph) -> frozenset[int]:
    """Vertices ``v`` such that no ``w`` has ``N[w]`` strictly inside ``N[v]``."""
    closed = [g.closed_mask(v) for v in range(g.n)]
    out = []
    for v in range(g.n):
        cv = closed[v]
        if not any(closed[w] != cv and closed[w] & ~cv == 0 for w in range(g.n)):
            out.append(v)
    return frozenset(out)


def maximal_neighborhood_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose closed neighborhood lies strictly inside no other one.

    These are the vertices not contained by a vertex of larger degree, the
    set the maximum-degree ordering is defined on.
    """
    closed = [g.closed_mask(v) for v in range(g.n)]
    out = []
    for v in range(g.n):
        cv = closed[v]
        if not any(closed[w] != cv and cv & ~closed[w] == 0 for w in range(g.n)):
            out.append(v)
    return frozenset(out)


# ordering of maximal-neighborhood vertices --------------------------------


@dataclass(frozen=True)
class MaxDegreeOrder:
    classes: tuple[frozenset[int], ...]

    def vertices(self) -> list[int]:
        return [v for c in self.classes for v in sorted(c)]

    def reversed(self) -> "MaxDegreeOrder":
        return MaxDegreeOrder(tuple(reversed(self.classes)))


def _order_by_rep(g: Graph, vs: Iterable[int], rep: IntervalRepresentation) -> MaxDegreeOrder:
    iv = rep.intervals
    ordered = sorted(vs, key=lambda v: (iv[v][0], iv[v][1], v))
    classes: list[list[int]] = []
    index: dict[int, int] = {}
    for v in ordered:
        key = g.closed_mask(v)
        if key in index:
            classes[index[key]].append(v)
        else:
            index[key] = len(classes)
            classes.append([v])
    return MaxDegreeOrder(tuple(frozenset(c) for c in classes))


def max_degree_order(
    g: Graph, vs: Iterable[int], rep: IntervalRepresentation | None = None
) -> MaxDegreeOrder:
    """Linear order of twin classes of ``vs`` following a tidy representation."""
    _require_connected_interval(g)
    vs = frozenset(vs)
    if not vs <= maximal_neighborhood_vertices(g):
        raise InvalidVertexSet("vertex set contains a vertex with a strictly larger neighbour")
    if rep is None:
        rep = tidy_rep(g)
    return _order_by_rep(g, vs, rep)


def bordering_vertices(g: Graph) -> frozenset[int]:
    """Union of the extremal twin classes of the maximum-degree order."""
    _require_connected_interval(g)
    if g.num_edges() == 0:
        return frozenset(g.vertices)
    order = max_degree_order(g, g.max_degree_vertices())
    return order.classes[0] | order.classes[-1]


# sides and the relation on far vertices ---------------------------------


def approx_classes(g: Graph, s: Iterable[int]) -> list[frozenset[int]]:
    """Classes of ``V \\ N[S]`` under "closed neighborhoods meet", transitively.

    Two far vertices are related when they are at distance at most two in
    ``g``; the path may run through ``N[S]``.
    """
    far = g.full_mask & ~g.closed_nbhd_mask(mask_of(s))
    out: list[frozenset[int]] = []
    seen = 0
    for v in bits(far):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            reach = g.closed_nbhd_mask(g.closed_nbhd_mask(frontier)) & far & ~comp
            comp |= reach
            frontier = reach
        seen |= comp
        out.append(frozenset(bits(comp)))
    return out


def sides(g: Graph, s: int) -> list[frozenset[int]]:
    """Sides of ``s``: classes of far vertices within the component of ``s``."""
    if g.degree(s) < g.max_degree() - 1:
        raise DegreeTooSmall(f"deg({s}) = {g.degree(s)} < max degree - 1")
    comp = next(c for c in g.component_masks() if c >> s & 1)
    order = sorted(bits(comp))
    h = g.induced(order)
    return [frozenset(order[i] for i in c) for c in approx_classes(h, [order.index(s)])]


# coating and span ---------------------------------------------------------


def coating(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices on induced paths joining two (possibly equal) vertices of ``S``."""
    sm = mask_of(s)
    out = sm
    for start in bits(sm):
        stack = [(1 << start, start)]
        while stack:
            path, last = stack.pop()
            if last != start and sm >> last & 1:
                out |= path
            for w in bits(g.adj[last] & ~path):
                # an extension keeps the path induced iff w sees only ``last``
                if g.adj[w] & path & ~(1 << last) == 0:
                    stack.append((path | 1 << w, w))
    return frozenset(bits(out))


def coating_bruteforce(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Subset enumeration oracle for :func:`coating`; exponential in ``n``."""
    sm = mask_of(s)
    out = sm
    for sub in range(1, 1 << g.n):
        k = popcount(sub)
        degs = [popcount(g.adj[v] & sub) for v in bits(sub)]
        if k >= 2:
            if sum(degs) != 2 * (k - 1) or max(degs) > 2 or not g.is_connected(bits(sub)):
                continue
            ends = mask_of(v for v in bits(sub) if popcount(g.adj[v] & sub) == 1)
            if ends & ~sm == 0:
                out |= sub
    return frozenset(bits(out))


def span(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """``{v in N[coat] : N[v] inside N[coat]}`` for the coating ``coat`` of ``S``."""
    cov = g.closed_nbhd_mask(mask_of(coating(g, s)))
    return frozenset(v for v in bits(cov) if g.closed_mask(v) & ~cov == 0)


def bulk(g: Graph) -> frozenset[int]:
    _require_connected_interval(g)
    return span(g, g.max_degree_vertices())


# canonical ordering of symmetric pairs -----------------------------------


def _mark_key(g: Graph, part: frozenset[int]) -> tuple:
    return (-len(part), colored_form(g, [1 if v in part else 0 for v in range(g.n)]))


def _ordered_pair(g: Graph, parts: list[frozenset[int]]) -> tuple[frozenset[int], frozenset[int]]:
    parts = [p for p in parts if p]
    if len(parts) > 2:
        raise AssertionError("more than two parts")
    parts.sort(key=lambda p: _mark_key(g, p))
    parts += [EMPTY] * (2 - len(parts))
    return parts[0], parts[1]


def flanks(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """The at most two flanks, larger first."""
    return _ordered_pair(g, approx_classes(g, bulk(g)))


def flank_vertices(g: Graph) -> frozenset[int]:
    b = mask_of(bulk(g))
    return frozenset(bits(g.full_mask & ~g.closed_nbhd_mask(b)))


# one-sided classes and outsiders ---------------------------------------------


def one_sided_vertices(g: Graph) -> frozenset[int]:
    """Maximum-degree vertices with at most one side."""
    return frozenset(z for z in g.max_degree_vertices() if len(sides(g, z)) <= 1)


def _twin_split(g: Graph, vs: frozenset[int]) -> list[frozenset[int]]:
    by_nbhd: dict[int, set[int]] = {}
    for v in vs:
        by_nbhd.setdefault(g.closed_mask(v), set()).add(v)
    return [frozenset(c) for c in by_nbhd.values()]


def one_sided_max_classes(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    _require_connected_interval(g)
    _require_no_universal(g)
    return _ordered_pair(g, _twin_split(g, one_sided_vertices(g)))


def outsiders_of(g: Graph, a: Iterable[int]) -> frozenset[int]:
    """``{o : N[o] inside span(A)}``, or empty for empty ``A``."""
    a = frozenset(a)
    if not a:
        return EMPTY
    sp = mask_of(span(g, a))
    return frozenset(o for o in range(g.n) if g.closed_mask(o) & ~sp == 0)


def outsiders(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    a1, a2 = one_sided_max_classes(g)
    return outsiders_of(g, a1), outsiders_of(g, a2)


def a_infinity(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Chain closure of the one-sided classes through maximum-degree vertices.

    Membership uses steps ``u -> w`` between maximum-degree vertices with
    ``|N[u] \\ N[w]| = 1``; the class of ``A_i`` is what is reachable from
    ``A_i`` with steps of size at most one, restricted to the chain set.
    Both classes may coincide.
    """
    _require_interval(g)
    if g.universal_vertices():
        return EMPTY, EMPTY
    vd = sorted(g.max_degree_vertices())
    closed = {v: g.closed_mask(v) for v in vd}

    def step(u: int, w: int) -> int:
        return popcount(closed[u] & ~closed[w])

    def reach(start: Iterable[int], limit_eq: bool) -> set[int]:
        seen = set(start)
        todo = list(seen)
        while todo:
            u = todo.pop()
            for w in vd:
                if w in seen:
                    continue
                k = step(u, w)
                if k == 1 or (not limit_eq and k == 0):
                    seen.add(w)
                    todo.append(w)
        return seen

    a = [z for z in vd if len(sides(g, z)) <= 1]
    chain = reach(a, True)
    if g.is_connected():
        a1, a2 = _ordered_pair(g, _twin_split(g, frozenset(a)))
    else:
        parts = _twin_split(g, frozenset(a))
        a1 = parts[0] if parts else EMPTY
        a2 = parts[1] if len(parts) > 1 else EMPTY
    out = []
    for ai in (a1, a2):
        out.append(frozenset(reach(ai, False) & chain) if ai else EMPTY)
    return out[0], out[1]


# reports --------------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    bulk: frozenset[int]
    flanks: tuple[frozenset[int], frozenset[int]]
    one_sided_classes: tuple[frozenset[int], frozenset[int]]
    outsiders: tuple[frozenset[int], frozenset[int]]
    bordering: frozenset[int]

    def to_dict(self) -> dict:
        def pair(p: tuple[frozenset[int], frozenset[int]]) -> list[list[int]]:
            return [sorted(p[0]), sorted(p[1])]

        return {
            "bulk": sorted(self.bulk),
            "flanks": pair(self.flanks),
            "one_sided_classes": pair(self.one_sided_classes),
            "outsiders": pair(self.outsiders),
            "bordering": sorted(self.bordering),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def structure_report(g: Graph) -> StructureReport:
    _require_connected_interval(g)
    _require_no_universal(g)
    a = one_sided_max_classes(g)
    return StructureReport(
        bulk=bulk(g),
        flanks=flanks(g),
        one_sided_classes=a,
        outsiders=(outsiders_of(g, a[0]), outsiders_of(g, a[1])),
        bordering=bordering_vertices(g),
    )


def separation_of(g: Graph, s: Iterable[int]):
    """The ordered partition ``(S, N(S), V \\ N[S])``."""
    from .interval import Separation

    sm = mask_of(s)
    closed = g.closed_nbhd_mask(sm)
    return Separation.of(bits(sm), bits(closed & ~sm), bits(g.full_mask & ~closed))


def twin_classes_of_max_degree(g: Graph) -> list[frozenset[int]]:
    return [c for c, _ in twin_classes(g) if c & g.max_degree_vertices()]
