"""Interval graph recognition and interval representations.

Recognition: Lex-BFS gives a candidate perfect elimination ordering; if it is
one, the maximal cliques are read off it and a consecutive clique ordering is
searched for with a memoised depth-first search over (placed cliques, last
clique).  A representation maps each vertex to the index range of the cliques
containing it.  Failures are explained by an explicit witness: a chordless
cycle of length at least four or an asteroidal triple.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import NotASeparation, NotInterval, RepresentationMismatch
from .graph import Graph, bits, mask_of, popcount


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed integer intervals ``intervals[v] = (l_v, r_v)``."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for v, (l, r) in enumerate(self.intervals):
            if l > r:
                raise ValueError(f"empty interval for vertex {v}: [{l}, {r}]")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def graph(self) -> Graph:
        iv = self.intervals
        edges = [
            (u, v) for u, v in combinations(range(len(iv)), 2)
            if iv[u][0] <= iv[v][1] and iv[v][0] <= iv[u][1]
        ]
        return Graph.from_edges(len(iv), edges)

    def realizes(self, g: Graph) -> bool:
        return self.n == g.n and self.graph().adj == g.adj

    def endpoints(self) -> set[int]:
        return {x for iv in self.intervals for x in iv}

    def to_json(self) -> str:
        return json.dumps([[v, l, r] for v, (l, r) in enumerate(self.intervals)])

    @classmethod
    def from_json(cls, text: str) -> "IntervalRepresentation":
        rows = json.loads(text)
        out: dict[int, tuple[int, int]] = {}
        for v, l, r in rows:
            out[int(v)] = (int(l), int(r))
        if sorted(out) != list(range(len(out))):
            raise ValueError("vertices must be exactly 0..n-1")
        return cls(tuple(out[v] for v in range(len(out))))


@dataclass(frozen=True)
class Separation:
    a: frozenset[int]
    c: frozenset[int]
    b: frozenset[int]

    @classmethod
    def of(cls, a: Iterable[int], c: Iterable[int], b: Iterable[int]) -> "Separation":
        return cls(frozenset(a), frozenset(c), frozenset(b))


# chordality ---------------------------------------------------------------


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS order (partition refinement form)."""
    order: list[int] = []
    parts: list[list[int]] = [list(range(g.n))] if g.n else []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        new_parts: list[list[int]] = []
        for p in parts:
            inside = [u for u in p if g.adj[v] >> u & 1]
            outside = [u for u in p if not g.adj[v] >> u & 1]
            if inside:
                new_parts.append(inside)
            if outside:
                new_parts.append(outside)
        parts = new_parts
    return order


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """A perfect elimination ordering if ``g`` is chordal, else ``None``."""
    peo = lex_bfs(g)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in bits(g.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=pos.__getitem__)
        rest = mask_of(u for u in later if u != p)
        if rest & ~g.adj[p]:
            return None
    return peo


def find_chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    """An induced cycle of length >= 4, or ``None`` if ``g`` is chordal."""
    for v in range(g.n):
        nv = list(bits(g.adj[v]))
        for a, b in combinations(nv, 2):
            if g.adj[a] >> b & 1:
                continue
            allowed = (g.full_mask & ~g.closed_mask(v)) | (1 << a) | (1 << b)
            path = _shortest_path(g, a, b, allowed)
            if path is not None:
                return (v, *path)
    return None


def _shortest_path(g: Graph, s: int, t: int, allowed: int) -> list[int] | None:
    prev = {s: -1}
    frontier = [s]
    while frontier:
        nxt = []
        for x in frontier:
            for y in bits(g.adj[x] & allowed):
                if y not in prev:
                    prev[y] = x
                    if y == t:
                        path = [t]
                        while prev[path[-1]] != -1:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    nxt.append(y)
        frontier = nxt
    return None


def find_asteroidal_triple(g: Graph) -> tuple[int, int, int] | None:
    """Three independent vertices, each pair joined by a path avoiding N[third]."""
    comp_of: list[list[int]] = []
    for z in range(g.n):
        label = [-1] * g.n
        for i, c in enumerate(g.component_masks(g.full_mask & ~g.closed_mask(z))):
            for u in bits(c):
                label[u] = i
        comp_of.append(label)
    for x, y, z in combinations(range(g.n), 3):
        if g.adj[x] >> y & 1 or g.adj[x] >> z & 1 or g.adj[y] >> z & 1:
            continue
        if (comp_of[z][x] == comp_of[z][y] and comp_of[y][x] == comp_of[y][z]
                and comp_of[x][y] == comp_of[x][z]):
            return (x, y, z)
    return None


# maximal cliques and clique orderings ---------------------------------------


def maximal_cliques(g: Graph) -> list[int]:
    """Maximal cliques of a chordal graph as bit masks, sorted."""
    peo = perfect_elimination_order(g)
    if peo is None:
        raise NotInterval(_witness(g))
    pos = {v: i for i, v in enumerate(peo)}
    cands = set()
    for v in peo:
        m = 1 << v
        for u in bits(g.adj[v]):
            if pos[u] > pos[v]:
                m |= 1 << u
        cands.add(m)
    return sorted(c for c in cands if not any(c != d and c & d == c for d in cands))


def _ordering_search(
    cliques: Sequence[int],
    allowed: Callable[[int, int, int], bool] | None = None,
) -> list[int] | None:
    """Find a consecutive ordering of ``cliques`` (indices), or ``None``.

    ``allowed(placed_mask, last, i)`` may veto placing clique ``i`` right
    after clique ``last`` (``-1`` at the start).
    """
    m = len(cliques)
    if m == 0:
        return []
    full = (1 << m) - 1
    member = {}
    for i, c in enumerate(cliques):
        for v in bits(c):
            member[v] = member.get(v, 0) | 1 << i
    failed: set[tuple[int, int]] = set()

    def dfs(placed: int, last: int, order: list[int]) -> list[int] | None:
        if placed == full:
            return order
        if (placed, last) in failed:
            return None
        used = 0
        for j in bits(placed):
            used |= cliques[j]
        # vertices of the last clique that still have unplaced cliques must continue
        must = 0
        for v in bits(cliques[last]):
            if member[v] & ~placed:
                must |= 1 << v
        closed = used & ~must
        for i in bits(full & ~placed):
            c = cliques[i]
            if c & must != must or c & closed:
                continue
            if allowed is not None and not allowed(placed, last, i):
                continue
            order.append(i)
            res = dfs(placed | 1 << i, i, order)
            if res is not None:
                return res
            order.pop()
        failed.add((placed, last))
        return None

    for start in range(m):
        if allowed is not None and not allowed(0, -1, start):
            continue
        res = dfs(1 << start, start, [start])
        if res is not None:
            return res
    return None


def clique_ordering(g: Graph) -> list[int] | None:
    """Maximal cliques (masks) in a consecutive order, or ``None``."""
    if perfect_elimination_order(g) is None:
        return None
    cliques = maximal_cliques(g)
    order = _ordering_search(cliques)
    if order is None:
        return None
    return [cliques[i] for i in order]


def _witness(g: Graph) -> tuple[str, tuple[int, ...]]:
    cyc = find_chordless_cycle(g)
    if cyc is not None:
        return ("cycle", cyc)
    at = find_asteroidal_triple(g)
    if at is not None:
        return ("asteroidal_triple", at)
    raise AssertionError("non-interval graph without witness")


def _rep_from_ordering(g: Graph, ordered: Sequence[int]) -> IntervalRepresentation:
    first = [-1] * g.n
    last = [-1] * g.n
    for i, c in enumerate(ordered):
        for v in bits(c):
            if first[v] < 0:
                first[v] = i
            last[v] = i
    return IntervalRepresentation(tuple(zip(first, last)))


def recognize_interval(g: Graph) -> IntervalRepresentation:
    """A compact interval representation of ``g``; raises ``NotInterval``."""
    ordered = clique_ordering(g)
    if ordered is None:
        raise NotInterval(_witness(g))
    return _rep_from_ordering(g, ordered)


def is_interval(g: Graph) -> bool:
    return clique_ordering(g) is not None


def compact_representation(g: Graph) -> IntervalRepresentation:
    rep = recognize_interval(g)
    ncliques = len(maximal_cliques(g))
    if len(rep.endpoints()) != ncliques:
        raise AssertionError("compact representation endpoint count mismatch")
    return rep


# tidiness ------------------------------------------------------------------


def _left_violation(g: Graph, iv: Sequence[tuple[int, int]], v: int) -> int | None:
    """Smallest left endpoint of a set M proving a left violation at ``v``."""
    lv = iv[v][0]
    m = mask_of(u for u in range(g.n) if iv[u][0] > lv)
    if m and g.closed_mask(v) & ~g.closed_nbhd_mask(m) == 0:
        return min(iv[u][0] for u in bits(m))
    return None


def _right_violation(g: Graph, iv: Sequence[tuple[int, int]], v: int) -> int | None:
    rv = iv[v][1]
    m = mask_of(u for u in range(g.n) if iv[u][1] < rv)
    if m and g.closed_mask(v) & ~g.closed_nbhd_mask(m) == 0:
        return max(iv[u][1] for u in bits(m))
    return None


def is_tidy(g: Graph, rep: IntervalRepresentation) -> bool:
    """Tidiness via the extremal witness sets.

    A left violation at ``v`` exists for some ``M`` iff it exists for the
    largest candidate ``{m : l_m > l_v}``, since ``N[M]`` grows with ``M``;
    symmetrically on the right.
    """
    if not rep.realizes(g):
        raise RepresentationMismatch("representation does not realize the graph")
    iv = rep.intervals
    return all(
        _left_violation(g, iv, v) is None and _right_violation(g, iv, v) is None
        for v in range(g.n)
    )


def is_tidy_bruteforce(g: Graph, rep: IntervalRepresentation) -> bool:
    """Definitional check over every nonempty ``M``; exponential, for tests."""
    iv = rep.intervals
    for mm in range(1, 1 << g.n):
        cover = g.closed_nbhd_mask(mm)
        lo = min(iv[u][0] for u in bits(mm))
        hi = max(iv[u][1] for u in bits(mm))
        for v in range(g.n):
            if g.closed_mask(v) & ~cover == 0 and not (lo <= iv[v][0] and iv[v][1] <= hi):
                return False
    return True


def tidy_representation(rep: IntervalRepresentation) -> IntervalRepresentation:
    """Shrink intervals until tidy, merging one endpoint value per step."""
    g = rep.graph()
    iv = list(rep.intervals)
    while True:
        for v in range(g.n):
            lm = _left_violation(g, iv, v)
            if lm is not None:
                old = iv[v][0]
                iv = [(lm, r) if l == old else (l, r) for l, r in iv]
                break
            rm = _right_violation(g, iv, v)
            if rm is not None:
                old = iv[v][1]
                iv = [(l, rm) if r == old else (l, r) for l, r in iv]
                break
        else:
            return IntervalRepresentation(tuple(iv))


# separations ---------------------------------------------------------------


def _check_separation(g: Graph, sep: Separation) -> tuple[int, int, int]:
    a, c, b = mask_of(sep.a), mask_of(sep.c), mask_of(sep.b)
    if a & b or a & c or b & c or (a | b | c) != g.full_mask:
        raise NotASeparation("parts do not partition the vertex set")
    for u in bits(a):
        if g.adj[u] & b:
            raise NotASeparation("edge between A and B")
    return a, c, b


def is_clean_clique_separation(g: Graph, sep: Separation) -> bool:
    """Decide cleanness by searching clique orderings.

    Cleanness asks for a representation with a point lying in every interval
    of ``C`` and in no interval of ``A`` or ``B``, with ``A`` to its left and
    ``B`` to its right.  In clique-path terms: every clique meeting ``A``
    comes first, then possibly the clique ``C`` itself, then every clique
    meeting ``B``; when ``C`` is not a maximal clique, the two cliques around
    the switch must cover ``C`` (the ``C`` intervals can then be stretched to
    a point between them without creating edges).  Degenerate separations (an
    empty part) are reported as not clean.
    """
    a, c, b = _check_separation(g, sep)
    if not (a and b and c):
        return False
    if clique_ordering(g) is None:
        raise NotInterval(_witness(g))
    if any(g.adj[v] & c != c & ~(1 << v) for v in bits(c)):
        return False
    cliques = maximal_cliques(g)
    left = mask_of(i for i, q in enumerate(cliques) if q & a)
    right = mask_of(i for i, q in enumerate(cliques) if q & b)
    core = mask_of(i for i, q in enumerate(cliques) if q == c)

    def allowed(placed: int, last: int, i: int) -> bool:
        bit = 1 << i
        if bit & left:
            return placed & (right | core) == 0
        if left & ~placed:
            return False
        if bit & core:
            return True
        # first clique meeting B
        if core:
            return core & placed != 0
        if placed & right == 0:
            return last >= 0 and c & ~(cliques[last] | cliques[i]) == 0
        return True

    return _ordering_search(cliques, allowed) is not None


def has_linearly_ordered_neighborhoods(g: Graph, sep: Separation) -> bool:
    a, c, b = _check_separation(g, sep)
    for side in (a, b):
        sets = [g.adj[x] & side for x in bits(c)]
        for s, t in combinations(sets, 2):
            if s & t != s and s & t != t:
                return False
    return True


def endpoint_count(rep: IntervalRepresentation) -> int:
    return len(rep.endpoints())


def clique_count(g: Graph) -> int:
    return len(maximal_cliques(g))


__all__ = [
    "IntervalRepresentation", "Separation", "lex_bfs", "perfect_elimination_order",
    "find_chordless_cycle", "find_asteroidal_triple", "maximal_cliques", "clique_ordering",
    "recognize_interval", "is_interval", "compact_representation", "is_tidy",
    "is_tidy_bruteforce", "tidy_representation", "is_clean_clique_separation",
    "has_linearly_ordered_neighborhoods",
]
