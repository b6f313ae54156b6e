"""Interval recognition straight from the chordal + AT-free characterization."""

from __future__ import annotations

from itertools import combinations

from intrecon.graph import Graph


def _popcount(x: int) -> int:
    return bin(x).count("1")


def has_long_induced_cycle(g: Graph) -> bool:
    """Some vertex subset of size >= 4 induces a cycle."""
    for mask in range(1 << g.n):
        k = _popcount(mask)
        if k < 4:
            continue
        vs = [v for v in range(g.n) if mask >> v & 1]
        if all(_popcount(g.adj[v] & mask) == 2 for v in vs) and g.is_connected(vs):
            return True
    return False


def _joined_avoiding(g: Graph, s: int, t: int, blocked: int) -> bool:
    if blocked >> s & 1 or blocked >> t & 1:
        return False
    seen, todo = 1 << s, [s]
    while todo:
        u = todo.pop()
        if u == t:
            return True
        for w in range(g.n):
            if g.adj[u] >> w & 1 and not (seen | blocked) >> w & 1:
                seen |= 1 << w
                todo.append(w)
    return False


def has_asteroidal_triple(g: Graph) -> bool:
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) or g.has_edge(b, c) or g.has_edge(a, c):
            continue
        if (_joined_avoiding(g, b, c, g.closed_mask(a))
                and _joined_avoiding(g, a, c, g.closed_mask(b))
                and _joined_avoiding(g, a, b, g.closed_mask(c))):
            return True
    return False


def is_interval_by_definition(g: Graph) -> bool:
    return not has_long_induced_cycle(g) and not has_asteroidal_triple(g)
