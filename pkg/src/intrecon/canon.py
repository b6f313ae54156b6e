"""Exact canonical labeling for small graphs.

Equitable partition refinement plus individualization/backtracking.  The
canonical form is the lexicographically largest (node invariants, relabelled
adjacency) over all leaves of the search tree.  Automorphisms discovered
between leaves prune the tree (orbit pruning on the first path and
back-jumping to the common ancestor), which keeps highly symmetric graphs such
as ``K_n`` cheap.

Certificates are graph6 strings of the canonically relabelled graph, so two
graphs have equal certificates iff they are isomorphic.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Hashable, Sequence

from .errors import SizeLimitExceeded
from .graph import Graph, popcount, to_graph6

DEFAULT_LIMIT = 13

Certificate = str


def _refine(cells: list[tuple[int, ...]], adj: tuple[int, ...]) -> list[tuple[int, ...]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[tuple[int, ...]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                a = adj[v]
                groups.setdefault(tuple(popcount(a & m) for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            changed = True
            for key in sorted(groups):
                out.append(tuple(groups[key]))
        cells = out
        if not changed:
            return cells


def _leaf_cert(lab: tuple[int, ...], adj: tuple[int, ...]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    out = []
    for v in lab:
        m = 0
        a = adj[v]
        while a:
            low = a & -a
            m |= 1 << pos[low.bit_length() - 1]
            a ^= low
        out.append(m)
    return tuple(out)


class _Search:
    def __init__(self, adj: tuple[int, ...], cells: list[tuple[int, ...]] | None = None):
        self.adj = adj
        self.initial = cells if cells is not None else [tuple(range(len(adj)))]
        self.n = len(adj)
        self.first_path: list[int] | None = None
        self.first_lab: tuple[int, ...] | None = None
        self.first_cert: tuple[int, ...] | None = None
        self.best_key: tuple | None = None
        self.best_lab: tuple[int, ...] | None = None
        self.best_path: list[int] | None = None
        self.best_cert: tuple[int, ...] | None = None
        self.best_invs: list[tuple[int, ...]] = []
        self.autos: list[tuple[int, ...]] = []

    def _automorphism(self, lab_a: tuple[int, ...], lab_b: tuple[int, ...]) -> tuple[int, ...]:
        perm = [0] * self.n
        for a, b in zip(lab_a, lab_b):
            perm[a] = b
        return tuple(perm)

    def _orbit_roots(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for x in range(self.n):
                    rx, ry = find(x), find(g[x])
                    if rx != ry:
                        parent[rx] = ry
        return [find(x) for x in range(self.n)]

    def run(self) -> None:
        cells = _refine(self.initial, self.adj) if self.n else []
        self._visit(cells, [], [])

    def _visit(self, cells: list[tuple[int, ...]], path: list[int], invs: list[tuple[int, ...]]) -> int | None:
        """Explore a node; return a depth to back-jump to, or None."""
        depth = len(path)
        inv = tuple(len(c) for c in cells)
        invs = invs + [inv]
        if self.best_key is not None:
            best_prefix = self.best_invs[: depth + 1]
            if invs < best_prefix:
                return None
        if len(cells) == self.n:
            lab = tuple(c[0] for c in cells)
            cert = _leaf_cert(lab, self.adj)
            key = (tuple(invs), cert)
            if self.first_lab is None:
                self.first_lab, self.first_cert, self.first_path = lab, cert, list(path)
                self.best_key, self.best_lab, self.best_cert = key, lab, cert
                self.best_path, self.best_invs = list(path), list(invs)
                return None
            if cert == self.first_cert:
                self.autos.append(self._automorphism(self.first_lab, lab))
                return _common_prefix(path, self.first_path)
            if key == self.best_key:
                self.autos.append(self._automorphism(self.best_lab, lab))
                return _common_prefix(path, self.best_path)
            if key > self.best_key:
                self.best_key, self.best_lab, self.best_cert = key, lab, cert
                self.best_path, self.best_invs = list(path), list(invs)
            return None

        target_index = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[target_index]
        on_first = self.first_path is not None and path == self.first_path[:depth]
        explored: list[int] = []
        for v in target:
            if on_first and explored:
                roots = self._orbit_roots(path)
                if any(roots[v] == roots[u] for u in explored):
                    continue
            explored.append(v)
            rest = tuple(u for u in target if u != v)
            child = cells[:target_index] + [(v,), rest] + cells[target_index + 1:]
            child = _refine(child, self.adj)
            jump = self._visit(child, path + [v], invs)
            if jump is not None and jump < depth:
                return jump
            on_first = self.first_path is not None and path == self.first_path[:depth]
        return None


def _common_prefix(a: list[int], b: list[int] | None) -> int:
    if b is None:
        return 0
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def canonical_labeling(g: Graph, limit: int = DEFAULT_LIMIT) -> tuple[int, ...]:
    """Return ``lab`` with ``lab[i]`` the vertex placed at canonical position ``i``."""
    if g.n > limit:
        raise SizeLimitExceeded(f"n={g.n} exceeds canonical-form limit {limit}")
    return _labeling(g.adj)


@lru_cache(maxsize=1 << 18)
def _labeling(adj: tuple[int, ...]) -> tuple[int, ...]:
    if not adj:
        return ()
    s = _Search(adj)
    s.run()
    assert s.best_lab is not None
    return s.best_lab


def canonical_graph(g: Graph, limit: int = DEFAULT_LIMIT) -> Graph:
    lab = canonical_labeling(g, limit)
    return Graph(g.n, _leaf_cert(lab, g.adj))


def canonical_form(g: Graph, limit: int = DEFAULT_LIMIT) -> Certificate:
    """Exact isomorphism certificate (graph6 of the canonical relabelling)."""
    if g.n > limit:
        raise SizeLimitExceeded(f"n={g.n} exceeds canonical-form limit {limit}")
    return _form(g.adj)


@lru_cache(maxsize=1 << 18)
def _form(adj: tuple[int, ...]) -> Certificate:
    lab = _labeling(adj)
    return to_graph6(Graph(len(adj), _leaf_cert(lab, adj)))


def are_isomorphic(g: Graph, h: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    if g.n != h.n:
        if max(g.n, h.n) > limit:
            raise SizeLimitExceeded(f"n={max(g.n, h.n)} exceeds limit {limit}")
        return False
    if g.num_edges() != h.num_edges() or sorted(g.degrees()) != sorted(h.degrees()):
        if max(g.n, h.n) > limit:
            raise SizeLimitExceeded(f"n={g.n} exceeds limit {limit}")
        return False
    return canonical_form(g, limit) == canonical_form(h, limit)


def colored_form(g: Graph, colors: Sequence[Hashable], limit: int = DEFAULT_LIMIT) -> tuple:
    """Certificate of ``g`` with a vertex coloring that isomorphisms must preserve.

    Colors only need to be mutually comparable; the certificate lists them in
    canonical vertex order next to the graph6 string.
    """
    if g.n > limit:
        raise SizeLimitExceeded(f"n={g.n} exceeds canonical-form limit {limit}")
    if len(colors) != g.n:
        raise ValueError("one color per vertex required")
    palette = sorted(set(colors))
    rank = {c: i for i, c in enumerate(palette)}
    ranks = tuple(rank[c] for c in colors)
    lab = _colored_labeling(g.adj, ranks)
    return (tuple(palette[ranks[v]] for v in lab), to_graph6(Graph(g.n, _leaf_cert(lab, g.adj))))


def colored_labeling(g: Graph, colors: Sequence[Hashable], limit: int = DEFAULT_LIMIT) -> tuple[int, ...]:
    if g.n > limit:
        raise SizeLimitExceeded(f"n={g.n} exceeds canonical-form limit {limit}")
    palette = sorted(set(colors))
    rank = {c: i for i, c in enumerate(palette)}
    return _colored_labeling(g.adj, tuple(rank[c] for c in colors))


@lru_cache(maxsize=1 << 16)
def _colored_labeling(adj: tuple[int, ...], ranks: tuple[int, ...]) -> tuple[int, ...]:
    if not adj:
        return ()
    cells = [tuple(v for v in range(len(adj)) if ranks[v] == r) for r in sorted(set(ranks))]
    s = _Search(adj, cells)
    s.run()
    assert s.best_lab is not None
    return s.best_lab


def automorphism_count(g: Graph) -> int:
    """|Aut(g)| by exhaustive extension of partial maps (used by mass checks)."""
    n = g.n
    if n == 0:
        return 1
    cells = _refine([tuple(range(n))], g.adj)
    color = [0] * n
    for i, c in enumerate(cells):
        for v in c:
            color[v] = i
    order = [v for c in cells for v in c]
    count = 0
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> None:
        nonlocal count
        if k == n:
            count += 1
            return
        v = order[k]
        for w in range(n):
            if used[w] or color[w] != color[v]:
                continue
            ok = True
            for j in range(k):
                u = order[j]
                if (g.adj[v] >> u & 1) != (g.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(k + 1)
                used[w] = False
                image[v] = -1

    extend(0)
    return count
