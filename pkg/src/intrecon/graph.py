"""Finite simple undirected graphs over dense vertex indices 0..n-1.

Adjacency is stored as one integer bit mask per vertex.  Public helpers take
and return ``frozenset`` vertex sets; the ``*_mask`` variants are used in the
hot loops of the canonical labeling and the enumeration code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.adj):
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if m & ~full:
                raise ValueError(f"neighbor out of range at {v}")
            for u in bits(m):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    # basic queries ----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v] | 1 << v))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(m) for m in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def max_degree_vertices(self) -> frozenset[int]:
        degs = self.degrees()
        top = max(degs, default=0)
        return frozenset(v for v, d in enumerate(degs) if d == top)

    def universal_vertices(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.degree(v) == self.n - 1)

    # set neighborhoods ------------------------------------------------

    def closed_nbhd_mask(self, mask: int) -> int:
        out = mask
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def closed_nbhd(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(bits(self.closed_nbhd_mask(mask_of(s))))

    def open_nbhd(self, s: Iterable[int]) -> frozenset[int]:
        m = mask_of(s)
        return frozenset(bits(self.closed_nbhd_mask(m) & ~m))

    # connectivity -----------------------------------------------------

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``within``."""
        remaining = self.full_mask if within is None else within
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                nxt &= remaining & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            remaining &= ~comp
        return comps

    def components(self, within: Iterable[int] | None = None) -> list[frozenset[int]]:
        m = None if within is None else mask_of(within)
        return [frozenset(bits(c)) for c in self.component_masks(m)]

    def is_connected(self, within: Iterable[int] | None = None) -> bool:
        m = self.full_mask if within is None else mask_of(within)
        return len(self.component_masks(m)) <= 1

    def distances_from(self, sources: Iterable[int]) -> list[int | None]:
        """BFS distance from a vertex set; ``None`` for unreachable vertices."""
        dist: list[int | None] = [None] * self.n
        frontier = mask_of(sources)
        seen = frontier
        d = 0
        while frontier:
            for v in bits(frontier):
                dist[v] = d
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
        return dist

    # derived graphs ---------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            m = 0
            for u in bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    m |= 1 << j
            adj.append(m)
        return Graph(len(vertices), tuple(adj))

    def remove_vertex(self, v: int) -> "Graph":
        """``G - v``; vertices above ``v`` shift down by one."""
        return self.induced([u for u in range(self.n) if u != v])

    def add_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """Append vertex ``n`` adjacent to ``neighbors``."""
        nm = mask_of(neighbors)
        adj = [m | ((nm >> v & 1) << self.n) for v, m in enumerate(self.adj)]
        adj.append(nm)
        return Graph(self.n + 1, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            m = 0
            for u in bits(self.adj[v]):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return Graph(self.n, tuple(adj))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        adj = list(self.adj) + [m << shift for m in other.adj]
        return Graph(self.n + other.n, tuple(adj))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# graph_core operations --------------------------------------------------


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degree multiset as a non-increasing tuple."""
    return tuple(sorted(g.degrees(), reverse=True))


def twin_classes(g: Graph) -> list[tuple[frozenset[int], str | None]]:
    """Twin equivalence classes labelled ``"true"``, ``"false"`` or ``None``.

    True twins share their open neighborhood (and are non-adjacent); false
    twins share their closed neighborhood (and are adjacent).  Classes are
    returned in order of their smallest member.
    """
    out: list[tuple[frozenset[int], str | None]] = []
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        cls = 1 << v
        label = None
        for u in range(v + 1, g.n):
            if seen >> u & 1:
                continue
            if g.adj[u] == g.adj[v]:
                cls |= 1 << u
                label = "true"
            elif g.closed_mask(u) == g.closed_mask(v):
                cls |= 1 << u
                label = "false"
        seen |= cls
        out.append((frozenset(bits(cls)), label))
    return out


def twin_class_of(g: Graph, v: int) -> frozenset[int]:
    return frozenset(
        u for u in range(g.n)
        if g.adj[u] == g.adj[v] or g.closed_mask(u) == g.closed_mask(v)
    )


def are_twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] == g.adj[v] or g.closed_mask(u) == g.closed_mask(v)


def neighborhood_partition(
    g: Graph, s: Iterable[int]
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Ordered partition ``(S, N(S), V - N[S])``."""
    sm = mask_of(s)
    if sm & ~g.full_mask:
        raise ValueError("vertex set not contained in V(g)")
    closed = g.closed_nbhd_mask(sm)
    return (
        frozenset(bits(sm)),
        frozenset(bits(closed & ~sm)),
        frozenset(bits(g.full_mask & ~closed)),
    )


# graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode in graph6 (no header, no trailing newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    k = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise ValueError(f"invalid graph6 character in {s!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        n = 0
        for x in data[2:8]:
            n = n << 6 | x
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ValueError(f"graph6 length mismatch for n={n}: {s!r}")
    adj = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if body[bit // 6] >> (5 - bit % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(adj))
