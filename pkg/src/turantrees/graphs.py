"""Simple undirected graphs on labelled vertices 0..p-1.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
algebra (intersection, difference, popcount) runs at machine speed even from
pure Python.  Graphs are immutable values; anything that needs to edit a
graph goes through :class:`GraphBuilder`.

Also provides the standard families (complete, complete bipartite, cycle),
disjoint union / complete join, the graph6 codec, and a plain "u v" edge-list
text format.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 1024


class GraphSizeError(ValueError):
    """Raised when a construction exceeds MAX_VERTICES."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``position`` is the index of the first bad byte."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (byte {position})")
        self.position = position


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``rows[v]`` is the neighbour bitmask of v."""

    p: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.p > MAX_VERTICES:
            raise GraphSizeError(f"{self.p} vertices exceeds cap {MAX_VERTICES}")
        if len(self.rows) != self.p:
            raise ValueError("rows length must equal vertex count")
        full = (1 << self.p) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} references vertices >= {self.p}")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency {u}-{v}")

    # -- queries ---------------------------------------------------------

    def row(self, v: int) -> int:
        return self.rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield (u, u + 1 + v)

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks (isolated vertices included)."""
        unseen = (1 << self.p) - 1
        comps = []
        while unseen:
            comp = unseen & -unseen
            frontier = comp
            while frontier:
                grow = 0
                for v in iter_bits(frontier):
                    grow |= self.rows[v]
                frontier = grow & ~comp
                comp |= frontier
            comps.append(comp)
            unseen &= ~comp
        return comps

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled along the sorted vertex list."""
        verts = sorted(vertices)
        index = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for v in verts:
            for w in iter_bits(self.rows[v]):
                if w in index:
                    rows[index[v]] |= 1 << index[w]
        return Graph(len(verts), tuple(rows))


def degree_sequence(g: Graph) -> list[int]:
    """Degrees sorted in nonincreasing order."""
    return sorted(g.degrees(), reverse=True)


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


class GraphBuilder:
    """Mutable edit buffer; ``build()`` freezes it into a Graph."""

    def __init__(self, p: int):
        if p > MAX_VERTICES:
            raise GraphSizeError(f"{p} vertices exceeds cap {MAX_VERTICES}")
        self.p = p
        self._rows = [0] * p

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphBuilder":
        b = cls(g.p)
        b._rows = list(g.rows)
        return b

    def _check(self, u: int, v: int):
        if u == v:
            raise ValueError("self-loops are not allowed")
        if not (0 <= u < self.p and 0 <= v < self.p):
            raise ValueError(f"vertex out of range: {u}, {v}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def add_edge(self, u: int, v: int) -> "GraphBuilder":
        self._check(u, v)
        self._rows[u] |= 1 << v
        self._rows[v] |= 1 << u
        return self

    def remove_edge(self, u: int, v: int) -> "GraphBuilder":
        self._check(u, v)
        self._rows[u] &= ~(1 << v)
        self._rows[v] &= ~(1 << u)
        return self

    def build(self) -> Graph:
        return Graph(self.p, tuple(self._rows))


# -- standard families ----------------------------------------------------


def empty(p: int) -> Graph:
    return Graph(p, (0,) * p)


def from_edges(p: int, edges: Iterable[tuple[int, int]]) -> Graph:
    b = GraphBuilder(p)
    for u, v in edges:
        b.add_edge(u, v)
    return b.build()


def complete(a: int) -> Graph:
    full = (1 << a) - 1
    return Graph(a, tuple(full & ~(1 << v) for v in range(a)))


def complete_bipartite(a: int, b: int) -> Graph:
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) & ~left
    rows = [right] * a + [left] * b
    return Graph(a + b, tuple(rows))


def cycle(p: int) -> Graph:
    if p < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(p, [(v, (v + 1) % p) for v in range(p)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.p for r in h.rows]
    return Graph(g.p + h.p, tuple(rows))


def complete_join(g: Graph, h: Graph) -> Graph:
    gmask = (1 << g.p) - 1
    hmask = ((1 << (g.p + h.p)) - 1) & ~gmask
    rows = [r | hmask for r in g.rows] + [(r << g.p) | gmask for r in h.rows]
    return Graph(g.p + h.p, tuple(rows))


# -- graph6 ----------------------------------------------------------------
# Standard format: a size header, then the upper triangle of the adjacency
# matrix read column by column ((0,1),(0,2),(1,2),(0,3),...), packed into
# 6-bit groups, each byte offset by 63.


def _g6_header(p: int) -> bytes:
    if p <= 62:
        return bytes([p + 63])
    if p <= 258047:
        return bytes([126, ((p >> 12) & 63) + 63, ((p >> 6) & 63) + 63, (p & 63) + 63])
    if p <= 68719476735:
        return bytes([126, 126] + [((p >> s) & 63) + 63 for s in range(30, -6, -6)])
    raise GraphSizeError(f"{p} vertices cannot be encoded")


def to_graph6(g: Graph) -> bytes:
    out = bytearray(_g6_header(g.p))
    acc = 0
    nbits = 0
    for v in range(1, g.p):
        for u in range(v):
            acc = (acc << 1) | ((g.rows[u] >> v) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.rstrip(b"\n")
    if not data:
        raise Graph6Error("empty graph6 input", 0)

    def chunk(i: int) -> int:
        if i >= len(data):
            raise Graph6Error("truncated graph6 input", len(data))
        if not (63 <= data[i] <= 126):
            raise Graph6Error(f"invalid graph6 byte {data[i]!r}", i)
        return data[i] - 63

    if data[0] == 126:
        if len(data) > 1 and data[1] == 126:
            p = 0
            for i in range(2, 8):
                p = (p << 6) | chunk(i)
            body = 8
        else:
            p = 0
            for i in range(1, 4):
                p = (p << 6) | chunk(i)
            body = 4
    else:
        p = chunk(0)
        body = 1
    if p > MAX_VERTICES:
        raise GraphSizeError(f"{p} vertices exceeds cap {MAX_VERTICES}")

    nbits = p * (p - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) > body + nbytes:
        raise Graph6Error("trailing bytes after graph6 body", body + nbytes)
    vals = [chunk(body + i) for i in range(nbytes)]
    rows = [0] * p
    pos = 0
    for v in range(1, p):
        for u in range(v):
            if (vals[pos // 6] >> (5 - pos % 6)) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos += 1
    if nbytes and vals[-1] & ((1 << (6 * nbytes - nbits)) - 1):
        raise Graph6Error("nonzero padding bits", body + nbytes - 1)
    return Graph(p, tuple(rows))


# -- edge-list text ---------------------------------------------------------


def to_edge_list_text(g: Graph) -> str:
    """One "u v" line per edge, 0-indexed, for human inspection."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def from_edge_list_text(text: str, p: int | None = None) -> Graph:
    edges = []
    top = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        top = max(top, u, v)
    if p is None:
        p = top + 1
    return from_edges(p, edges)
