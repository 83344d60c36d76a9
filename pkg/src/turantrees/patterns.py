"""The four forbidden tree families and subgraph containment tests.

A pattern is one of

* ``star:n``    the n-vertex star (one center, n-1 leaves),
* ``broom:n``   the n-vertex tree of maximum degree n-2 (a center with n-3
                leaves plus one leg of length 2),
* ``spider:n``  the n-vertex tree with a degree-(n-3) center, n-4 legs of
                length 1 and one leg of length 3,
* ``path:n``    the n-vertex path.

``spider:4`` and ``spider:5`` are the same abstract trees as ``path:4`` and
``path:5`` and normalize to the path form on construction.

Containment is plain subgraph containment (not induced): ``contains`` runs a
backtracking tree embedder, ``contains_fast`` uses per-family degree and leg
counting shortcuts with the same truth value.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import graphs
from .graphs import Graph, iter_bits

_MIN_N = {"star": 2, "broom": 4, "spider": 4, "path": 2}


@dataclass(frozen=True)
class TreePattern:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in _MIN_N:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.n < _MIN_N[self.kind]:
            raise ValueError(f"{self.kind} needs n >= {_MIN_N[self.kind]}, got {self.n}")
        if self.kind == "spider" and self.n in (4, 5):
            object.__setattr__(self, "kind", "path")

    @classmethod
    def parse(cls, text: str) -> "TreePattern":
        """Parse the "kind:n" spelling used on the command line."""
        kind, sep, num = text.strip().partition(":")
        if not sep or not num.strip().isdigit():
            raise ValueError(f"pattern must look like 'spider:11', got {text!r}")
        return cls(kind.strip(), int(num))

    def spell(self) -> str:
        return f"{self.kind}:{self.n}"


def star(n: int) -> TreePattern:
    return TreePattern("star", n)


def broom(n: int) -> TreePattern:
    return TreePattern("broom", n)


def spider(n: int) -> TreePattern:
    return TreePattern("spider", n)


def path(n: int) -> TreePattern:
    return TreePattern("path", n)


@dataclass(frozen=True)
class ForbiddenFamily:
    patterns: frozenset[TreePattern]

    def __post_init__(self):
        if not self.patterns:
            raise ValueError("forbidden family must be nonempty")

    @classmethod
    def of(cls, *patterns: TreePattern) -> "ForbiddenFamily":
        return cls(frozenset(patterns))

    @classmethod
    def parse(cls, text: str) -> "ForbiddenFamily":
        """Parse a comma-joined family such as "star:6,spider:7"."""
        return cls(frozenset(TreePattern.parse(part) for part in text.split(",")))

    def spell(self) -> str:
        return ",".join(p.spell() for p in sorted(self.patterns, key=lambda q: (q.kind, q.n)))

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self):
        return len(self.patterns)


def realize(pattern: TreePattern) -> Graph:
    """The pattern as a graph; vertex 0 is the center, or a path endpoint."""
    n = pattern.n
    if pattern.kind == "star":
        edges = [(0, i) for i in range(1, n)]
    elif pattern.kind == "broom":
        edges = [(0, i) for i in range(1, n - 1)] + [(n - 2, n - 1)]
    elif pattern.kind == "spider":
        edges = [(0, i) for i in range(1, n - 2)] + [(n - 3, n - 2), (n - 2, n - 1)]
    else:
        edges = [(i, i + 1) for i in range(n - 1)]
    return graphs.from_edges(n, edges)


# -- general backtracking embedder ------------------------------------------


def _embed_plan(tree: Graph, root: int):
    """Assignment order for a rooted tree: every vertex after its parent,
    larger subtrees first, leaf children of one parent grouped last."""
    adj = [tree.neighbors(v) for v in range(tree.p)]
    size = [1] * tree.p
    parent = [-1] * tree.p
    order_post = []
    stack = [(root, -1, False)]
    while stack:
        v, par, done = stack.pop()
        if done:
            for w in adj[v]:
                if w != par:
                    size[v] += size[w]
            order_post.append(v)
            continue
        parent[v] = par
        stack.append((v, par, True))
        for w in adj[v]:
            if w != par:
                stack.append((w, v, False))
    order = []
    pos = {}

    def visit(v):
        pos[v] = len(order)
        order.append(v)
        children = sorted((w for w in adj[v] if w != parent[v]), key=lambda w: -size[w])
        for w in children:
            visit(w)

    visit(root)
    tdeg = [len(adj[v]) for v in range(tree.p)]
    nchildren = [len(adj[v]) - (1 if parent[v] != -1 else 0) for v in range(tree.p)]
    # when a child is placed, it and every later sibling still need distinct
    # hosts adjacent to the parent's host; record that demand for pruning
    need = [1] * tree.p
    for v in range(tree.p):
        kids = sorted((w for w in adj[v] if parent[w] == v), key=lambda w: pos[w])
        for i, w in enumerate(kids):
            need[w] = len(kids) - i
    # previous sibling in a run of leaf children (interchangeable, so force
    # increasing host labels to avoid exploring permutations)
    prev_leaf_sib = [-1] * tree.p
    for v in range(tree.p):
        leaf_kids = [w for w in adj[v] if parent[w] == v and size[w] == 1]
        leaf_kids.sort(key=lambda w: pos[w])
        for a, b in zip(leaf_kids, leaf_kids[1:]):
            prev_leaf_sib[b] = a
    return order, parent, tdeg, nchildren, need, prev_leaf_sib


def _embed(host: Graph, tree: Graph, root: int = 0, pins: dict[int, int] | None = None) -> bool:
    """Injective map of ``tree`` into ``host`` sending edges to edges;
    optionally with some tree vertices pinned to given host vertices."""
    n = tree.p
    p = host.p
    if n > p:
        return False
    order, parent, tdeg, nchildren, need, prev_sib = _embed_plan(tree, root)
    rows = host.rows
    hdeg = [r.bit_count() for r in rows]
    assign = [-1] * n
    pins = pins or {}

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        tv = order[i]
        mask = rows[assign[parent[tv]]] & ~used
        if mask.bit_count() < need[tv]:
            # this vertex plus its later siblings cannot all fit
            return False
        if prev_sib[tv] != -1:
            # interchangeable leaf siblings: force increasing host labels
            mask &= ~((1 << (assign[prev_sib[tv]] + 1)) - 1)
        if tv in pins:
            mask &= 1 << pins[tv]
        for hv in iter_bits(mask):
            if hdeg[hv] < tdeg[tv]:
                continue
            u2 = used | (1 << hv)
            if (rows[hv] & ~u2).bit_count() < nchildren[tv]:
                continue
            assign[tv] = hv
            if place(i + 1, u2):
                return True
        return False

    root_tv = order[0]
    cand = [pins[root_tv]] if root_tv in pins else sorted(range(p), key=lambda v: -hdeg[v])
    for hv in cand:
        if hdeg[hv] < tdeg[root_tv]:
            continue
        used = 1 << hv
        if (rows[hv] & ~used).bit_count() < nchildren[root_tv]:
            continue
        assign[root_tv] = hv
        if place(1, used):
            return True
    return False


@lru_cache(maxsize=65536)
def _contains_connected(host_g6: bytes, pattern: TreePattern) -> bool:
    host = graphs.from_graph6(host_g6)
    return _embed(host, realize(pattern))


def contains(g: Graph, pattern: TreePattern) -> bool:
    """True iff ``pattern`` embeds into ``g`` as a subgraph.

    A tree is connected, so each component of ``g`` is checked on its own
    (components smaller than the pattern are skipped outright) and the
    per-component answer is memoized.
    """
    if g.p < pattern.n:
        return False
    for comp in g.components():
        if comp.bit_count() < pattern.n:
            continue
        sub = g.induced(iter_bits(comp))
        if _contains_connected(graphs.to_graph6(sub), pattern):
            return True
    return False


# -- per-family shortcuts ----------------------------------------------------


def _fast_broom(g: Graph, n: int) -> bool:
    # center c, leg c-u-w, and n-3 further neighbours of c avoiding u and w
    rows = g.rows
    for c in range(g.p):
        gc = rows[c]
        d = gc.bit_count()
        if d < n - 2:
            continue
        for u in iter_bits(gc):
            others = rows[u] & ~(1 << c)
            if not others:
                continue
            if (others & ~gc) and d - 1 >= n - 3:
                return True
            if (others & gc) and d - 2 >= n - 3:
                return True
    return False


def _fast_spider(g: Graph, n: int) -> bool:
    # center c, leg c-u-w-x, and n-4 further neighbours of c avoiding u, w, x
    rows = g.rows
    for c in range(g.p):
        gc = rows[c]
        d = gc.bit_count()
        if d < n - 3:
            continue
        cbit = 1 << c
        for u in iter_bits(gc):
            ubit = 1 << u
            for w in iter_bits(rows[u] & ~cbit):
                xs = rows[w] & ~(cbit | ubit)
                if not xs:
                    continue
                base = d - 1 - ((gc >> w) & 1)
                if (xs & ~gc) and base >= n - 4:
                    return True
                if (xs & gc) and base - 1 >= n - 4:
                    return True
    return False


def contains_fast(g: Graph, pattern: TreePattern) -> bool:
    """Same truth value as :func:`contains`, without full backtracking.

    Stars reduce to a maximum-degree test, brooms and spiders to a scan for
    a short leg hanging off a high-degree center; paths fall back to the
    general embedder.
    """
    n = pattern.n
    if g.p < n:
        return False
    if pattern.kind == "star":
        return graphs.max_degree(g) >= n - 1
    if pattern.kind == "broom":
        return _fast_broom(g, n)
    if pattern.kind == "spider":
        return _fast_spider(g, n)
    return contains(g, pattern)


def family_free(g: Graph, family) -> bool:
    """True iff ``g`` contains no pattern of the family."""
    return not any(contains(g, pattern) for pattern in family)
