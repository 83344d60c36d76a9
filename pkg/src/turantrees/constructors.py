"""Witness graphs attaining the extremal edge counts.

Every constructor returns ``(Recipe, Graph)`` and, unless ``audit=False``,
re-checks itself after building: exact edge count against the formulas
module, the promised degree bound, and freeness from the forbidden tree via
the containment checker.  The bookkeeping in the near-regular circulant
surgery (vertex deletion plus edge repairs) is easy to get subtly wrong, so
silent drift is made impossible.

Vertex labels: the circulant pieces are assembled on labels 1..2k as in the
constructive arguments and converted to 0-indexed graphs exactly once, at
materialization.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb

from . import formulas, graphs, patterns
from .formulas import ex_broom, ex_mixed, ex_path, ex_spider
from .graphs import Graph
from .patterns import TreePattern, broom as broom_pattern, contains, spider as spider_pattern
from .recipes import (
    Complete,
    CompleteBipartite,
    CompleteJoin,
    Isolated,
    Recipe,
    RecipeNode,
    union_of,
)


class AuditError(RuntimeError):
    """A constructed graph failed its post-construction audit."""


def _norm(e):
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class CirculantSpec:
    """Recorded surgery that produces one near-regular piece.

    Start from edges {ij : j-i in diffs} on labels 1..order, optionally
    remove the matching {12, 34, ...}, remove ``pre_drops``, delete label 1,
    add ``repairs``, and finally remove ``post_drops``.
    """

    k: int
    order: int
    diffs: frozenset[int]
    drop_matching: bool = False
    pre_drops: tuple[tuple[int, int], ...] = ()
    repairs: tuple[tuple[int, int], ...] = ()
    post_drops: tuple[tuple[int, int], ...] = ()
    drop_vertex: bool = False
    label: str = "cycle"

    def materialize(self) -> Graph:
        edges = set()
        for d in self.diffs:
            for i in range(1, self.order - d + 1):
                edges.add((i, i + d))
        if self.drop_matching:
            matching = {(2 * i - 1, 2 * i) for i in range(1, self.order // 2 + 1)}
            if not matching <= edges:
                raise AuditError(f"{self.label}: matching not contained in the base edges")
        else:
            matching = set()
        edges -= matching
        for e in map(_norm, self.pre_drops):
            if e not in edges:
                raise AuditError(f"{self.label}: cannot drop absent edge {e}")
            edges.remove(e)
        if self.drop_vertex:
            edges = {e for e in edges if 1 not in e}
            labels = list(range(2, self.order + 1))
        else:
            labels = list(range(1, self.order + 1))
        for e in map(_norm, self.repairs):
            if e in edges or (self.drop_vertex and 1 in e):
                raise AuditError(f"{self.label}: bad repair edge {e}")
            edges.add(e)
        for e in map(_norm, self.post_drops):
            if e not in edges:
                raise AuditError(f"{self.label}: cannot trim absent edge {e}")
            edges.remove(e)
        index = {lab: i for i, lab in enumerate(labels)}
        return graphs.from_edges(len(labels), [(index[u], index[v]) for u, v in edges])


@dataclass(frozen=True)
class CirculantPiece(RecipeNode):
    p: int
    n: int
    spec: CirculantSpec

    def vertex_count(self):
        return self.p

    def symbolic_edge_count(self):
        return ((self.n - 2) * self.p) // 2

    def materialize(self):
        return self.spec.materialize()

    def describe(self):
        return f"circ(p={self.p},deg<={self.n - 2})"


# -- parity-case specs for the star-free extremal piece ----------------------


def _spec_even_p(p: int, n: int) -> CirculantSpec:
    k = p // 2
    if n % 2 == 1:
        half = (n - 5) // 2
        drop = False
        label = "even_p_odd_n"
    else:
        half = (n - 4) // 2
        drop = True
        label = "even_p_even_n"
    diffs = {1, 2 * k - 1, k}
    for t in range(1, half + 1):
        diffs.add(k + t)
        diffs.add(k - t)
    return CirculantSpec(k, 2 * k, frozenset(diffs), drop_matching=drop, label=label)


def _spec_odd_p_even_n(p: int, n: int) -> CirculantSpec:
    # delete one vertex of the even-order graph and rewire its neighbourhood
    k = (p + 1) // 2
    base = _spec_even_p(2 * k, n)
    v = {i: k - n // 2 + 2 + i for i in range(1, n - 2)}
    v[n - 2] = 2 * k
    if (k - n // 2) % 2 == 0:
        repairs = [(v[i], v[i + 1]) for i in range(1, n - 4, 2)]
        repairs.append((v[n - 3], v[n - 2]))
        pre: tuple = ()
        label = "odd_p_even_n_a"
    else:
        repairs = [(v[i], v[i + 1]) for i in range(2, n - 3, 2)]
        repairs += [(3, v[1]), (2, v[n - 2])]
        pre = ((2, 3),)
        label = "odd_p_even_n_b"
    return replace(
        base,
        pre_drops=pre,
        repairs=tuple(repairs),
        drop_vertex=True,
        label=label,
    )


def _spec_odd_p_odd_n(p: int, n: int) -> CirculantSpec:
    # build the (n-1)-regular graph for n+1 on the same p vertices, then trim
    # a near-perfect matching to land on floor((n-2)p/2) edges
    k = (p + 1) // 2
    base = _spec_odd_p_even_n(p, n + 1)
    if (k - (n + 1) // 2) % 2 == 0:
        trim = [(2 * i, 2 * i + 1) for i in range(1, k)]
        trim.append((k, 2 * k))
    else:
        trim = [(2, 2 * k), (3, k + 3 - (n + 1) // 2)]
        trim += [(2 * i, 2 * i + 1) for i in range(2, k)]
    return replace(base, post_drops=tuple(trim), label=base.label + "_trim")


def _audit_near_regular(g: Graph, p: int, n: int, where: str):
    target = ((n - 2) * p) // 2
    if g.p != p or g.edge_count() != target:
        raise AuditError(f"{where}: expected {target} edges on {p} vertices, "
                         f"got {g.edge_count()} on {g.p}")
    odd = ((n - 2) * p) % 2
    low = sum(1 for d in g.degrees() if d == n - 3)
    if any(d not in (n - 2, n - 3) for d in g.degrees()) or low != odd:
        raise AuditError(f"{where}: degree profile {sorted(g.degrees())} is not "
                         f"(n-2)-regular up to one vertex")


def star_free_extremal(p: int, n: int, audit: bool = True) -> tuple[Recipe, Graph]:
    """A graph on p vertices with maximum degree <= n-2 and floor((n-2)p/2)
    edges, hence extremal for the forbidden n-vertex star."""
    if n < 2 or p < n - 1:
        raise ValueError(f"need p >= n-1 >= 1, got p={p}, n={n}")
    if p == n - 1:
        root: RecipeNode = Complete(p)
    elif n == 2:
        root = Isolated(p)
    elif n == 3:
        parts: list[RecipeNode] = [Complete(2)] * (p // 2)
        if p % 2:
            parts.append(Isolated(1))
        root = union_of(parts)
    elif n == 4:
        root = CirculantPiece(p, n, CirculantSpec((p + 1) // 2, p, frozenset({1, p - 1})))
    elif p % 2 == 0:
        root = CirculantPiece(p, n, _spec_even_p(p, n))
    elif n % 2 == 0:
        root = CirculantPiece(p, n, _spec_odd_p_even_n(p, n))
    else:
        root = CirculantPiece(p, n, _spec_odd_p_odd_n(p, n))
    recipe = Recipe(root, ((n - 2) * p) // 2)
    g = recipe.materialize()
    if audit:
        _audit_near_regular(g, p, n, f"star_free_extremal({p},{n})")
    return recipe, g


def regular_graph(k: int, p: int) -> Graph | None:
    """A k-regular graph on p vertices, or None exactly when kp is odd."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if p <= k:
        raise ValueError(f"no {k}-regular graph on {p} vertices: degree too large")
    if (k * p) % 2:
        return None
    _, g = star_free_extremal(p, k + 2)
    if any(d != k for d in g.degrees()):
        raise AuditError(f"regular_graph({k},{p}): degrees {sorted(set(g.degrees()))}")
    return g


def _audit_free(g: Graph, expected_edges: int, forbidden: list[TreePattern], where: str,
                max_degree: int | None = None):
    if g.edge_count() != expected_edges:
        raise AuditError(f"{where}: built {g.edge_count()} edges, formula says {expected_edges}")
    if max_degree is not None and graphs.max_degree(g) > max_degree:
        raise AuditError(f"{where}: maximum degree {graphs.max_degree(g)} > {max_degree}")
    for pattern in forbidden:
        if contains(g, pattern):
            raise AuditError(f"{where}: witness contains {pattern.spell()}")


def path_extremal(p: int, n: int, audit: bool = True) -> tuple[Recipe, Graph]:
    """Extremal witness for the forbidden n-vertex path: complete blocks of
    size n-1 plus one remainder block."""
    if n < 2 or p < 0:
        raise ValueError(f"need n >= 2 and p >= 0, got p={p}, n={n}")
    if p < n:
        root: RecipeNode = Complete(p)
    else:
        k, r = divmod(p, n - 1)
        parts: list[RecipeNode] = [Complete(n - 1)] * k
        if r:
            parts.append(Complete(r))
        root = union_of(parts)
    recipe = Recipe(root, ex_path(p, n).value)
    g = recipe.materialize()
    if audit:
        _audit_free(g, recipe.claimed_edges, [patterns.path(n)], f"path_extremal({p},{n})")
    return recipe, g


def broom_extremal(p: int, n: int, audit: bool = True) -> tuple[Recipe, Graph]:
    """Extremal witness for the forbidden n-vertex broom.

    Complete blocks of size n-1, except in the dense middle residues
    (n >= 7, 2 <= r <= n-4) where the last block and the remainder merge
    into a near-regular tail of maximum degree n-3.
    """
    if n < 5 or p < n:
        raise ValueError(f"need p >= n >= 5, got p={p}, n={n}")
    k, r = divmod(p, n - 1)
    expected = ex_broom(p, n).value
    if n >= 7 and 2 <= r <= n - 4:
        tail_recipe, _ = star_free_extremal(n - 1 + r, n - 1, audit=audit)
        parts = [Complete(n - 1)] * (k - 1) + [tail_recipe.root]
    else:
        parts = [Complete(n - 1)] * k
        if r:
            parts.append(Complete(r))
    recipe = Recipe(union_of(parts), expected)
    g = recipe.materialize()
    if audit:
        _audit_free(g, expected, [broom_pattern(n)], f"broom_extremal({p},{n})")
    return recipe, g


def mixed_extremal(n: int, r: int, audit: bool = True) -> tuple[Recipe, Graph]:
    """Extremal witness on n-1+r vertices avoiding both the (n-1)-vertex star
    and the n-vertex spider.

    r+2 independent vertices completely joined to an (n-3)-vertex inner
    graph.  The inner graph recurses through the same construction while
    2r < n-7; at the base it is the better of a balanced complete bipartite
    graph padded with isolated vertices and a near-regular star-free graph.
    For r = n-5 the whole witness collapses to K_{n-3,n-3}.
    """
    if n < 7 or not 2 <= r <= n - 5:
        raise ValueError(f"need n >= 7 and 2 <= r <= n-5, got n={n}, r={r}")
    expected = ex_mixed(n, r).value
    if r == n - 5:
        root: RecipeNode = CompleteBipartite(n - 3, n - 3)
    else:
        if 2 * r <= n - 7:
            inner_recipe, _ = mixed_extremal(n - 2 - r, r, audit=audit)
            inner = inner_recipe.root
        else:
            side = n - 5 - r
            pad = 2 * r + 7 - n
            bip_parts: list[RecipeNode] = [CompleteBipartite(side, side)]
            if pad:
                bip_parts.append(Isolated(pad))
            bip = union_of(bip_parts)
            sf_recipe, sf_graph = star_free_extremal(n - 3, n - 4 - r, audit=audit)
            inner = bip if side * side >= sf_graph.edge_count() else sf_recipe.root
        root = CompleteJoin(Isolated(r + 2), inner)
    recipe = Recipe(root, expected)
    g = recipe.materialize()
    if audit:
        _audit_free(g, expected, [patterns.star(n - 1), spider_pattern(n)],
                    f"mixed_extremal({n},{r})", max_degree=n - 3)
    return recipe, g


def spider_extremal(p: int, n: int, audit: bool = True) -> tuple[Recipe, Graph]:
    """Extremal witness for the forbidden n-vertex spider.

    k-1 complete blocks of size n-1 plus a tail on n-1+r vertices chosen by
    residue: another block pair for r in {0, 1, n-4, n-3, n-2}, the balanced
    bipartite K_{n-3,n-3} for r = n-5, and otherwise the larger of the block
    pair and the join construction from :func:`mixed_extremal`.
    """
    if n < 4 or p < n:
        raise ValueError(f"need p >= n >= 4, got p={p}, n={n}")
    if n in (4, 5):
        recipe, g = path_extremal(p, n, audit=audit)
        if audit:
            _audit_free(g, ex_spider(p, n).value, [spider_pattern(n)],
                        f"spider_extremal({p},{n})")
        return recipe, g
    k, r = divmod(p, n - 1)
    expected = ex_spider(p, n).value
    if r in (0, 1, n - 4, n - 3, n - 2):
        tail: list[RecipeNode] = [Complete(n - 1)]
        if r:
            tail.append(Complete(r))
    elif r == n - 5:
        tail = [CompleteBipartite(n - 3, n - 3)]
    else:
        blocks_edges = comb(n - 1, 2) + comb(r, 2)
        join_recipe, join_graph = mixed_extremal(n, r, audit=audit)
        if join_graph.edge_count() > blocks_edges:
            tail = [join_recipe.root]
        else:
            tail = [Complete(n - 1), Complete(r)]
    recipe = Recipe(union_of([Complete(n - 1)] * (k - 1) + tail), expected)
    g = recipe.materialize()
    if audit:
        _audit_free(g, expected, [spider_pattern(n)], f"spider_extremal({p},{n})")
    return recipe, g


def extremal_witness(pattern: TreePattern, p: int, audit: bool = True) -> tuple[Recipe, Graph]:
    """Dispatch to the family constructor; hosts too small for the tree get
    the complete graph."""
    kind, n = pattern.kind, pattern.n
    if kind == "star":
        if p < n - 1:
            return Recipe.of(Complete(p)), graphs.complete(p)
        return star_free_extremal(p, n, audit=audit)
    if p < n:
        return Recipe.of(Complete(p)), graphs.complete(p)
    if kind == "broom":
        if n == 4:
            return path_extremal(p, 4, audit=audit)
        return broom_extremal(p, n, audit=audit)
    if kind == "spider":
        return spider_extremal(p, n, audit=audit)
    return path_extremal(p, n, audit=audit)
