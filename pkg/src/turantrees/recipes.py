"""Symbolic descriptions of constructed graphs.

A recipe is an expression tree over the atomic pieces (complete graphs,
complete bipartite graphs, isolated vertices, and the circulant-style piece
defined by the constructors module) combined by disjoint union and complete
join.  Every node knows its vertex count, a closed-form edge count, and how
to materialize itself; ``Recipe.verify`` cross-checks the closed form against
the materialized graph.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import graphs
from .graphs import Graph


class RecipeError(RuntimeError):
    """A recipe's claimed edge count disagrees with its materialization."""


class RecipeNode:
    def vertex_count(self) -> int:
        raise NotImplementedError

    def symbolic_edge_count(self) -> int:
        raise NotImplementedError

    def materialize(self) -> Graph:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Complete(RecipeNode):
    a: int

    def vertex_count(self):
        return self.a

    def symbolic_edge_count(self):
        return self.a * (self.a - 1) // 2

    def materialize(self):
        return graphs.complete(self.a)

    def describe(self):
        return f"K{self.a}"


@dataclass(frozen=True)
class CompleteBipartite(RecipeNode):
    a: int
    b: int

    def vertex_count(self):
        return self.a + self.b

    def symbolic_edge_count(self):
        return self.a * self.b

    def materialize(self):
        return graphs.complete_bipartite(self.a, self.b)

    def describe(self):
        return f"K{self.a},{self.b}"


@dataclass(frozen=True)
class Isolated(RecipeNode):
    a: int

    def vertex_count(self):
        return self.a

    def symbolic_edge_count(self):
        return 0

    def materialize(self):
        return graphs.empty(self.a)

    def describe(self):
        return f"{self.a}K1" if self.a != 1 else "K1"


@dataclass(frozen=True)
class DisjointUnion(RecipeNode):
    parts: tuple[RecipeNode, ...]

    def vertex_count(self):
        return sum(part.vertex_count() for part in self.parts)

    def symbolic_edge_count(self):
        return sum(part.symbolic_edge_count() for part in self.parts)

    def materialize(self):
        g = graphs.empty(0)
        for part in self.parts:
            g = graphs.disjoint_union(g, part.materialize())
        return g

    def describe(self):
        # group equal consecutive parts: K6 u K6 u K3 -> 2K6 u K3
        groups: list[tuple[RecipeNode, int]] = []
        for part in self.parts:
            if groups and groups[-1][0] == part:
                groups[-1] = (part, groups[-1][1] + 1)
            else:
                groups.append((part, 1))
        words = []
        for part, count in groups:
            text = part.describe()
            if isinstance(part, (DisjointUnion, CompleteJoin)):
                text = f"({text})"
            if count > 1:
                if isinstance(part, Isolated) and part.a == 1:
                    text = f"{count}K1"
                else:
                    text = f"{count}x{text}" if not isinstance(part, Complete) else f"{count}{text}"
            words.append(text)
        return " u ".join(words)


@dataclass(frozen=True)
class CompleteJoin(RecipeNode):
    left: RecipeNode
    right: RecipeNode

    def vertex_count(self):
        return self.left.vertex_count() + self.right.vertex_count()

    def symbolic_edge_count(self):
        return (
            self.left.symbolic_edge_count()
            + self.right.symbolic_edge_count()
            + self.left.vertex_count() * self.right.vertex_count()
        )

    def materialize(self):
        return graphs.complete_join(self.left.materialize(), self.right.materialize())

    def describe(self):
        return f"join({self.left.describe()}, {self.right.describe()})"


def union_of(parts) -> RecipeNode:
    """Flattened disjoint union; collapses the single-part case."""
    flat: list[RecipeNode] = []
    for part in parts:
        if isinstance(part, DisjointUnion):
            flat.extend(part.parts)
        else:
            flat.append(part)
    if len(flat) == 1:
        return flat[0]
    return DisjointUnion(tuple(flat))


@dataclass(frozen=True)
class Recipe:
    root: RecipeNode
    claimed_edges: int

    @classmethod
    def of(cls, root: RecipeNode) -> "Recipe":
        return cls(root, root.symbolic_edge_count())

    def materialize(self) -> Graph:
        return self.root.materialize()

    def verify(self) -> Graph:
        g = self.root.materialize()
        if g.edge_count() != self.claimed_edges:
            raise RecipeError(
                f"recipe {self.describe()!r} claims {self.claimed_edges} edges, "
                f"materialized {g.edge_count()}"
            )
        return g

    def describe(self) -> str:
        return self.root.describe()
