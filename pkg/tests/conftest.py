import random
from itertools import permutations

from turantrees import graphs
from turantrees.patterns import realize


def random_graph(rng: random.Random, p: int, q: float | None = None) -> graphs.Graph:
    q = rng.random() if q is None else q
    edges = [(u, v) for u in range(p) for v in range(u + 1, p) if rng.random() < q]
    return graphs.from_edges(p, edges)


def brute_contains(g: graphs.Graph, pattern) -> bool:
    """Containment by exhausting every injective vertex map; only for tiny hosts."""
    tree = realize(pattern)
    if tree.p > g.p:
        return False
    tedges = list(tree.edges())
    return any(
        all(g.has_edge(f[a], f[b]) for a, b in tedges)
        for f in permutations(range(g.p), tree.p)
    )
