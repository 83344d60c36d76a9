"""Independent brute-force computation of the extremal numbers at desk scale.

The search walks the edge slots of the labelled complete graph in a fixed
order, branching on include/exclude, and adds an edge only when the graph
stays free of every forbidden tree.  Presence of a forbidden tree is
preserved by adding edges, so cutting a branch at the first violation is
exact.  Two exact upper bounds prune the rest: edges so far plus undecided
slots, and (when a star is forbidden) a per-vertex degree-capacity bound.

Freeness after adding edge (u,v) is re-checked only around that edge: the
graph was free before, so any new forbidden tree must use it.  A full-graph
re-check mode exists behind ``SearchConfig.full_recheck`` for differential
testing.

Randomized greedy completions seed the incumbent before the search proper;
they only tighten pruning and never affect the value.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from . import graphs
from .constructors import extremal_witness
from .formulas import ExValue, ex_for_pattern
from .graphs import Graph, iter_bits
from .patterns import ForbiddenFamily, TreePattern, contains, family_free


@dataclass(frozen=True)
class SearchConfig:
    max_p: int = 9
    budget: float | None = None
    iso_rejection: bool = False
    parallel: int = 1
    seed_restarts: int = 24
    rng_seed: int = 2011
    full_recheck: bool = False
    allow_large: bool = False


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Graph
    nodes_explored: int
    exhaustive: bool


class _BudgetExceeded(Exception):
    pass


def _family_list(family) -> list[TreePattern]:
    pats = list(family.patterns) if isinstance(family, ForbiddenFamily) else list(family)
    return sorted(set(pats), key=lambda q: (q.kind, q.n))


def _make_checker(p: int, rows: list[int], deg: list[int], fam: list[TreePattern],
                  full_recheck: bool):
    """Return (star_cap, violates) operating on the live rows/deg arrays.

    ``violates(u, v)`` assumes edge (u,v) is already present in ``rows`` and
    that the graph was family-free before it was added.
    """
    star_cap = min((q.n - 2 for q in fam if q.kind == "star"), default=None)
    brooms = sorted(q.n for q in fam if q.kind == "broom")
    spiders = sorted(q.n for q in fam if q.kind == "spider")
    paths = sorted(q.n for q in fam if q.kind == "path")

    if full_recheck:
        def violates(u: int, v: int) -> bool:
            g = Graph(p, tuple(rows))
            return any(contains(g, q) for q in fam)

        return star_cap, violates

    def broom_at(c: int, n: int) -> bool:
        gc = rows[c]
        d = deg[c]
        if d < n - 2:
            return False
        cbit = 1 << c
        for w in iter_bits(gc):
            others = rows[w] & ~cbit
            if not others:
                continue
            if (others & ~gc) and d - 1 >= n - 3:
                return True
            if (others & gc) and d - 2 >= n - 3:
                return True
        return False

    def spider_at(c: int, n: int) -> bool:
        gc = rows[c]
        d = deg[c]
        if d < n - 3:
            return False
        cbit = 1 << c
        for w in iter_bits(gc):
            wbit = 1 << w
            for x in iter_bits(rows[w] & ~cbit):
                ys = rows[x] & ~(cbit | wbit)
                if not ys:
                    continue
                base = d - 1 - ((gc >> x) & 1)
                if (ys & ~gc) and base >= n - 4:
                    return True
                if (ys & gc) and base - 1 >= n - 4:
                    return True
        return False

    def path_through(u: int, v: int, n: int) -> bool:
        # u at position i, v at position i+1 of an n-vertex path
        def extend(a: int, need: int, used: int, b: int, need_b: int) -> bool:
            if need == 0:
                return tail(b, need_b, used)
            for w in iter_bits(rows[a] & ~used):
                if extend(w, need - 1, used | (1 << w), b, need_b):
                    return True
            return False

        def tail(b: int, need: int, used: int) -> bool:
            if need == 0:
                return True
            for w in iter_bits(rows[b] & ~used):
                if tail(w, need - 1, used | (1 << w)):
                    return True
            return False

        base = (1 << u) | (1 << v)
        return any(extend(u, i, base, v, n - 2 - i) for i in range(n - 1))

    def violates(u: int, v: int) -> bool:
        if brooms:
            near = (1 << u) | (1 << v) | rows[u] | rows[v]
            for n in brooms:
                for c in iter_bits(near):
                    if broom_at(c, n):
                        return True
        if spiders:
            near = (1 << u) | (1 << v) | rows[u] | rows[v]
            ball = near
            for w in iter_bits(near):
                ball |= rows[w]
            for n in spiders:
                for c in iter_bits(ball):
                    if spider_at(c, n):
                        return True
        return any(path_through(u, v, n) for n in paths)

    return star_cap, violates


def _greedy_fill(p: int, fam: list[TreePattern], order, full_recheck: bool):
    rows = [0] * p
    deg = [0] * p
    cap, violates = _make_checker(p, rows, deg, fam, full_recheck)
    edges = 0
    for u, v in order:
        if cap is not None and (deg[u] >= cap or deg[v] >= cap):
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        if violates(u, v):
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            deg[u] -= 1
            deg[v] -= 1
        else:
            edges += 1
    return edges, tuple(rows)


def _seed_incumbent(p: int, fam: list[TreePattern], slots, cfg: SearchConfig):
    rng = random.Random(cfg.rng_seed)
    best, best_rows = 0, (0,) * p
    orders = [list(slots), list(reversed(slots))]
    for _ in range(cfg.seed_restarts):
        order = list(slots)
        rng.shuffle(order)
        orders.append(order)
    for order in orders:
        val, rows = _greedy_fill(p, fam, order, cfg.full_recheck)
        if val > best:
            best, best_rows = val, rows
    return best, best_rows


def _search_task(args):
    """One DFS over the undecided slot suffix; used directly and by workers."""
    (p, fam, slots, forced, best, best_rows, cfg, time_left) = args
    deadline = time.monotonic() + time_left if time_left is not None else None
    rows = [0] * p
    deg = [0] * p
    cap, violates = _make_checker(p, rows, deg, fam, cfg.full_recheck)
    edges = 0
    undec = [0] * p
    for u, v in slots:
        undec[u] += 1
        undec[v] += 1
    # apply the forced include/exclude prefix (parallel split)
    for (u, v), include in zip(slots, forced):
        undec[u] -= 1
        undec[v] -= 1
        if include:
            if cap is not None and (deg[u] >= cap or deg[v] >= cap):
                return best, best_rows, 0, True
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
            edges += 1
            if violates(u, v):
                return best, best_rows, 0, True
    start = len(forced)
    nslots = len(slots)
    nodes = 0
    iso = cfg.iso_rejection

    def dfs(idx: int):
        nonlocal best, best_rows, nodes, edges
        nodes += 1
        if deadline is not None and (nodes & 1023) == 0 and time.monotonic() > deadline:
            raise _BudgetExceeded
        if edges > best:
            best = edges
            best_rows = tuple(rows)
        if idx == nslots:
            return
        rem = nslots - idx
        if cap is not None:
            s = 0
            for w in range(p):
                c = cap - deg[w]
                uw = undec[w]
                s += c if c < uw else uw
            if (s >> 1) < rem:
                rem = s >> 1
        if edges + rem <= best:
            return
        u, v = slots[idx]
        undec[u] -= 1
        undec[v] -= 1
        allowed = cap is None or (deg[u] < cap and deg[v] < cap)
        if allowed and iso and edges == 0 and idx > 0:
            # any nonempty graph has an isomorph using the first slot
            allowed = False
        if allowed:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
            edges += 1
            if not violates(u, v):
                dfs(idx + 1)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            deg[u] -= 1
            deg[v] -= 1
            edges -= 1
        dfs(idx + 1)
        undec[u] += 1
        undec[v] += 1

    exhaustive = True
    try:
        dfs(start)
    except _BudgetExceeded:
        exhaustive = False
    return best, best_rows, nodes, exhaustive


def oracle_ex(p: int, family, config: SearchConfig | None = None,
              slot_order=None) -> OracleResult:
    """Exact maximum edge count over family-free graphs on p labelled
    vertices, with a witness.

    ``family`` is any iterable of patterns (a ForbiddenFamily works); an
    empty family yields the complete graph.  Refuses p > config.max_p unless
    ``allow_large`` is set.  If the time budget runs out the best value found
    so far is returned with ``exhaustive=False``.
    """
    cfg = config or SearchConfig()
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p > cfg.max_p and not cfg.allow_large:
        raise ValueError(f"p={p} exceeds max_p={cfg.max_p} (set allow_large to override)")
    fam = [q for q in _family_list(family) if q.n <= p]
    if slot_order is None:
        slots = [(u, v) for v in range(p) for u in range(v)]
    else:
        slots = [(min(u, v), max(u, v)) for u, v in slot_order]
        if sorted(slots) != sorted((u, v) for v in range(p) for u in range(v)):
            raise ValueError("slot_order must enumerate every vertex pair exactly once")
    if not fam:
        return OracleResult(comb(p, 2), graphs.complete(p), 1, True)

    t0 = time.monotonic()
    best, best_rows = _seed_incumbent(p, fam, slots, cfg)

    def time_left():
        if cfg.budget is None:
            return None
        return max(0.0, cfg.budget - (time.monotonic() - t0))

    if cfg.parallel > 1 and len(slots) >= 2:
        tasks = []
        for a in (True, False):
            for b in (True, False):
                tasks.append((p, fam, slots, (a, b), best, best_rows, cfg, time_left()))
        total_nodes = 0
        exhaustive = True
        with ProcessPoolExecutor(max_workers=min(cfg.parallel, 4)) as pool:
            for val, rows, nodes, done in pool.map(_search_task, tasks):
                total_nodes += nodes
                exhaustive = exhaustive and done
                if val > best:
                    best, best_rows = val, rows
    else:
        best, best_rows, total_nodes, exhaustive = _search_task(
            (p, fam, slots, (), best, best_rows, cfg, time_left()))

    witness = Graph(p, best_rows)
    if witness.edge_count() != best or not family_free(witness, fam):
        raise RuntimeError("oracle produced an inconsistent witness")
    return OracleResult(best, witness, total_nodes, exhaustive)


def oracle_mixed(p: int, family, config: SearchConfig | None = None,
                 slot_order=None) -> OracleResult:
    """Alias of :func:`oracle_ex`: freeness is already conjunctive over the
    family, which is what mixed families need."""
    return oracle_ex(p, family, config, slot_order)


# -- formula / oracle / constructor three-way sweep ---------------------------


@dataclass(frozen=True)
class SweepRow:
    p: int
    formula: ExValue
    oracle_value: int
    exhaustive: bool
    witness_edges: int
    witness_free: bool

    @property
    def ok(self) -> bool:
        return (self.exhaustive
                and self.formula.value == self.oracle_value == self.witness_edges
                and self.witness_free)


@dataclass
class SweepReport:
    pattern: TreePattern
    rows: list[SweepRow]

    @property
    def mismatches(self) -> list[SweepRow]:
        return [row for row in self.rows if row.exhaustive and not row.ok]

    @property
    def incomplete(self) -> list[SweepRow]:
        return [row for row in self.rows if not row.exhaustive]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.incomplete


def verify_sweep(pattern: TreePattern, p_values, config: SearchConfig | None = None) -> SweepReport:
    """For each p: closed-form value, oracle value, and constructed witness;
    any disagreement is a mismatch."""
    rows = []
    for p in p_values:
        formula = ex_for_pattern(pattern, p)
        result = oracle_ex(p, [pattern], config)
        _, witness = extremal_witness(pattern, p)
        rows.append(SweepRow(
            p=p,
            formula=formula,
            oracle_value=result.value,
            exhaustive=result.exhaustive,
            witness_edges=witness.edge_count(),
            witness_free=not contains(witness, pattern),
        ))
    return SweepReport(pattern, rows)
