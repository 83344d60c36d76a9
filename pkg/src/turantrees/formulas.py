"""Closed-form extremal edge counts for the four tree families.

Every evaluator is total: hosts too small for the tree return the complete
graph count C(p,2).  In range, the value is computed from the block
decomposition p = k(n-1) + r with r in {0,...,n-2}, and the returned
``ExValue`` records which dispatch branch produced it, so tests can pin the
branch and not just the number.

Divisions by 2 or 4 in non-floor branches must be exact; an odd numerator
means the dispatch itself is wrong and raises ``ConsistencyError`` instead of
silently flooring.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .patterns import TreePattern


class ConsistencyError(RuntimeError):
    """An exact-division or cross-check assumption failed; indicates a bug."""


class CaseTag:
    TRIVIAL_COMPLETE = "TRIVIAL_COMPLETE"
    PATH_BLOCKS = "PATH_BLOCKS"
    STAR_CAP = "STAR_CAP"
    BROOM_CLIQUES = "BROOM_CLIQUES"
    BROOM_TAIL = "BROOM_TAIL"
    SPIDER_R0 = "SPIDER_R0"
    SPIDER_R_HIGH = "SPIDER_R_HIGH"
    SPIDER_R1 = "SPIDER_R1"
    SPIDER_BIPARTITE = "SPIDER_BIPARTITE"
    SPIDER_JOIN = "SPIDER_JOIN"
    SPIDER_JOIN_FLOOR = "SPIDER_JOIN_FLOOR"
    SPIDER_SMALL_N6 = "SPIDER_SMALL_N6"
    SPIDER_SMALL_N7 = "SPIDER_SMALL_N7"
    SPIDER_SMALL_N8 = "SPIDER_SMALL_N8"
    SPIDER_SMALL_N9 = "SPIDER_SMALL_N9"
    SPIDER_SMALL_N10 = "SPIDER_SMALL_N10"
    MIXED_BASE = "MIXED_BASE"
    MIXED_RECURSE = "MIXED_RECURSE"


@dataclass(frozen=True)
class ExValue:
    """An exact extremal number plus the branch that produced it."""

    value: int
    case_tag: str
    k: int | None = None
    r: int | None = None
    m: int | None = None

    def __post_init__(self):
        if self.value < 0:
            raise ConsistencyError("negative extremal value")


def _half(x: int) -> int:
    if x & 1:
        raise ConsistencyError(f"odd numerator {x} in an exact halving")
    return x >> 1


def _quarter(x: int) -> int:
    if x & 3:
        raise ConsistencyError(f"numerator {x} not divisible by 4")
    return x >> 2


def _split(p: int, n: int) -> tuple[int, int]:
    """p = k(n-1) + r with r in {0,...,n-2}; requires p >= n-1."""
    k, r = divmod(p, n - 1)
    return k, r


def _trivial(p: int) -> ExValue:
    return ExValue(comb(p, 2), CaseTag.TRIVIAL_COMPLETE)


def ex_path(p: int, n: int) -> ExValue:
    """Max edges with no n-vertex path: k*C(n-1,2) + C(r,2)."""
    if n < 2:
        raise ValueError("path patterns need n >= 2")
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p < n:
        return _trivial(p)
    k, r = _split(p, n)
    return ExValue(k * comb(n - 1, 2) + comb(r, 2), CaseTag.PATH_BLOCKS, k=k, r=r)


def ex_star(p: int, n: int) -> ExValue:
    """Max edges with no n-vertex star: floor((n-2)p/2) once p >= n-1."""
    if n < 2:
        raise ValueError("star patterns need n >= 2")
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p < n - 1:
        return _trivial(p)
    return ExValue(((n - 2) * p) // 2, CaseTag.STAR_CAP)


def ex_broom(p: int, n: int) -> ExValue:
    """Max edges with no n-vertex broom.

    The 4-vertex broom is the 4-vertex path, so n=4 delegates to ex_path.
    For n >= 7 and 2 <= r <= n-4 the optimum keeps k-1 complete blocks plus a
    denser near-regular tail, giving floor(((n-2)(p-1)-r-1)/2); otherwise it
    is the plain block value ((n-2)p - r(n-1-r))/2.
    """
    if n < 4:
        raise ValueError("broom patterns need n >= 4")
    if n == 4:
        return ex_path(p, 4)
    if p < n:
        return _trivial(p)
    k, r = _split(p, n)
    if n >= 7 and 2 <= r <= n - 4:
        return ExValue(((n - 2) * (p - 1) - r - 1) // 2, CaseTag.BROOM_TAIL, k=k, r=r)
    return ExValue(_half((n - 2) * p - r * (n - 1 - r)), CaseTag.BROOM_CLIQUES, k=k, r=r)


def _mixed_by_recursion(n: int, r: int) -> int:
    """Peel r+2 joined vertices off the mixed-family extremal graph until the
    closed base applies (2r >= n-7): independent route for cross-checking."""
    if 2 * r >= n - 7:
        return (n - 3) * (r + 2) + max((n - 5 - r) ** 2, ((n - 6 - r) * (n - 3)) // 2)
    return (n - 3) * (r + 2) + _mixed_by_recursion(n - 2 - r, r)


def ex_mixed(n: int, r: int) -> ExValue:
    """Max edges on n-1+r vertices avoiding both the (n-1)-vertex star and
    the n-vertex spider.

    Closed form with m = (n-3) mod (r+2):
    (n-3-m)(n-1+r+m)/2 + max(m^2, floor((r+2+m)(m-1)/2)).
    The unrolled peeling recursion is evaluated too and must agree (the r=1
    case is experimental and skips the cross-check).
    """
    if n < 7:
        raise ValueError("mixed family needs n >= 7")
    if not 1 <= r <= n - 5:
        raise ValueError(f"need 1 <= r <= n-5, got r={r}")
    m = (n - 3) % (r + 2)
    value = _half((n - 3 - m) * (n - 1 + r + m)) + max(m * m, ((r + 2 + m) * (m - 1)) // 2)
    if r >= 2:
        rec = _mixed_by_recursion(n, r)
        if rec != value:
            raise ConsistencyError(
                f"mixed closed form {value} != peeled recursion {rec} at n={n}, r={r}"
            )
    tag = CaseTag.MIXED_BASE if 2 * r >= n - 7 else CaseTag.MIXED_RECURSE
    return ExValue(value, tag, r=r, m=m)


def _ex_spider_small(p: int, n: int, k: int, r: int) -> ExValue:
    tag = getattr(CaseTag, f"SPIDER_SMALL_N{n}")
    if n in (6, 7):
        return ExValue(_half((n - 2) * p - r * (n - 1 - r)), tag, k=k, r=r)
    if n in (8, 9):
        if r == n - 5:
            return ExValue(_half((n - 2) * (p - 2)) + 1, tag, k=k, r=r)
        return ExValue(_half((n - 2) * p - r * (n - 1 - r)), tag, k=k, r=r)
    # n == 10
    if r == 5:
        return ExValue(4 * p - 7, tag, k=k, r=r)
    if r == 4:
        return ExValue(4 * p - 9, tag, k=k, r=r)
    return ExValue(4 * p - _half(r * (9 - r)), tag, k=k, r=r)


def ex_spider(p: int, n: int) -> ExValue:
    """Max edges with no n-vertex spider.

    The 4- and 5-vertex spiders are paths, so those n delegate to ex_path.
    For 6 <= n <= 10 the small-n closed forms apply directly; for n >= 11 the
    dispatch is on r: block unions for r in {0, n-4, n-3, n-2}, the one-spare
    value (n-2)(p-1)/2 for r=1, the balanced-bipartite value (n-2)(p-2)/2+1
    for r=n-5, and the join-construction formulas (via m = (n-3) mod (r+2))
    for 2 <= r <= n-6.
    """
    if n < 4:
        raise ValueError("spider patterns need n >= 4")
    if n in (4, 5):
        return ex_path(p, n)
    if p < n:
        return _trivial(p)
    k, r = _split(p, n)
    if n <= 10:
        return _ex_spider_small(p, n, k, r)
    if r == 0:
        return ExValue(_half((n - 2) * p), CaseTag.SPIDER_R0, k=k, r=r)
    if r in (n - 4, n - 3, n - 2):
        return ExValue(_half((n - 2) * p - r * (n - 1 - r)), CaseTag.SPIDER_R_HIGH, k=k, r=r)
    if r == 1:
        return ExValue(_half((n - 2) * (p - 1)), CaseTag.SPIDER_R1, k=k, r=r)
    if r == n - 5:
        return ExValue(_half((n - 2) * (p - 2)) + 1, CaseTag.SPIDER_BIPARTITE, k=k, r=r)
    m = (n - 3) % (r + 2)
    if r >= 4 and 2 <= m <= r - 1:
        value = ((n - 2) * (p - 1) - 2 * r - m - 3) // 2
        return ExValue(value, CaseTag.SPIDER_JOIN_FLOOR, k=k, r=r, m=m)
    value = _half((n - 2) * (p - 1) - m * (r + 2 - m) - r - 1)
    return ExValue(value, CaseTag.SPIDER_JOIN, k=k, r=r, m=m)


def ex_for_pattern(pattern: TreePattern, p: int) -> ExValue:
    """Dispatch to the family evaluator for a parsed pattern."""
    if pattern.kind == "star":
        return ex_star(p, pattern.n)
    if pattern.kind == "broom":
        return ex_broom(p, pattern.n)
    if pattern.kind == "spider":
        return ex_spider(p, pattern.n)
    return ex_path(p, pattern.n)


# -- consistency fixtures -----------------------------------------------------
# The special-residue closed forms implied by the spider dispatch, evaluated
# independently and compared against ex_spider over a grid.


@dataclass(frozen=True)
class CorollaryCheck:
    fixture: str
    n: int
    p: int
    r: int
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class CorollaryReport:
    checks: list[CorollaryCheck]

    @property
    def mismatches(self) -> list[CorollaryCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _n11_table_value(p: int, r: int) -> int:
    if r in (0, 1, 7, 8, 9):
        return _half(9 * p - r * (10 - r))
    return _half(9 * p - {2: 12, 3: 19, 4: 22, 5: 21, 6: 16}[r])


def check_corollaries(n_values: Iterable[int], k_values: Iterable[int] = (1, 2, 3)) -> CorollaryReport:
    """Evaluate the special-residue closed forms against ex_spider.

    Fixtures: the high-residue band ((n-7)/2 < r <= n-6), the odd-n residue
    r=(n-7)/2, the fixed residues r=2, r=3, r=4, and the full n=11 table over
    every residue class.  Any mismatch would mean a dispatch bug.
    """
    checks: list[CorollaryCheck] = []
    ks = sorted(set(k_values))

    def add(fixture, n, p, r, expected):
        checks.append(CorollaryCheck(fixture, n, p, r, expected, ex_spider(p, n).value))

    for n in sorted(set(n_values)):
        if n < 11:
            continue
        for k in ks:
            # residue band (n-7)/2 < r <= n-6
            for r in range((n - 7) // 2 + 1, n - 5):
                if 2 * r <= n - 7:
                    continue
                p = k * (n - 1) + r
                if 2 * r == n - 5:
                    expected = _quarter((n - 2) * (2 * p - 5) + 7)
                elif 2 * r == n - 6:
                    expected = _half((n - 2) * (p - 2)) + 1
                elif r == n - 6:
                    expected = _half((n - 2) * (p - 3)) + 3
                else:  # (n-4)/2 <= r <= n-7
                    expected = ((n - 2) * (p - 2) - r) // 2
                add("residue_band", n, p, r, expected)
            # odd n, r = (n-7)/2
            if n % 2 == 1:
                r = (n - 7) // 2
                p = k * (n - 1) + r
                add("residue_half_odd", n, p, r, _quarter((n - 2) * (2 * p - 3) + 3))
            # r = 2
            p = k * (n - 1) + 2
            if n % 2 == 0:
                expected = _half((n - 2) * (p - 1) - 6)
            elif n % 4 == 1:
                expected = _half((n - 2) * (p - 1) - 7)
            else:
                expected = _half((n - 2) * (p - 1) - 3)
            add("residue_2", n, p, 2, expected)
            # r = 3
            p = k * (n - 1) + 3
            base = _half((n - 2) * (p - 1))
            expected = base - {3: 2, 2: 4, 4: 4, 0: 5, 1: 5}[n % 5]
            add("residue_3", n, p, 3, expected)
            # r = 4
            p = k * (n - 1) + 4
            mod6 = n % 6
            if mod6 == 0:
                expected = _half((n - 2) * (p - 1)) - 7
            elif mod6 in (2, 4):
                expected = _half((n - 2) * (p - 1)) - 5
            elif mod6 == 3:
                expected = _half((n - 2) * (p - 1) - 5)
            else:
                expected = _half((n - 2) * (p - 1) - 13)
            add("residue_4", n, p, 4, expected)
        if n == 11:
            for k in ks:
                for r in range(10):
                    p = 10 * k + r
                    if p < 11:
                        continue
                    add("n11_table", n, p, r, _n11_table_value(p, r))
    return CorollaryReport(checks)
