"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
complete.  Criteria 1-4 certify the closed forms against the exhaustive
search oracle; 5 and 6 validate the constructions; 7 and 9 cross-check the
special-residue closed forms; 8 certifies the fast containment checks
against the general embedder.
"""
import io
import random
import time

import pytest

from conftest import random_graph
from turantrees import cli
from turantrees.constructors import broom_extremal, regular_graph, spider_extremal
from turantrees.formulas import (
    _mixed_by_recursion,
    check_corollaries,
    ex_broom,
    ex_mixed,
    ex_path,
    ex_spider,
    ex_star,
)
from turantrees.oracle import SearchConfig, oracle_ex
from turantrees.patterns import broom, contains, contains_fast, path, spider, star


def _report(num, name, ok, started, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"[criterion {num}] {name}: {status} ({time.time() - started:.1f}s)"
    if detail:
        line += f"  {detail}"
    print(line)
    assert ok, line


def test_criterion_1_star_certification():
    started = time.time()
    bad = []
    for n in range(2, 8):
        for p in range(n - 1, 9):
            got = oracle_ex(p, [star(n)]).value
            want = ex_star(p, n).value
            if got != want:
                bad.append((p, n, got, want))
    elapsed_ok = time.time() - started < 120
    _report(1, "star oracle == ex_star, n in 2..7, p in n-1..8", not bad and elapsed_ok,
            started, f"mismatches={bad}")


def test_criterion_2_broom_certification():
    started = time.time()
    bad = []
    for n in (5, 6, 7):
        for p in range(n, 9):
            got = oracle_ex(p, [broom(n)]).value
            want = ex_broom(p, n).value
            if got != want:
                bad.append((p, n, got, want))
    pinned = ex_broom(8, 6).value == 13 and ex_broom(8, 7).value == 16
    elapsed_ok = time.time() - started < 600
    _report(2, "broom oracle == ex_broom, n in 5..7, p in n..8",
            not bad and pinned and elapsed_ok, started, f"mismatches={bad}")


def test_criterion_3_spider_certification():
    started = time.time()
    bad = []
    for n in (6, 7):
        for p in range(n, 9):
            got = oracle_ex(p, [spider(n)]).value
            want = ex_spider(p, n).value
            if got != want:
                bad.append((p, n, got, want))
    pinned = ex_spider(7, 6).value == 11 and ex_spider(8, 7).value == 16
    elapsed_ok = time.time() - started < 900
    _report(3, "spider oracle == ex_spider, n in 6..7, p in n..8",
            not bad and pinned and elapsed_ok, started, f"mismatches={bad}")


def test_criterion_3_extension_p9_nonblocking():
    # extra p=9 certification when the budget suffices; skipping is allowed
    started = time.time()
    results = {}
    for n in (6, 7):
        res = oracle_ex(9, [spider(n)], SearchConfig(budget=300))
        results[n] = res
        if not res.exhaustive:
            print(f"[criterion 3+] spider:{n} p=9 budget exhausted, skipping (non-blocking)")
            pytest.skip("p=9 spider search did not finish inside the budget")
    bad = [(n, res.value, ex_spider(9, n).value)
           for n, res in results.items() if res.value != ex_spider(9, n).value]
    _report("3+", "spider oracle == ex_spider at p=9", not bad, started, f"mismatches={bad}")


def test_criterion_4_path_certification():
    started = time.time()
    bad = []
    for n in (3, 4, 5):
        for p in range(n, 9):
            got = oracle_ex(p, [path(n)]).value
            want = ex_path(p, n).value
            if got != want:
                bad.append((p, n, got, want))
    _report(4, "path oracle == ex_path, n in 3..5, p in n..8", not bad, started,
            f"mismatches={bad}")


def test_criterion_5_constructor_validity_sweep():
    started = time.time()
    bad = []
    for n in range(6, 31):
        for p in range(n, 201):
            _, g = spider_extremal(p, n)
            if g.edge_count() != ex_spider(p, n).value or contains(g, spider(n)):
                bad.append(("spider", p, n))
            _, g = broom_extremal(p, n)
            if g.edge_count() != ex_broom(p, n).value or contains(g, broom(n)):
                bad.append(("broom", p, n))
    elapsed_ok = time.time() - started < 600
    _report(5, "witnesses free with formula-exact edge counts, n in 6..30, p in n..200",
            not bad and elapsed_ok, started, f"violations={bad[:5]}")


def test_criterion_6_regular_graphs():
    started = time.time()
    bad = []
    for k in range(1, 11):
        for p in range(k + 1, 41):
            g = regular_graph(k, p)
            if (g is not None) != ((k * p) % 2 == 0):
                bad.append((k, p, "existence"))
            elif g is not None and any(d != k for d in g.degrees()):
                bad.append((k, p, "degrees"))
    _report(6, "k-regular graph exists iff kp is even, k in 1..10, p in k+1..40",
            not bad, started, f"violations={bad}")


def _expected_n11_value(p):
    r = p % 10
    if r in (0, 1, 7, 8, 9):
        return (9 * p - r * (10 - r)) // 2
    return (9 * p - {2: 12, 3: 19, 4: 22, 5: 21, 6: 16}[r]) // 2


def test_criterion_7_corollary_consistency():
    started = time.time()
    report = check_corollaries(range(11, 61), (1, 2, 3))
    mismatches = report.mismatches

    def table_csv():
        out = io.StringIO()
        code = cli.run(cli.CliRequest(subcommand="table", pattern="spider:11",
                                      p_spec="11..60", fmt="csv"), out)
        assert code == 0
        return out.getvalue()

    first, second = table_csv(), table_csv()
    identical = first == second
    csv_ok = True
    for line in first.strip().splitlines()[1:]:
        cells = line.split(",")
        if int(cells[4]) != _expected_n11_value(int(cells[0])):
            csv_ok = False
    _report(7, "residue fixtures match ex_spider over n in 11..60 and the n=11 "
               "table CSV regenerates bit-identically",
            not mismatches and identical and csv_ok, started,
            f"checks={len(report.checks)} mismatches={len(mismatches)}")


def test_criterion_8_checker_equivalence():
    started = time.time()
    rng = random.Random(20110)
    makers = [star, broom, spider, path]
    disagreements = 0
    for _ in range(10000):
        g = random_graph(rng, rng.randrange(1, 13))
        make = rng.choice(makers)
        lo = 2 if make in (star, path) else 4
        pattern = make(rng.randrange(lo, 14))
        if contains(g, pattern) != contains_fast(g, pattern):
            disagreements += 1
    _report(8, "contains == contains_fast on 10000 random instances, p <= 12",
            disagreements == 0, started, f"disagreements={disagreements}")


def test_criterion_9_closed_form_vs_recursion():
    started = time.time()
    bad = []
    for n in range(7, 41):
        for r in range(2, n - 4):
            closed = ex_mixed(n, r).value
            peeled = _mixed_by_recursion(n, r)
            if closed != peeled:
                bad.append((n, r, closed, peeled))
    _report(9, "mixed-family closed form equals the peeled recursion, n in 7..40",
            not bad, started, f"mismatches={bad}")
