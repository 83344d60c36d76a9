import pytest

from turantrees.formulas import (
    CaseTag,
    ConsistencyError,
    _half,
    _mixed_by_recursion,
    check_corollaries,
    ex_broom,
    ex_for_pattern,
    ex_mixed,
    ex_path,
    ex_spider,
    ex_star,
)
from turantrees.patterns import broom, path, spider, star


def test_path_values():
    assert ex_path(4, 4).value == 3
    assert ex_path(10, 5).value == 13
    assert ex_path(3, 4).value == 3
    assert ex_path(3, 4).case_tag == CaseTag.TRIVIAL_COMPLETE
    assert ex_path(10, 5).case_tag == CaseTag.PATH_BLOCKS
    assert (ex_path(10, 5).k, ex_path(10, 5).r) == (2, 2)
    assert ex_path(9, 2).value == 0  # forbidding an edge forces the empty graph


def test_star_values():
    assert ex_star(5, 4).value == 5
    assert ex_star(7, 5).value == 10
    assert ex_star(3, 5).value == 3
    assert ex_star(3, 5).case_tag == CaseTag.TRIVIAL_COMPLETE
    assert ex_star(7, 5).case_tag == CaseTag.STAR_CAP
    assert ex_star(8, 2).value == 0
    # degrees capped at n-2, so p = n-1 coincides with the complete graph
    assert ex_star(6, 7).value == 15


def test_broom_values():
    assert ex_broom(5, 5).value == 6
    assert ex_broom(9, 7).value == 18
    assert ex_broom(8, 6).value == 13  # frozen from the exhaustive search
    assert ex_broom(8, 7).value == 16
    assert ex_broom(9, 7).case_tag == CaseTag.BROOM_TAIL
    assert ex_broom(8, 6).case_tag == CaseTag.BROOM_CLIQUES
    # the 4-vertex broom is the 4-vertex path
    for p in range(4, 30):
        assert ex_broom(p, 4).value == ex_path(p, 4).value
    with pytest.raises(ValueError):
        ex_broom(5, 3)


def test_spider_values():
    assert ex_spider(12, 11).value == 48
    assert ex_spider(7, 6).value == 11
    assert ex_spider(8, 7).value == 16
    assert ex_spider(13, 11).value == 49
    assert ex_spider(16, 11).value == 64
    assert ex_spider(14, 8).value == 42
    assert ex_spider(13, 10).value == 43  # the r=4 exception at n=10
    assert ex_spider(14, 10).value == 49  # the r=5 exception: 4p-7
    # small spiders are paths
    for n in (4, 5):
        for p in range(n, 30):
            assert ex_spider(p, n).value == ex_path(p, n).value
    with pytest.raises(ValueError):
        ex_spider(8, 3)


def test_spider_case_tags():
    assert ex_spider(20, 11).case_tag == CaseTag.SPIDER_R0
    assert ex_spider(21, 11).case_tag == CaseTag.SPIDER_R1
    assert ex_spider(12, 11).case_tag == CaseTag.SPIDER_JOIN
    assert ex_spider(12, 11).m == 0
    assert ex_spider(14, 11).case_tag == CaseTag.SPIDER_JOIN_FLOOR
    assert ex_spider(16, 11).case_tag == CaseTag.SPIDER_BIPARTITE
    assert ex_spider(17, 11).case_tag == CaseTag.SPIDER_R_HIGH
    assert ex_spider(9, 8).case_tag == CaseTag.SPIDER_SMALL_N8
    assert ex_spider(10, 6).case_tag == CaseTag.SPIDER_SMALL_N6
    assert ex_spider(7, 11).case_tag == CaseTag.TRIVIAL_COMPLETE


def test_mixed_values():
    assert ex_mixed(11, 3).value == 49
    assert ex_mixed(9, 4).value == 36
    assert ex_mixed(7, 2).value == 16
    assert ex_mixed(11, 3).m == 3
    assert ex_mixed(7, 2).case_tag == CaseTag.MIXED_BASE
    assert ex_mixed(20, 3).case_tag == CaseTag.MIXED_RECURSE
    with pytest.raises(ValueError):
        ex_mixed(6, 1)
    with pytest.raises(ValueError):
        ex_mixed(11, 7)


def test_mixed_closed_form_equals_peeling():
    for n in range(7, 41):
        for r in range(2, n - 4):
            assert ex_mixed(n, r).value == _mixed_by_recursion(n, r), (n, r)


def test_mixed_unrolls_once():
    # one peel of 11,3: 8*5 joined edges plus the 9-edge inner optimum
    assert ex_mixed(11, 3).value == 8 * 5 + 9


def test_values_are_monotone_in_p():
    for n in range(2, 16):
        for fn in (ex_path, ex_star):
            vals = [fn(p, n).value for p in range(0, 60)]
            assert all(a <= b for a, b in zip(vals, vals[1:])), (fn, n)
    for n in range(4, 16):
        for fn in (ex_broom, ex_spider):
            vals = [fn(p, n).value for p in range(0, 60)]
            assert all(a <= b for a, b in zip(vals, vals[1:])), (fn, n)


def test_tree_upper_bound():
    # (n-2)p/2 bounds every family once p >= n
    for n in range(4, 20):
        for p in range(n, 80):
            bound = (n - 2) * p / 2
            assert ex_broom(p, n).value <= bound
            assert ex_spider(p, n).value <= bound
            assert ex_path(p, n).value <= bound


def test_families_agree_at_zero_residue():
    for n in range(6, 20):
        for k in range(1, 5):
            p = k * (n - 1)
            if p < n:
                continue
            expected = k * (n - 1) * (n - 2) // 2
            assert ex_path(p, n).value == expected
            assert ex_broom(p, n).value == expected
            assert ex_spider(p, n).value == expected


def test_exact_halving_guard():
    with pytest.raises(ConsistencyError):
        _half(7)
    assert _half(8) == 4


def test_ex_for_pattern_dispatch():
    assert ex_for_pattern(star(5), 7).value == ex_star(7, 5).value
    assert ex_for_pattern(broom(6), 8).value == ex_broom(8, 6).value
    assert ex_for_pattern(spider(7), 8).value == ex_spider(8, 7).value
    assert ex_for_pattern(path(5), 10).value == ex_path(10, 5).value
    # spider:4 normalizes to path:4 before dispatch
    assert ex_for_pattern(spider(4), 9).value == ex_path(9, 4).value


def test_corollary_fixtures_small():
    report = check_corollaries(range(11, 21), (1, 2))
    assert report.ok
    fixtures = {c.fixture for c in report.checks}
    assert fixtures == {"residue_band", "residue_half_odd", "residue_2",
                        "residue_3", "residue_4", "n11_table"}
    # spot values regenerated by the n=11 table fixture
    table = {(c.p): c.expected for c in report.checks if c.fixture == "n11_table" and c.n == 11}
    assert table[12] == 48
    assert table[13] == 49
    assert table[16] == 64
