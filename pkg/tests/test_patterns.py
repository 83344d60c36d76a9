import random

import pytest

from conftest import brute_contains, random_graph
from turantrees import graphs
from turantrees.graphs import complete, complete_bipartite, cycle, degree_sequence, empty, from_edges
from turantrees.patterns import (
    ForbiddenFamily,
    TreePattern,
    broom,
    contains,
    contains_fast,
    family_free,
    path,
    realize,
    spider,
    star,
)

ALL_KINDS = [star, broom, spider, path]


def _random_pattern(rng, n_max=13):
    make = rng.choice(ALL_KINDS)
    lo = 2 if make in (star, path) else 4
    return make(rng.randrange(lo, n_max + 1))


def test_realized_shapes():
    assert degree_sequence(realize(spider(6))) == [3, 2, 2, 1, 1, 1]
    assert degree_sequence(realize(broom(5))) == [3, 2, 1, 1, 1]
    assert realize(star(4)) == complete_bipartite(1, 3)
    assert realize(path(2)) == complete(2)
    # the n-vertex broom has maximum degree n-2, the spider n-3
    for n in range(6, 12):
        assert degree_sequence(realize(broom(n)))[0] == n - 2
        assert degree_sequence(realize(spider(n)))[0] == n - 3


def test_small_spiders_normalize_to_paths():
    assert spider(4) == path(4)
    assert spider(5) == path(5)
    assert spider(6).kind == "spider"


def test_pattern_validation_and_parsing():
    with pytest.raises(ValueError):
        star(1)
    with pytest.raises(ValueError):
        broom(3)
    with pytest.raises(ValueError):
        TreePattern("triangle", 3)
    with pytest.raises(ValueError):
        TreePattern.parse("star")
    with pytest.raises(ValueError):
        TreePattern.parse("star:x")
    assert TreePattern.parse("spider:11") == spider(11)
    assert spider(11).spell() == "spider:11"
    fam = ForbiddenFamily.parse("star:6,spider:7")
    assert set(fam) == {star(6), spider(7)}
    assert fam.spell() == "spider:7,star:6"
    with pytest.raises(ValueError):
        ForbiddenFamily(frozenset())


def test_contains_known_cases():
    assert contains(complete_bipartite(4, 4), spider(7)) is False
    assert contains(complete(6), spider(6)) is True
    assert contains(cycle(6), broom(5)) is False
    assert contains(cycle(6), path(6)) is True
    assert contains(complete(5), path(6)) is False  # too few vertices


def test_contains_fast_known_cases():
    assert contains_fast(complete(5), star(5)) is True
    k33 = complete_bipartite(3, 3)
    assert brute_contains(k33, spider(6)) is False  # exhausts all injections
    assert contains_fast(k33, spider(6)) is False
    t6 = from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])
    assert contains_fast(t6, broom(6)) is True


def test_family_free_known_cases():
    assert family_free(complete_bipartite(3, 3), ForbiddenFamily.of(star(7), spider(8))) is True
    assert family_free(complete(8), ForbiddenFamily.of(star(7))) is False
    assert family_free(empty(6), ForbiddenFamily.of(star(3), path(2))) is True
    assert family_free(empty(0), ForbiddenFamily.of(broom(4))) is True


def test_contains_matches_brute_force():
    rng = random.Random(97)
    for _ in range(1500):
        g = random_graph(rng, rng.randrange(1, 8))
        pattern = _random_pattern(rng, 8)
        assert contains(g, pattern) == brute_contains(g, pattern), (list(g.edges()), pattern)


def test_fast_checks_agree_with_embedder():
    rng = random.Random(5)
    for _ in range(2000):
        g = random_graph(rng, rng.randrange(1, 13))
        pattern = _random_pattern(rng)
        assert contains(g, pattern) == contains_fast(g, pattern), (list(g.edges()), pattern)


def test_containment_is_monotone_under_edge_addition():
    rng = random.Random(13)
    hits = 0
    while hits < 300:
        g = random_graph(rng, rng.randrange(2, 10))
        pattern = _random_pattern(rng, 9)
        if not contains(g, pattern):
            continue
        hits += 1
        extra = [(u, v) for u in range(g.p) for v in range(u + 1, g.p)
                 if not g.has_edge(u, v) and rng.random() < 0.4]
        h = graphs.from_edges(g.p, list(g.edges()) + extra)
        assert contains(h, pattern)


def test_small_hosts_never_contain():
    for make in ALL_KINDS:
        lo = 2 if make in (star, path) else 4
        for n in range(lo, 10):
            pattern = make(n)
            assert contains(complete(n - 1), pattern) is False
            assert contains_fast(complete(n - 1), pattern) is False


def test_every_pattern_contains_itself():
    for make in ALL_KINDS:
        lo = 2 if make in (star, path) else 4
        for n in range(lo, 12):
            pattern = make(n)
            assert contains(realize(pattern), pattern) is True
            assert contains_fast(realize(pattern), pattern) is True
