import math
import random

import pytest

import ndlham as nh
from ndlham.errors import InvalidParameters, TooLarge
from ndlham.factors import validate_two_factor
from conftest import (
    brute_hamilton_count,
    brute_matching_count,
    brute_two_factors,
)


def test_k4_enumeration():
    fs = nh.enumerate_two_factors(nh.complete(4))
    assert len(fs) == 6
    cycles = [f for f in fs if f.num_components == 1]
    matchings = [f for f in fs if f.num_components == 2]
    assert len(cycles) == 3 and len(matchings) == 3
    assert all(f.num_long_cycles == 1 for f in cycles)
    assert all(f.num_long_cycles == 0 for f in matchings)


def test_c5_c3_single_factor():
    assert len(nh.enumerate_two_factors(nh.cycle(5))) == 1
    assert len(nh.enumerate_two_factors(nh.complete(3))) == 1


def test_enumeration_matches_brute_force(corpus):
    for name, g in corpus:
        if g.n > 7:
            continue
        mine = {frozenset(f.edges()) for f in nh.enumerate_two_factors(g)}
        assert mine == brute_two_factors(g), name


def test_enumeration_no_duplicates(corpus):
    for name, g in corpus:
        if g.n > 10:
            continue
        fs = nh.enumerate_two_factors(g)
        assert len({f.components for f in fs}) == len(fs), name
        for f in fs:
            validate_two_factor(g, f)


def test_weighted_sum_examples():
    assert nh.weighted_cycle_cover_sum(nh.complete(4)) == 9
    assert nh.weighted_cycle_cover_sum(nh.cycle(5)) == 2
    assert nh.weighted_cycle_cover_sum(nh.cycle(4)) == 4


def test_histogram_examples():
    assert nh.factor_histogram(nh.complete(4)).counts == {1: 3, 2: 3}
    assert nh.factor_histogram(nh.cycle(5)).counts == {1: 1}
    assert nh.factor_histogram(nh.cycle(6)).counts == {1: 1, 3: 2}


def test_histogram_consistency(corpus):
    for name, g in corpus:
        if g.n > 14:
            continue
        hist = nh.factor_histogram(g)
        assert hist.total == sum(hist.counts.values()), name
        assert hist.weighted_total == nh.weighted_cycle_cover_sum(g), name
        assert hist.weighted_total >= hist.total, name


def test_hamilton_complete_graphs():
    for n in range(4, 9):
        assert nh.hamilton_count_exact(nh.complete(n)) == math.factorial(n - 1) // 2


def test_hamilton_cycles_and_petersen():
    for n in range(3, 11):
        assert nh.hamilton_count_exact(nh.cycle(n)) == 1
    assert nh.hamilton_count_exact(nh.petersen()) == 0


def test_hamilton_matches_brute(corpus):
    for name, g in corpus:
        if g.n > 8:
            continue
        assert nh.hamilton_count_exact(g) == brute_hamilton_count(g), name


def test_hamilton_equals_single_component_count(corpus):
    for name, g in corpus:
        if g.n > 14 or g.n < 3:
            continue
        hist = nh.factor_histogram(g)
        assert hist.counts.get(1, 0) == nh.hamilton_count_exact(g), name


def test_hamilton_bigint_path_agrees():
    from ndlham.factors import _hamilton_dp_bigint, _hamilton_dp_int64

    for g in (nh.complete(7), nh.petersen(), nh.random_regular(12, 4, 5)):
        assert _hamilton_dp_bigint(g) == _hamilton_dp_int64(g)


def test_matching_counts():
    assert nh.perfect_matching_count(nh.complete(4)) == 3
    assert nh.perfect_matching_count(nh.cycle(6)) == 2
    assert nh.perfect_matching_count(nh.petersen()) == 6
    with pytest.raises(InvalidParameters):
        nh.perfect_matching_count(nh.complete(5))


def test_matching_matches_brute(corpus):
    for name, g in corpus:
        if g.n % 2 or g.n > 10:
            continue
        assert nh.perfect_matching_count(g) == brute_matching_count(g), name


def test_phi_examples():
    k4 = nh.complete(4)
    assert nh.phi(k4, 4) == 6
    assert nh.phi(k4, 3) == 1
    assert nh.phi(k4, 2) == 1
    with pytest.raises(InvalidParameters):
        nh.phi(k4, 1)


def test_near_hamilton_counts():
    k4 = nh.complete(4)
    h = next(f for f in nh.enumerate_two_factors(k4) if f.num_components == 1)
    assert nh.two_factors_near_hamilton(k4, h, 0) == 1
    assert nh.two_factors_near_hamilton(k4, h, 2) <= math.comb(4, 2) * 3**4

    k5 = nh.complete(5)
    h5 = next(f for f in nh.enumerate_two_factors(k5) if f.num_components == 1)
    assert nh.two_factors_near_hamilton(k5, h5, 1) <= 5 * 4**2


def test_near_hamilton_rejects_non_cycle():
    k4 = nh.complete(4)
    matching = next(f for f in nh.enumerate_two_factors(k4) if f.num_components == 2)
    with pytest.raises(InvalidParameters):
        nh.two_factors_near_hamilton(k4, matching, 1)


def test_relabel_invariance():
    rng = random.Random(13)
    g = nh.random_regular(10, 3, 4)
    h = nh.hamilton_count_exact(g)
    w = nh.weighted_cycle_cover_sum(g)
    m = nh.perfect_matching_count(g)
    for _ in range(3):
        perm = list(range(10))
        rng.shuffle(perm)
        gp = g.relabeled(perm)
        assert nh.hamilton_count_exact(gp) == h
        assert nh.weighted_cycle_cover_sum(gp) == w
        assert nh.perfect_matching_count(gp) == m


def test_caps():
    big = nh.cycle(17)
    with pytest.raises(TooLarge):
        nh.enumerate_two_factors(big)
    with pytest.raises(TooLarge):
        nh.weighted_cycle_cover_sum(big)


def test_histogram_json():
    d = nh.factor_histogram(nh.complete(4)).to_json_dict()
    assert d == {"counts": {"1": "3", "2": "3"}, "total": "6", "weighted_total": "9"}
