from fractions import Fraction
from itertools import combinations
import math

import pytest
from hypothesis import given, strategies as st

from knesertw.combinatorics import (
    KSubset,
    RationalInterval,
    binom,
    colex_rank,
    colex_unrank,
    exp_enclosure,
    falling,
    fmt_exact,
    iter_ksubsets,
    ln_enclosure,
)


def test_binom_small_cases():
    assert binom(5, 2) == 10
    for n in range(0, 30):
        assert binom(n, 0) == 1


@pytest.mark.parametrize("a,b", [(5, -1), (5, 6), (-1, 0), (-3, -2), (0, 1)])
def test_binom_zero_outside_triangle(a, b):
    assert binom(a, b) == 0


def test_binom_eqns3_sides_at_36_3_2():
    left = Fraction(binom(34, 1), 3)
    right = binom(1, 0) * binom(2, 1) * binom(2, 1) * binom(33, 0)
    assert left == Fraction(34, 3)
    assert right == 4


def test_pascal_and_symmetry_exhaustive():
    for a in range(1, 61):
        for b in range(1, a):
            assert binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b)
    for a in range(61):
        for b in range(a + 1):
            assert binom(a, b) == binom(a, a - b)


def test_falling_factorial():
    assert falling(5, 0) == 1
    assert falling(5, 3) == 60
    assert falling(7, 7) == math.factorial(7)


def test_colex_examples():
    assert colex_rank(KSubset((1, 2, 3), 6)) == 0
    assert colex_rank(KSubset((4, 5, 6), 6)) == 19
    assert colex_unrank(0, 3, 6).elements == (1, 2, 3)
    assert colex_unrank(19, 3, 6).elements == (4, 5, 6)


def test_colex_round_trip_3_subsets_of_7():
    for s in combinations(range(1, 8), 3):
        ks = KSubset(s, 7)
        assert colex_unrank(colex_rank(ks), 3, 7) == ks
    decoded = {colex_unrank(r, 3, 7).elements for r in range(binom(7, 3))}
    assert len(decoded) == 35


def test_colex_bijective_all_small():
    for n in range(1, 13):
        for k in range(1, n + 1):
            ranks = [colex_rank(s, n) for s in combinations(range(1, n + 1), k)]
            assert sorted(ranks) == list(range(binom(n, k)))
            for r in range(binom(n, k)):
                assert colex_rank(colex_unrank(r, k, n)) == r


def test_iter_ksubsets_is_colex_order():
    for n, k in [(6, 3), (7, 2), (5, 5), (4, 1)]:
        assert [colex_rank(s, n) for s in iter_ksubsets(n, k)] == list(range(binom(n, k)))


@pytest.mark.parametrize(
    "elements,n", [((), 3), ((2, 1), 3), ((1, 1), 3), ((0, 2), 3), ((1, 4), 3)]
)
def test_ksubset_rejects_invalid(elements, n):
    with pytest.raises(ValueError):
        KSubset(elements, n)


def test_unrank_out_of_range():
    with pytest.raises(ValueError):
        colex_unrank(20, 3, 6)
    with pytest.raises(ValueError):
        colex_unrank(-1, 3, 6)


@given(
    st.integers(-10**6, 10**6), st.integers(1, 10**6),
    st.integers(-10**6, 10**6), st.integers(1, 10**6),
)
def test_rational_sum_identity(p, q, r, s):
    assert (Fraction(p, q) + Fraction(r, s)) * q * s == p * s + r * q


def test_ln_enclosure_24():
    enc = ln_enclosure(24, Fraction(1, 10**6))
    assert enc.width <= Fraction(1, 10**6)
    # ln 24 = 3.17805383...
    assert enc.lo <= Fraction(31780539, 10**7)
    assert enc.hi >= Fraction(31780538, 10**7)


def test_ln_enclosure_2():
    enc = ln_enclosure(2, Fraction(1, 1000))
    assert enc.width <= Fraction(1, 1000)
    # ln 2 = 0.693147...
    assert enc.lo <= Fraction(693148, 10**6)
    assert enc.hi >= Fraction(693147, 10**6)


def test_ln_enclosure_ordering():
    assert ln_enclosure(17).hi < ln_enclosure(23).lo + Fraction(31, 100)
    assert ln_enclosure(17).hi < ln_enclosure(18).lo


@given(st.integers(2, 400), st.integers(3, 12))
def test_ln_enclosure_certified_by_exp(t, digits):
    enc = ln_enclosure(t, Fraction(1, 10**digits))
    assert enc.width <= Fraction(1, 10**digits)
    # exp(lo) <= t <= exp(hi), each side via an independent Taylor enclosure
    assert exp_enclosure(enc.lo, Fraction(1, 10**20)).hi <= t
    assert exp_enclosure(enc.hi, Fraction(1, 10**20)).lo >= t


@given(st.fractions(min_value=-5, max_value=5, max_denominator=1000))
def test_exp_enclosure_contains_float(r):
    enc = exp_enclosure(r)
    assert enc.lo <= Fraction(math.exp(r)) * (1 + Fraction(1, 10**9))
    assert enc.hi >= Fraction(math.exp(r)) * (1 - Fraction(1, 10**9))


def test_interval_arithmetic():
    a = RationalInterval(Fraction(1), Fraction(2))
    assert (a + a).lo == 2 and (a + a).hi == 4
    assert a.square() == RationalInterval(1, 4)
    assert RationalInterval(-1, 2).square() == RationalInterval(0, 4)
    with pytest.raises(ValueError):
        RationalInterval(2, 1)


def test_fmt_exact():
    assert fmt_exact(12) == "12"
    assert fmt_exact(Fraction(34, 3)) == "34/3"
    assert fmt_exact(Fraction(6, 2)) == "3"
    with pytest.raises(TypeError):
        fmt_exact(True)
