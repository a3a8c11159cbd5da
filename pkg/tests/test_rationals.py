from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclodet.rationals import format_rational, parse_rational, rat_pow, rational


def test_canonical_reduction():
    assert rational(2, 4) == Fraction(1, 2)
    assert rational(2, 4).numerator == 1 and rational(2, 4).denominator == 2


def test_sign_normalization():
    q = rational(3, -6)
    assert q == Fraction(-1, 2)
    assert q.denominator == 2 and q.numerator == -1


def test_zero_canonicalization():
    q = rational(0, 7)
    assert q.numerator == 0 and q.denominator == 1


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)


def test_pow_identity_exponent():
    assert rat_pow(3, 1) == 3


def test_pow_reciprocal():
    assert rat_pow(2, -1) == Fraction(1, 2)


def test_pow_zero_negative_rejected():
    with pytest.raises(ZeroDivisionError):
        rat_pow(0, -2)


def test_pow_n_to_n_minus_2():
    # the n^(n-2) determinant target at n=3 is just 3
    n = 3
    assert rat_pow(n, n - 2) == 3


def test_parse_and_format():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-5") == -5
    assert parse_rational(" 6/-4 ") == Fraction(-3, 2)
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(8, 4)) == "2"
    with pytest.raises(ValueError):
        parse_rational("1.5")
    with pytest.raises(ValueError):
        parse_rational("x")


@given(st.fractions(), st.fractions(), st.fractions())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1


@given(st.integers(), st.integers(min_value=1), st.integers(min_value=1))
def test_round_trip_scaling(p, q, k):
    assert rational(p * k, q * k) == rational(p, q)


@given(st.fractions())
def test_canonical_idempotence(a):
    again = rational(a.numerator, a.denominator)
    assert again.numerator == a.numerator and again.denominator == a.denominator
