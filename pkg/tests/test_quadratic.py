from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relstab.quadratic import QuadraticNumber as QN
from relstab.quadratic import RadicalMismatch, format_fraction, squarefree_decompose

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
radicands = st.sampled_from([2, 3, 5, 6, 7])


def elements(d):
    return st.builds(lambda a, b: QN(a, b, d), rationals, rationals)


def test_normal_form_pulls_squares_out():
    x = QN(0, 1, 12)
    assert (x.b, x.d) == (2, 3)
    assert QN(1, 1, 4) == QN(3)
    assert QN.sqrt_of(Fraction(1, 3)) == QN(0, Fraction(1, 3), 3)


def test_squarefree_decompose():
    for m in [1, 2, 12, 72, 98, 2 * 3 * 5 * 7 * 49]:
        s, f = squarefree_decompose(m)
        assert s * s * f == m
        assert all(f % (p * p) for p in range(2, 20))
    big = (10**9 + 7) ** 2 * 6
    assert squarefree_decompose(big) == (10**9 + 7, 6)


def test_mixing_radicals_is_an_error():
    with pytest.raises(RadicalMismatch):
        QN(0, 1, 2) + QN(0, 1, 3)
    # rationals mix with anything
    assert QN(0, 1, 2) + 1 == QN(1, 1, 2)


def test_format_fraction_lowest_terms():
    assert format_fraction(Fraction(4, 6)) == "2/3"
    assert format_fraction(Fraction(5)) == "5/1"
    assert QN(Fraction(1, 2), 1, 3).to_json() == {"rat": "1/2", "coef": "1/1", "d": 3}


def test_json_round_trip():
    for x in [QN(0), QN(Fraction(-7, 3)), QN(1, Fraction(2, 5), 7)]:
        assert QN.from_json(x.to_json()) == x


@given(radicands.flatmap(lambda d: st.tuples(elements(d), elements(d), elements(d))))
@settings(max_examples=200, deadline=None)
def test_field_laws(xyz):
    x, y, z = xyz
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    if x:
        assert x * x.inverse() == 1
        assert (x / x) == 1


@given(radicands.flatmap(elements))
@settings(max_examples=300, deadline=None)
def test_sign_and_floor_agree_with_high_precision(x):
    with mpmath.workdps(60):
        v = x.to_mpf()
        assert x.sign() == (v > 0) - (v < 0)
        assert x.floor() == int(mpmath.floor(v))
    assert x.floor() <= x < x.floor() + 1


def test_floor_near_integers():
    # sqrt(n^2 + 1) sits just above n
    for n in [1, 10, 1000, 10**6]:
        x = QN.sqrt_of(n * n + 1)
        assert x.floor() == n
        assert (-x).floor() == -n - 1
        assert math.floor(QN.sqrt_of(n * n)) == n
