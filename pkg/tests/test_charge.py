from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import pytest

from relstab.charge import (
    ActionParam,
    ChernCharacter,
    ComplexExact,
    KahlerParam,
    central_charge,
    charge_act,
    curve_charge,
    line_bundle_ch,
    phase,
    skyscraper_ch,
    twist,
)
from relstab.picard import DivisorClass, Surface, intersect
from relstab.quadratic import QuadraticNumber as QN


def witness_kahler():
    return KahlerParam.proportional(Fraction(1, 3), 1, Surface(1))


def random_class(rng, X):
    return DivisorClass(rng.randint(-6, 6), rng.randint(-6, 6), X)


def random_kahler(rng, X):
    return KahlerParam.proportional(Fraction(rng.randint(1, 20), rng.randint(1, 7)), Fraction(rng.randint(1, 9), rng.randint(1, 4)), X)


def test_line_bundle_characters():
    X1, X2 = Surface(1), Surface(2)
    assert line_bundle_ch(X1.D(4) * 2) == ChernCharacter(1, DivisorClass(2, 2, X1), Fraction(2))
    assert line_bundle_ch(X1.zero()) == ChernCharacter(1, X1.zero(), Fraction(0))
    assert line_bundle_ch(X2.D(2)).ch2 == -1
    with pytest.raises(ValueError):
        line_bundle_ch(DivisorClass(Fraction(1, 2), 0, X1))


def test_twist_identity_cancellation_and_group_law():
    rng = random.Random(5)
    for _ in range(200):
        X = Surface(rng.randint(0, 4))
        D = random_class(rng, X)
        B, B2 = random_class(rng, X), random_class(rng, X)
        ch = line_bundle_ch(D)
        assert twist(ch, X.zero()) == ch
        assert twist(ch, D) == ChernCharacter(1, X.zero(), Fraction(0))
        assert twist(twist(ch, B), B2) == twist(ch, B + B2)


def test_central_charge_examples():
    X = Surface(1)
    k = witness_kahler()
    assert central_charge(skyscraper_ch(X), k) == ComplexExact(-1, 0)
    assert central_charge(ChernCharacter(0, X.zero(), Fraction(0)), k).is_zero()
    w = KahlerParam(X.D(1) + X.D(4))
    assert w.square() == 3
    assert central_charge(line_bundle_ch(X.zero()), w) == ComplexExact(Fraction(3, 2), 0)


def test_curve_charge_examples():
    X = Surface(1)
    k = witness_kahler()
    L = line_bundle_ch(X.D(4) * 2)
    assert curve_charge(L, X.D(2), k) == ComplexExact(0, QN.sqrt_of(Fraction(1, 3)))
    assert curve_charge(ChernCharacter(0, X.zero(), Fraction(0)), X.D(1), k).is_zero()
    L2 = line_bundle_ch(X.D(2))
    assert curve_charge(L2, X.D(1), k) == ComplexExact(-1, intersect(X.D(1), k.omega))


def test_phase_examples():
    assert phase(ComplexExact(-1, 0)).exact == 1
    assert phase(ComplexExact(0, 1)).exact == Fraction(1, 2)
    assert phase(ComplexExact(1, 1)).exact == Fraction(1, 4)
    p = phase(ComplexExact(1, 2))
    assert p.exact is None
    with mpmath.workdps(60):
        assert p.lo < mpmath.atan(2) / mpmath.pi < p.hi
    with pytest.raises(ValueError):
        phase(ComplexExact(0, 0))


def test_phase_in_upper_half_iff_interval():
    rng = random.Random(2)
    for _ in range(300):
        z = ComplexExact(rng.randint(-5, 5), rng.randint(-5, 5))
        if z.is_zero():
            continue
        p = phase(z)
        mid = p.exact if p.exact is not None else (p.lo + p.hi) / 2
        assert p.in_upper_half == (0 < mid <= 1)


def test_charge_act_examples():
    vals = [ComplexExact(1, 2), ComplexExact(-3, Fraction(1, 2))]
    assert charge_act(vals, ActionParam(1)) == [-z for z in vals]
    assert charge_act(vals, ActionParam(0)) == vals
    assert charge_act(vals, ActionParam(2)) == vals
    assert charge_act(vals, ActionParam(0, 1)) == [z * 2 for z in vals]
    half = charge_act(vals, ActionParam(Fraction(1, 2)))
    assert half == [z * ComplexExact(0, -1) for z in vals]


def test_charge_act_group_law_and_certified_mode():
    vals = [ComplexExact(1, 2)]
    once = charge_act(charge_act(vals, ActionParam(1)), ActionParam(1))
    assert once == charge_act(vals, ActionParam(2))
    out = charge_act(vals, ActionParam(Fraction(1, 3), b_real=mpmath.mpf("0.25")))[0]
    expect = mpmath.mpc(1, 2) * mpmath.exp(-1j * mpmath.pi / 3 + mpmath.pi * mpmath.mpf("0.25"))
    assert abs(out - expect) < mpmath.mpf(10) ** -12


def test_charge_is_additive_and_twist_compatible():
    rng = random.Random(8)
    for _ in range(200):
        X = Surface(rng.randint(0, 4))
        k = random_kahler(rng, X)
        c1, c2 = line_bundle_ch(random_class(rng, X)), line_bundle_ch(random_class(rng, X))
        B = random_class(rng, X)
        assert central_charge(c1 + c2, k) == central_charge(c1, k) + central_charge(c2, k)
        assert central_charge(c1, k, B) == central_charge(twist(c1, B), k)
        assert twist(c1, B).ch0 == c1.ch0
        assert phase(central_charge(skyscraper_ch(X), k, B)).exact == 1


def test_kahler_param_validation():
    X = Surface(1)
    with pytest.raises(ValueError):
        KahlerParam(X.D(2))
    with pytest.raises(ValueError):
        KahlerParam.proportional(0, 1, X)
    k = witness_kahler()
    assert k.omega == (X.D(1) + X.D(4)) * QN.sqrt_of(Fraction(1, 3))
