from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import pytest

from oracles import hn_oracle, standard_hn_oracle
from relstab.charge import ActionParam, ComplexExact
from relstab.quiver.category import DGObject, IndecObject, projective, simple
from relstab.quiver.hearts import Heart, standard_heart
from relstab.relative.certified import cross_sign
from relstab.relative.conditions import (
    Mass,
    Phase,
    StabCondition,
    act_C,
    heart_pieces,
    hn_filtration,
    shifted,
    support_check,
)
from samplers import random_charge, random_condition, window_objects


def a2(z1, z2):
    return StabCondition(standard_heart(2), [ComplexExact.coerce(z1), ComplexExact.coerce(z2)])


def test_hn_example_destabilized():
    s = a2(ComplexExact(0, 1), ComplexExact(-1, 1))
    r = hn_filtration(projective(1, 2), s)
    assert [F for F, _ in r.factors] == [DGObject.of(simple(2)), DGObject.of(simple(1))]
    assert [p.exact() for _, p in r.factors] == [Fraction(3, 4), Fraction(1, 2)]
    assert r.phi_plus > Phase(0, s.charge_of(projective(1, 2))) > r.phi_minus


def test_hn_example_semistable():
    s = a2(ComplexExact(-1, 1), ComplexExact(0, 1))
    r = hn_filtration(projective(1, 2), s)
    assert r.is_semistable() and r.factors[0][0] == DGObject.of(projective(1, 2))


def test_semistable_simples_have_one_factor():
    rng = random.Random(1)
    for _ in range(20):
        s = random_condition(3, rng)
        for S in s.heart.simples:
            assert s.is_semistable(S)


def test_standard_heart_matches_subrepresentation_oracle():
    rng = random.Random(2)
    for _ in range(30):
        Z = [random_charge(rng) for _ in range(3)]
        s = StabCondition(standard_heart(3), Z)
        for a in range(1, 4):
            for b in range(a, 4):
                got = [p.z for _, p in s.hn(IndecObject(a, b)).factors]
                assert got == standard_hn_oracle(a, b, Z)


@pytest.mark.parametrize("n", [2, 3])
def test_hn_matches_exhaustive_oracle(n):
    rng = random.Random(10 + n)
    for _ in range(5):
        s = random_condition(n, rng)
        for X in window_objects(n):
            assert [(p.k, p.z) for _, p in s.hn(X).factors] == hn_oracle(X, s)


def test_hn_invariants():
    rng = random.Random(3)
    for _ in range(10):
        s = random_condition(3, rng)
        for X in window_objects(3, -1, 1):
            r = s.hn(X)
            phases = [p for _, p in r.factors]
            assert all(p > q for p, q in zip(phases, phases[1:]))
            tot = [0, 0, 0]
            for F, _ in r.factors:
                tot = [x + y for x, y in zip(tot, F.cls(3))]
            assert tuple(tot) == X.cls(3)
            c = r.mass.compare_modulus(s.charge_of(X))
            assert c >= 0 and (c == 0) == r.is_semistable()


def test_heart_pieces_reassemble_class():
    rng = random.Random(4)
    s = random_condition(3, rng)
    for X in window_objects(3):
        pieces = heart_pieces(X, s.heart)
        tot = [0, 0, 0]
        for k, objs in pieces.items():
            for E in objs:
                assert s.heart.contains(E)
                tot = [x + y for x, y in zip(tot, E.shift(k).cls(3))]
        assert tuple(tot) == X.cls(3)


def test_support_examples():
    from relstab.quiver.hearts import Heart

    A1 = StabCondition(standard_heart(1), [ComplexExact(0, 1)])
    res = support_check(A1)
    assert res.holds and res.constant_squared == 1
    s = a2(ComplexExact(0, 1), ComplexExact(-1, 1))
    t = a2(ComplexExact(0, 2), ComplexExact(-2, 2))
    assert support_check(t).constant_squared * 4 == support_check(s).constant_squared
    rng = random.Random(5)
    for _ in range(20):
        assert support_check(random_condition(3, rng)).holds
    with pytest.raises(ValueError):
        StabCondition(Heart(1, (simple(1),)), [ComplexExact(1, 0)])


def test_action_group_law():
    rng = random.Random(6)
    for _ in range(10):
        s = random_condition(2, rng)
        once = act_C(act_C(s, ActionParam(1)), ActionParam(1))
        assert once == act_C(s, ActionParam(2))
        assert act_C(s, ActionParam(1)).charges == tuple(z for z in s.charges)
        assert act_C(s, ActionParam(1)).heart == s.heart.shift(1)
        assert shifted(s, 1) == act_C(s, ActionParam(1))


def test_action_shifts_phases_down_and_keeps_factors():
    rng = random.Random(7)
    for _ in range(10):
        s = random_condition(2, rng)
        for act in (ActionParam(1), ActionParam(2, 1), ActionParam(Fraction(1, 2))):
            t = act_C(s, act)
            for X in window_objects(2, -1, 1):
                r, q = s.hn(X), t.hn(X)
                assert [F for F, _ in r.factors] == [F for F, _ in q.factors]
                scale = 2 ** int(act.log2_multiple)
                assert q.mass.compare(r.mass.scaled(scale)) == 0
                for (_, p), (_, p2) in zip(r.factors, q.factors):
                    if act.a.denominator == 1:
                        assert p2.k == p.k - int(act.a) and cross_sign(p2.z, p.z) == 0
                    diff = p.value() - p2.value() - mpmath.mpf(act.a.numerator) / act.a.denominator
                    assert abs(diff) < mpmath.mpf(10) ** -12


def test_mass_comparisons_are_exact():
    m = Mass((1, 1))
    assert m.compare(Mass((4,))) == 0
    assert m.compare(Mass((3,))) == 1
    assert m.compare_modulus(ComplexExact(2, 0)) == 0


def _same_direction(zs):
    z0 = zs[0]
    return all(cross_sign(z, z0) == 0 and (z.re * z0.re + z.im * z0.im).sign() > 0 for z in zs)


def test_mass_equals_modulus_iff_factor_charges_align():
    rng = random.Random(8)
    for _ in range(30):
        s = random_condition(3, rng)
        for X in window_objects(3):
            r = s.hn(X)
            zs = [p.z * (-1 if p.k % 2 else 1) for _, p in r.factors]
            c = r.mass.compare_modulus(s.charge_of(X))
            assert (c == 0) == _same_direction(zs)
    # factors whose phases differ by an even integer have aligned charges
    s = StabCondition(Heart(3, (IndecObject(1, 2, 1), IndecObject(2, 2, 2), IndecObject(3, 3))),
                      [ComplexExact(4, 2), ComplexExact(2, 1), ComplexExact(4, 2)])
    r = s.hn(IndecObject(2, 3))
    assert len(r.factors) == 2 and r.mass.compare_modulus(s.charge_of(IndecObject(2, 3))) == 0
