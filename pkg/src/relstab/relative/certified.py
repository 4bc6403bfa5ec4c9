"""Exact or certified comparisons of real quantities built from square roots.

Masses are sums of |Z| values, i.e. sums of square roots of (usually
rational) numbers.  Equality of such sums is decided exactly by grouping the
square roots by squarefree part; strict signs are then decided numerically
with increasing precision, which always terminates once the exact value is
known to be non-zero.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

import mpmath

from ..quadratic import QuadraticNumber, RadicalMismatch, squarefree_decompose

PRECISIONS = (30, 60, 120, 250, 500, 1000, 2000)


class UndecidedComparison(ArithmeticError):
    pass


def _sqrt_parts(q: Fraction) -> tuple[Fraction, int]:
    """sqrt(q) = c * sqrt(s) with c rational and s squarefree."""
    if q < 0:
        raise ValueError("square root of a negative number")
    if q == 0:
        return Fraction(0), 1
    num = q.numerator * q.denominator
    f, s = squarefree_decompose(num)
    return Fraction(f, q.denominator), s


def sqrt_sum_sign(plus, minus=()) -> int:
    """Sign of sum(sqrt(x) for x in plus) - sum(sqrt(y) for y in minus).

    Entries are QuadraticNumber or rationals; they must be non-negative.
    """
    plus = [QuadraticNumber.coerce(x) for x in plus]
    minus = [QuadraticNumber.coerce(x) for x in minus]
    if all(x.is_rational() for x in plus + minus):
        coeffs = defaultdict(Fraction)
        for x, sgn in [(p, 1) for p in plus] + [(m, -1) for m in minus]:
            c, s = _sqrt_parts(x.a)
            coeffs[s] += sgn * c
        coeffs = {s: c for s, c in coeffs.items() if c}
        if not coeffs:
            return 0
        return _numeric_sign(lambda: sum((mpmath.mpf(c.numerator) / c.denominator) * mpmath.sqrt(s)
                                         for s, c in coeffs.items()), exact_nonzero=True)
    return _numeric_sign(lambda: sum(mpmath.sqrt(x.to_mpf()) for x in plus)
                         - sum(mpmath.sqrt(x.to_mpf()) for x in minus), exact_nonzero=False)


def _numeric_sign(fn, exact_nonzero: bool) -> int:
    for dps in PRECISIONS:
        with mpmath.workdps(dps):
            v = fn()
            tol = mpmath.mpf(10) ** (-(dps - 10))
            if v > tol:
                return 1
            if v < -tol:
                return -1
    if exact_nonzero:
        raise UndecidedComparison("non-zero quantity below the largest working precision")
    raise UndecidedComparison("could not separate the quantities from zero")


def real_sign(x) -> int:
    """Sign of a QuadraticNumber, rational or mpf-producing callable."""
    if callable(x):
        return _numeric_sign(x, exact_nonzero=False)
    return QuadraticNumber.coerce(x).sign()


def cross_sign(z1, z2) -> int:
    """Sign of Im(z1 * conj(z2)), i.e. the orientation of z2 -> z1."""
    try:
        return (z2.re * z1.im - z2.im * z1.re).sign()
    except RadicalMismatch:
        return _numeric_sign(lambda: z2.re.to_mpf() * z1.im.to_mpf() - z2.im.to_mpf() * z1.re.to_mpf(),
                             exact_nonzero=False)


def certified_le(fn) -> bool:
    """Decide fn() <= 0 for an mpf-valued callable, refining precision.

    Values indistinguishable from zero at the largest precision count as
    equal, so the answer is True in that case.
    """
    for dps in PRECISIONS:
        with mpmath.workdps(dps):
            v = fn()
            tol = mpmath.mpf(10) ** (-(dps - 10))
            if v < -tol:
                return True
            if v > tol:
                return False
    return True
