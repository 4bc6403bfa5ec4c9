"""Exact arithmetic in a real quadratic field Q(sqrt d).

A :class:`QuadraticNumber` is ``a + b*sqrt(d)`` with rational ``a, b`` and a
square-free ``d >= 1``.  Rationals carry ``d = 1`` and combine with any field;
two values with different irrational radicals cannot be mixed.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Union

import mpmath

RationalLike = Union[int, Fraction, str]


class RadicalMismatch(ValueError):
    """Raised when two values from different quadratic fields are combined."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, QuadraticNumber) and x.is_rational():
        return x.a
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_fraction(q: Fraction) -> str:
    """Render a rational as "p/q" in lowest terms (denominator always shown)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


_TRIAL_LIMIT = 10**8


@functools.lru_cache(maxsize=4096)
def _squarefree_by_factoring(m: int) -> tuple[int, int]:
    from sympy import factorint

    s, f = 1, 1
    for p, e in factorint(m).items():
        p, e = int(p), int(e)
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    return s, f


def squarefree_decompose(m: int) -> tuple[int, int]:
    """Write a positive integer m as s*s*f with f square-free; return (s, f)."""
    if m <= 0:
        raise ValueError("expected a positive integer")
    if m > _TRIAL_LIMIT:
        return _squarefree_by_factoring(m)
    s, f = 1, 1
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 1 if p == 2 else 2
    return s, f * m


_ZERO = Fraction(0)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


class QuadraticNumber:
    """The exact real number ``a + b*sqrt(d)``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, d: int = 1):
        a = to_fraction(a)
        b = to_fraction(b)
        d = int(d)
        if d < 1:
            raise ValueError("radicand must be a positive integer")
        if d > 1:
            s, f = squarefree_decompose(d)
            b *= s
            d = f
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticNumber is immutable")

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "QuadraticNumber":
        """Trusted constructor for already normalized parts (d square-free)."""
        out = object.__new__(cls)
        if not b:
            d = 1
        object.__setattr__(out, "a", a)
        object.__setattr__(out, "b", b)
        object.__setattr__(out, "d", d)
        return out

    # construction helpers
    @classmethod
    def coerce(cls, x) -> "QuadraticNumber":
        if isinstance(x, QuadraticNumber):
            return x
        return cls._raw(to_fraction(x), _ZERO, 1)

    @classmethod
    def sqrt_of(cls, q: RationalLike) -> "QuadraticNumber":
        """Exact square root of a non-negative rational."""
        q = to_fraction(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        if q == 0:
            return cls(0)
        m = q.numerator * q.denominator
        s, f = squarefree_decompose(m)
        return cls(0, Fraction(s, q.denominator), f)

    def is_rational(self) -> bool:
        return self.b == 0

    # arithmetic
    def _common(self, other: "QuadraticNumber") -> int:
        if self.d == 1:
            return other.d
        if other.d == 1 or other.d == self.d:
            return self.d
        raise RadicalMismatch(f"cannot combine sqrt({self.d}) with sqrt({other.d})")

    def __add__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._common(other)
        return QuadraticNumber._raw(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.b:
            return QuadraticNumber._raw(self.a * other.a, self.b * other.a, self.d)
        if not self.b:
            return QuadraticNumber._raw(self.a * other.a, self.a * other.b, other.d)
        d = self._common(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return QuadraticNumber._raw(a, b, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber._raw(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - d b^2."""
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadraticNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return QuadraticNumber._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadraticNumber.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out = QuadraticNumber(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # order
    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d b^2 (never equal, sqrt d is irrational)
        return sa if self.a * self.a > self.d * self.b * self.b else sb

    def __eq__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        return (self - QuadraticNumber.coerce(other)).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        """Exact floor using integer square roots, then exact adjustment."""
        guess = math.floor(self.a)
        if self.b != 0:
            t = self.b * self.b * self.d
            root = math.isqrt(t.numerator // t.denominator)
            guess += root if self.b > 0 else -root - 1
        while (self - guess).sign() < 0:
            guess -= 1
        while (self - (guess + 1)).sign() >= 0:
            guess += 1
        return guess

    def __floor__(self):
        return self.floor()

    def ceil(self) -> int:
        return -((-self).floor())

    # conversions
    def to_mpf(self, dps: int | None = None):
        if dps is None:
            return mpmath.mpf(self.a.numerator) / self.a.denominator + (
                mpmath.mpf(self.b.numerator) / self.b.denominator * mpmath.sqrt(self.d)
            )
        with mpmath.workdps(dps):
            return +self.to_mpf()

    def __float__(self):
        return float(self.to_mpf(30))

    def to_json(self):
        if self.b == 0:
            return format_fraction(self.a)
        return {"rat": format_fraction(self.a), "coef": format_fraction(self.b), "d": self.d}

    @classmethod
    def from_json(cls, obj) -> "QuadraticNumber":
        if isinstance(obj, dict):
            try:
                return cls(Fraction(str(obj.get("rat", "0"))), Fraction(str(obj["coef"])), int(obj["d"]))
            except KeyError as exc:
                raise ValueError(f"quadratic number is missing field {exc.args[0]!r}") from None
        return cls(to_fraction(str(obj) if not isinstance(obj, int) else obj))

    def __repr__(self):
        if self.b == 0:
            return f"Q({self.a})"
        return f"Q({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"


QN = QuadraticNumber
