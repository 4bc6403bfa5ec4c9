"""Chern characters, B-field twists and central charges on Hirzebruch surfaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .picard import DivisorClass, Surface, intersect, is_ample
from .quadratic import QuadraticNumber, format_fraction, to_fraction


class ComplexExact:
    """re + i*im with both parts in a common real quadratic field."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", QuadraticNumber.coerce(re))
        object.__setattr__(self, "im", QuadraticNumber.coerce(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexExact is immutable")

    @classmethod
    def coerce(cls, z) -> "ComplexExact":
        if isinstance(z, ComplexExact):
            return z
        return cls(z, 0)

    def __add__(self, other):
        other = ComplexExact.coerce(other)
        return ComplexExact(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexExact(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-ComplexExact.coerce(other))

    def __rsub__(self, other):
        return ComplexExact.coerce(other) - self

    def __mul__(self, other):
        other = ComplexExact.coerce(other)
        return ComplexExact(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "ComplexExact":
        return ComplexExact(self.re, -self.im)

    def abs2(self) -> QuadraticNumber:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def in_upper_half(self) -> bool:
        """True iff the value lies in {m*exp(i*pi*phi) : m > 0, 0 < phi <= 1}."""
        s = self.im.sign()
        return s > 0 or (s == 0 and self.re.sign() < 0)

    def __eq__(self, other):
        if not isinstance(other, ComplexExact):
            try:
                other = ComplexExact.coerce(other)
            except TypeError:
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def to_mpc(self):
        return mpmath.mpc(self.re.to_mpf(), self.im.to_mpf())

    def to_json(self):
        return {"re": self.re.to_json(), "im": self.im.to_json()}

    @classmethod
    def from_json(cls, obj) -> "ComplexExact":
        return cls(QuadraticNumber.from_json(obj["re"]), QuadraticNumber.from_json(obj["im"]))

    def __repr__(self):
        return f"ComplexExact({self.re}, {self.im})"


# ---------------------------------------------------------------- phases


@dataclass(frozen=True)
class PhaseInfo:
    """Phase phi in (-1, 1] of a non-zero complex number, with arg = pi*phi.

    ``exact`` is set when phi is one of the rational values detectable by sign
    data alone (axes and diagonals); ``lo``/``hi`` always bracket phi.
    """

    quadrant: str
    in_upper_half: bool
    exact: Fraction | None
    lo: object
    hi: object
    arg_decimal: str

    def to_json(self, digits: int = 30):
        if self.exact is not None:
            bounds = [format_fraction(self.exact)] * 2
        else:
            bounds = [mpmath.nstr(self.lo, digits), mpmath.nstr(self.hi, digits)]
        return {"phi_interval": bounds, "in_upper_half": self.in_upper_half}


def phase(z: ComplexExact, dps: int = 40) -> PhaseInfo:
    z = ComplexExact.coerce(z)
    if z.is_zero():
        raise ValueError("phase of zero is undefined")
    sr, si = z.re.sign(), z.im.sign()
    quadrant = {(1, 0): "+re", (-1, 0): "-re", (0, 1): "+im", (0, -1): "-im"}.get((sr, si))
    if quadrant is None:
        quadrant = "Q" + {(1, 1): "1", (-1, 1): "2", (-1, -1): "3", (1, -1): "4"}[(sr, si)]
    exact = {"+re": Fraction(0), "-re": Fraction(1), "+im": Fraction(1, 2), "-im": Fraction(-1, 2)}.get(quadrant)
    if exact is None and abs(z.re) == abs(z.im):
        exact = {"Q1": Fraction(1, 4), "Q2": Fraction(3, 4), "Q3": Fraction(-3, 4), "Q4": Fraction(-1, 4)}[quadrant]
    with mpmath.workdps(dps + 10):
        arg = mpmath.atan2(z.im.to_mpf(), z.re.to_mpf())
        phi = arg / mpmath.pi
        err = mpmath.mpf(10) ** (-dps)
        if exact is not None:
            lo = hi = mpmath.mpf(exact.numerator) / exact.denominator
        else:
            lo, hi = phi - err, phi + err
        arg_decimal = mpmath.nstr(arg, dps)
    return PhaseInfo(quadrant, z.in_upper_half(), exact, lo, hi, arg_decimal)


# ---------------------------------------------------------------- Chern data


@dataclass(frozen=True)
class ChernCharacter:
    ch0: int
    ch1: DivisorClass
    ch2: QuadraticNumber

    def __post_init__(self):
        object.__setattr__(self, "ch2", QuadraticNumber.coerce(self.ch2))

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.ch0 + other.ch0, self.ch1 + other.ch1, self.ch2 + other.ch2)

    def __neg__(self):
        return ChernCharacter(-self.ch0, -self.ch1, -self.ch2)

    @property
    def surface(self) -> Surface:
        return self.ch1.surface

    def to_json(self):
        return {"ch0": self.ch0, "ch1": self.ch1.to_json(), "ch2": self.ch2.to_json()}


def line_bundle_ch(D: DivisorClass) -> ChernCharacter:
    """Chern character (1, D, D^2/2) of O(D)."""
    if not D.is_integral():
        raise ValueError(f"line bundles need an integral class, got {D!r}")
    return ChernCharacter(1, D, intersect(D, D) * Fraction(1, 2))


def skyscraper_ch(surface: Surface) -> ChernCharacter:
    return ChernCharacter(0, surface.zero(), QuadraticNumber(1))


def twist(ch: ChernCharacter, B: DivisorClass) -> ChernCharacter:
    """B-field twist e^{-B} ch."""
    return ChernCharacter(
        ch.ch0,
        ch.ch1 - B * ch.ch0,
        ch.ch2 - intersect(B, ch.ch1) + intersect(B, B) * Fraction(ch.ch0, 2),
    )


@dataclass(frozen=True)
class KahlerParam:
    """An ample class omega, optionally remembered as alpha*(D1 + s*D4)."""

    omega: DivisorClass
    alpha2: Fraction | None = None
    s: Fraction | None = None

    def __post_init__(self):
        if not is_ample(self.omega):
            raise ValueError(f"Kahler class must be ample, got {self.omega!r}")
        if (self.alpha2 is None) != (self.s is None):
            raise ValueError("alpha2 and s must be given together")
        if self.alpha2 is not None:
            expected = KahlerParam._expand(self.alpha2, self.s, self.omega.surface)
            if expected != self.omega:
                raise ValueError("proportional form does not match omega")

    @staticmethod
    def _expand(alpha2, s, surface: Surface) -> DivisorClass:
        alpha = QuadraticNumber.sqrt_of(alpha2)
        return (surface.D(1) + surface.D(4) * s) * alpha

    @classmethod
    def proportional(cls, alpha2, s, surface: Surface) -> "KahlerParam":
        alpha2, s = to_fraction(alpha2), to_fraction(s)
        if alpha2 <= 0 or s <= 0:
            raise ValueError("alpha2 and s must be positive")
        return cls(cls._expand(alpha2, s, surface), alpha2, s)

    @property
    def surface(self) -> Surface:
        return self.omega.surface

    @property
    def alpha(self) -> QuadraticNumber:
        if self.alpha2 is None:
            raise ValueError("Kahler class has no proportional form")
        return QuadraticNumber.sqrt_of(self.alpha2)

    def square(self) -> QuadraticNumber:
        return intersect(self.omega, self.omega)

    def to_json(self):
        out = {"omega": self.omega.to_json()}
        if self.alpha2 is not None:
            out["alpha2"] = format_fraction(self.alpha2)
            out["s"] = format_fraction(self.s)
        return out


def _maybe_twist(ch: ChernCharacter, B: DivisorClass | None) -> ChernCharacter:
    return ch if B is None else twist(ch, B)


def central_charge(ch: ChernCharacter, kahler: KahlerParam, B: DivisorClass | None = None) -> ComplexExact:
    """Z = (omega^2/2) ch0 - ch2^B + i (omega . ch1^B)."""
    chb = _maybe_twist(ch, B)
    w = kahler.omega
    re = intersect(w, w) * Fraction(chb.ch0, 2) - chb.ch2
    im = intersect(w, chb.ch1)
    return ComplexExact(re, im)


def curve_charge(ch: ChernCharacter, C: DivisorClass, kahler: KahlerParam, B: DivisorClass | None = None) -> ComplexExact:
    """Z_C = -(C . ch1^B) + i ch0 (C . omega)."""
    chb = _maybe_twist(ch, B)
    return ComplexExact(-intersect(C, chb.ch1), intersect(C, kahler.omega) * chb.ch0)


# ---------------------------------------------------------------- C-action


@dataclass(frozen=True)
class ActionParam:
    """The element a + i*b of C acting on charges by exp(-i*pi*a + pi*b).

    ``b`` is stored as ``log2_multiple`` with b = log2_multiple * log(2)/pi,
    so that exp(pi*b) = 2**log2_multiple stays exact for integer multiples.
    A float-free real ``b`` can be given through ``b_real`` instead.
    """

    a: Fraction = Fraction(0)
    log2_multiple: Fraction = Fraction(0)
    b_real: object = None

    def __post_init__(self):
        object.__setattr__(self, "a", to_fraction(self.a))
        object.__setattr__(self, "log2_multiple", to_fraction(self.log2_multiple))

    def exact_rotation(self) -> bool:
        return (2 * self.a).denominator == 1

    def exact_scale(self) -> bool:
        return self.b_real is None and self.log2_multiple.denominator == 1

    def is_exact(self) -> bool:
        return self.exact_rotation() and self.exact_scale()

    def scale(self):
        """exp(pi*b) as an exact rational when possible, else an mpf."""
        if self.b_real is not None:
            return mpmath.exp(mpmath.pi * mpmath.mpf(self.b_real))
        e = self.log2_multiple
        if e.denominator == 1:
            return Fraction(2) ** int(e)
        return mpmath.power(2, mpmath.mpf(e.numerator) / e.denominator)

    def b_value(self):
        if self.b_real is not None:
            return mpmath.mpf(self.b_real)
        return mpmath.mpf(self.log2_multiple.numerator) / self.log2_multiple.denominator * mpmath.log(2) / mpmath.pi

    def rotation(self):
        """exp(-i*pi*a), exact for half-integral a."""
        if self.exact_rotation():
            quarter = int(2 * self.a) % 4
            return [ComplexExact(1, 0), ComplexExact(0, -1), ComplexExact(-1, 0), ComplexExact(0, 1)][quarter]
        return mpmath.expj(-mpmath.pi * mpmath.mpf(self.a.numerator) / self.a.denominator)

    def factor(self):
        rot = self.rotation()
        sc = self.scale()
        if isinstance(rot, ComplexExact) and isinstance(sc, Fraction):
            return rot * sc
        rot = rot.to_mpc() if isinstance(rot, ComplexExact) else rot
        return rot * (mpmath.mpf(sc.numerator) / sc.denominator if isinstance(sc, Fraction) else sc)


def charge_act(values, act: ActionParam):
    """Multiply every charge value by exp(pi*b) * exp(-i*pi*a).

    Exact values are returned when the action is exact; otherwise mpc values.
    """
    f = act.factor()
    out = []
    for z in values:
        if isinstance(f, ComplexExact) and isinstance(z, ComplexExact):
            out.append(z * f)
        else:
            zz = z.to_mpc() if isinstance(z, ComplexExact) else mpmath.mpc(z)
            out.append(zz * f)
    return out
