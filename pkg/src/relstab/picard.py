"""Divisor classes on Hirzebruch surfaces H_r.

Classes are stored in the (D1, D2) basis, where D1 is a fibre and D2 the
section with D2^2 = -r.  The remaining torus-invariant divisors satisfy
D3 = D1 and D4 = r*D1 + D2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quadratic import QuadraticNumber, format_fraction, to_fraction


class SurfaceMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Surface:
    r: int

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 0:
            raise ValueError(f"Hirzebruch index must be a non-negative integer, got {self.r!r}")

    # the four torus-invariant prime divisors
    def D(self, i: int) -> "DivisorClass":
        coords = {1: (1, 0), 2: (0, 1), 3: (1, 0), 4: (self.r, 1)}
        if i not in coords:
            raise ValueError("torus-invariant divisors are D1..D4")
        return DivisorClass(*coords[i], surface=self)

    def zero(self) -> "DivisorClass":
        return DivisorClass(0, 0, surface=self)


def _qn(x) -> QuadraticNumber:
    return QuadraticNumber.coerce(x)


class DivisorClass:
    """a*D1 + b*D2 with coefficients in a real quadratic field."""

    __slots__ = ("a", "b", "surface")

    def __init__(self, a, b, surface: Surface):
        object.__setattr__(self, "a", _qn(a))
        object.__setattr__(self, "b", _qn(b))
        object.__setattr__(self, "surface", surface)

    def __setattr__(self, name, value):
        raise AttributeError("DivisorClass is immutable")

    def _check(self, other: "DivisorClass"):
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected a DivisorClass, got {type(other).__name__}")
        if other.surface != self.surface:
            raise SurfaceMismatch(f"classes live on H_{self.surface.r} and H_{other.surface.r}")

    def __add__(self, other):
        self._check(other)
        return DivisorClass(self.a + other.a, self.b + other.b, self.surface)

    def __sub__(self, other):
        self._check(other)
        return DivisorClass(self.a - other.a, self.b - other.b, self.surface)

    def __neg__(self):
        return DivisorClass(-self.a, -self.b, self.surface)

    def __mul__(self, scalar):
        if isinstance(scalar, DivisorClass):
            return NotImplemented
        c = _qn(scalar)
        return DivisorClass(self.a * c, self.b * c, self.surface)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.surface == other.surface and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, self.surface))

    def __repr__(self):
        return f"DivisorClass({self.a}, {self.b}; r={self.surface.r})"

    def is_integral(self) -> bool:
        return all(c.is_rational() and c.a.denominator == 1 for c in (self.a, self.b))

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def ample_coords(self) -> tuple[QuadraticNumber, QuadraticNumber]:
        """Coordinates (alpha, beta) with x = alpha*D1 + beta*D4."""
        return self.a - self.surface.r * self.b, self.b

    def to_json(self):
        return {"a": self.a.to_json(), "b": self.b.to_json(), "r": self.surface.r}

    @classmethod
    def from_json(cls, obj) -> "DivisorClass":
        return cls(QuadraticNumber.from_json(obj["a"]), QuadraticNumber.from_json(obj["b"]), Surface(int(obj["r"])))


def from_torus_invariant(c1, c2, c3, c4, surface: Surface) -> DivisorClass:
    """Normal form of c1*D1 + c2*D2 + c3*D3 + c4*D4."""
    c1, c2, c3, c4 = (_qn(c) for c in (c1, c2, c3, c4))
    return DivisorClass(c1 + c3 + surface.r * c4, c2 + c4, surface)


def intersect(x: DivisorClass, y: DivisorClass) -> QuadraticNumber:
    """Intersection pairing with D1^2 = 0, D1.D2 = 1, D2^2 = -r."""
    x._check(y)
    return x.a * y.b + x.b * y.a - x.surface.r * (x.b * y.b)


def is_ample(x: DivisorClass) -> bool:
    alpha, beta = x.ample_coords()
    return alpha.sign() > 0 and beta.sign() > 0


def is_effective(x: DivisorClass) -> bool:
    return x.a.sign() >= 0 and x.b.sign() >= 0


def negative_curves(surface: Surface) -> list[DivisorClass]:
    """Irreducible curves of negative self-intersection: D2 when r >= 1."""
    if surface.r >= 1:
        return [surface.D(2)]
    return []


def parse_class(text: str, surface: Surface) -> DivisorClass:
    """Parse "a,b" (rationals) as a*D1 + b*D2."""
    parts = [p for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected 'a,b', got {text!r}")
    return DivisorClass(to_fraction(parts[0]), to_fraction(parts[1]), surface)


__all__ = [
    "Surface",
    "DivisorClass",
    "SurfaceMismatch",
    "from_torus_invariant",
    "intersect",
    "is_ample",
    "is_effective",
    "negative_curves",
    "parse_class",
    "format_fraction",
]
