"""Combinatorial model of D^b(A_n) for the linear orientation 1 -> 2 -> ... -> n.

Indecomposable objects are shifted interval modules M[a,b][t], where M[a,b] is
supported on vertices a..b.  Projectives are P_a = M[a,n], simples S_i = M[i,i].
The path algebra is hereditary, so every Hom space between indecomposables is
a Hom or an Ext^1 between modules, each of dimension at most one:

    Hom(M[a,b], M[c,d]) != 0   iff  c <= a <= d <= b
    Ext1(M[a,b], M[c,d]) != 0  iff  a < c <= b + 1 <= d
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True, order=True)
class IndecObject:
    a: int
    b: int
    t: int = 0

    def __post_init__(self):
        if not (1 <= self.a <= self.b):
            raise ValueError(f"invalid interval [{self.a},{self.b}]")

    def shift(self, k: int = 1) -> "IndecObject":
        return IndecObject(self.a, self.b, self.t + k)

    @property
    def module(self) -> tuple[int, int]:
        return self.a, self.b

    def dimvec(self, n: int) -> tuple[int, ...]:
        if self.b > n:
            raise ValueError(f"{self} does not live on A_{n}")
        return tuple(1 if self.a <= i <= self.b else 0 for i in range(1, n + 1))

    def cls(self, n: int) -> tuple[int, ...]:
        sign = -1 if self.t % 2 else 1
        return tuple(sign * x for x in self.dimvec(n))

    def to_json(self):
        return [self.a, self.b, self.t]

    def __repr__(self):
        return f"M[{self.a},{self.b}]" + (f"[{self.t}]" if self.t else "")


def simple(i: int, t: int = 0) -> IndecObject:
    return IndecObject(i, i, t)


def projective(a: int, n: int, t: int = 0) -> IndecObject:
    return IndecObject(a, n, t)


def modules(n: int) -> list[tuple[int, int]]:
    """All intervals (a, b), 1 <= a <= b <= n, in lexicographic order."""
    return [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def indecomposables(n: int, lo: int, hi: int) -> list[IndecObject]:
    return [IndecObject(a, b, t) for t in range(lo, hi + 1) for a, b in modules(n)]


# ---------------------------------------------------------------- Hom spaces


def module_hom(x: tuple[int, int], y: tuple[int, int]) -> int:
    (a, b), (c, d) = x, y
    return 1 if c <= a <= d <= b else 0


def module_ext1(x: tuple[int, int], y: tuple[int, int]) -> int:
    (a, b), (c, d) = x, y
    return 1 if a < c <= b + 1 <= d else 0


def hom_dim(X: IndecObject, Y: IndecObject, degree: int = 0) -> int:
    """dim Hom(X, Y[degree]) in D^b(A_n)."""
    e = Y.t + degree - X.t
    if e == 0:
        return module_hom(X.module, Y.module)
    if e == 1:
        return module_ext1(X.module, Y.module)
    return 0


def hom_degrees(X: IndecObject, Y: IndecObject) -> list[int]:
    """Degrees k with Hom(X, Y[k]) != 0."""
    return [k for k in (X.t - Y.t, X.t - Y.t + 1) if hom_dim(X, Y, k)]


def euler_form(x: Iterable[int], y: Iterable[int]) -> int:
    """<x, y> = sum_i x_i y_i - sum_{arrows i->i+1} x_i y_{i+1}."""
    x, y = list(x), list(y)
    return sum(p * q for p, q in zip(x, y)) - sum(x[i] * y[i + 1] for i in range(len(x) - 1))


# ---------------------------------------------------------------- objects


class DGObject:
    """A finite direct sum of indecomposables (a multiset)."""

    __slots__ = ("summands",)

    def __init__(self, summands: Iterable[IndecObject] = ()):
        object.__setattr__(self, "summands", tuple(sorted(summands)))

    def __setattr__(self, name, value):
        raise AttributeError("DGObject is immutable")

    @classmethod
    def of(cls, *xs: IndecObject) -> "DGObject":
        return cls(xs)

    def __add__(self, other: "DGObject") -> "DGObject":
        return DGObject(self.summands + DGObject.coerce(other).summands)

    @classmethod
    def coerce(cls, x) -> "DGObject":
        if isinstance(x, DGObject):
            return x
        if isinstance(x, IndecObject):
            return cls((x,))
        return cls(x)

    def shift(self, k: int = 1) -> "DGObject":
        return DGObject(s.shift(k) for s in self.summands)

    def is_zero(self) -> bool:
        return not self.summands

    def cls(self, n: int) -> tuple[int, ...]:
        out = [0] * n
        for s in self.summands:
            for i, v in enumerate(s.cls(n)):
                out[i] += v
        return tuple(out)

    def multiplicities(self) -> Counter:
        return Counter(self.summands)

    def __eq__(self, other):
        if not isinstance(other, DGObject):
            return NotImplemented
        return self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def __len__(self):
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __repr__(self):
        if not self.summands:
            return "0"
        return " + ".join(repr(s) for s in self.summands)

    def to_json(self):
        return [s.to_json() for s in self.summands]


def hom_total(X, Y, degree: int = 0) -> int:
    """dim Hom(X, Y[degree]) for direct sums."""
    X, Y = DGObject.coerce(X), DGObject.coerce(Y)
    return sum(hom_dim(x, y, degree) for x in X for y in Y)


# ---------------------------------------------------------------- cones


def cone(X: IndecObject, Y: IndecObject) -> DGObject:
    """Cone of the (unique up to scalar) non-zero morphism X -> Y."""
    e = Y.t - X.t
    if e not in (0, 1) or hom_dim(X, Y, 0) == 0:
        raise ValueError(f"no non-zero morphism {X} -> {Y}")
    (a, b), (c, d) = X.module, Y.module
    if e == 0:
        # module map M[a,b] -> M[c,d]: kernel M[d+1,b], cokernel M[c,a-1]
        out = []
        if d < b:
            out.append(IndecObject(d + 1, b, X.t + 1))
        if c < a:
            out.append(IndecObject(c, a - 1, X.t))
        return DGObject(out)
    # extension class M[a,b] -> M[c,d][1]: cone is the middle term shifted by one
    if c == b + 1:
        middle = [IndecObject(a, d, X.t + 1)]
    else:
        middle = [IndecObject(a, d, X.t + 1), IndecObject(c, b, X.t + 1)]
    return DGObject(middle)


def parse_object(text: str) -> IndecObject:
    parts = [int(p) for p in text.replace(" ", "").split(",")]
    if len(parts) == 2:
        parts.append(0)
    if len(parts) != 3:
        raise ValueError(f"expected 'a,b[,t]', got {text!r}")
    return IndecObject(*parts)


def parse_objects(text: str) -> list[IndecObject]:
    return [parse_object(p) for p in text.split(";") if p.strip()]
