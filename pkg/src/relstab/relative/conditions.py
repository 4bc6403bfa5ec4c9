"""Stability conditions on D^b(A_n) given by a finite-length heart and charges of its simples.

Charges are exact complex numbers in a common real quadratic field, each in
the half plane {m*exp(i*pi*phi) : m > 0, 0 < phi <= 1}.  Phases of objects
are recorded as an integer shift plus a charge, so that all comparisons
inside one stability condition are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

import mpmath

from ..charge import ActionParam, ComplexExact, phase as charge_phase
from ..quadratic import QuadraticNumber, RadicalMismatch, to_fraction
from ..quiver.category import DGObject, IndecObject, cone, hom_dim
from ..quiver.complexes import cone_of_sum_map
from ..quiver.gf import P as FIELD_P
from ..quiver.hearts import Heart, InconsistencyError, simples_of_object_set
from .certified import cross_sign, sqrt_sum_sign


class WindowError(ValueError):
    """An object could not be placed relative to the heart within the search window."""


# ---------------------------------------------------------------- phases


@dataclass(frozen=True)
class Phase:
    """The phase k + phi(z), with phi(z) in (0, 1]."""

    k: int
    z: ComplexExact

    def compare(self, other: "Phase") -> int:
        if self.k != other.k:
            return 1 if self.k > other.k else -1
        return cross_sign(self.z, other.z)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def same(self, other: "Phase") -> bool:
        return self.compare(other) == 0

    def value(self):
        """mpf value at the current working precision."""
        return self.k + mpmath.atan2(self.z.im.to_mpf(), self.z.re.to_mpf()) / mpmath.pi

    def exact(self) -> Fraction | None:
        e = charge_phase(self.z, dps=15).exact
        return None if e is None else self.k + e

    def shifted(self, a) -> "Phase":
        a = to_fraction(a)
        if a.denominator != 1:
            raise ValueError("only integral shifts keep the charge representative")
        return Phase(self.k + int(a), self.z)

    def compare_rational(self, q) -> int:
        """Sign of (phase - q) for a rational q."""
        q = to_fraction(q)
        f = q - self.k
        if f <= 0:
            return 1
        if f > 1:
            return -1
        z = self.z
        if f == 1:
            return 0 if (z.im.sign() == 0) else -1
        if f == Fraction(1, 2):
            return -z.re.sign()
        if f in (Fraction(1, 4), Fraction(3, 4)):
            # compare with the diagonal directions (1, 1) and (-1, 1)
            d = ComplexExact(1 if f == Fraction(1, 4) else -1, 1)
            return cross_sign(z, d)
        with mpmath.workdps(60):
            target = mpmath.mpf(f.numerator) / f.denominator
            diff = mpmath.atan2(z.im.to_mpf(), z.re.to_mpf()) / mpmath.pi - target
            if abs(diff) < mpmath.mpf(10) ** -50:
                raise ArithmeticError("phase too close to a non-dyadic rational to decide")
            return 1 if diff > 0 else -1

    def to_json(self, digits: int = 30):
        out = {"shift": self.k, "charge": self.z.to_json()}
        e = self.exact()
        if e is not None:
            out["phase"] = str(e) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"
        with mpmath.workdps(digits + 10):
            out["phase_decimal"] = mpmath.nstr(self.value(), digits)
        return out

    def __repr__(self):
        with mpmath.workdps(20):
            return f"Phase({mpmath.nstr(self.value(), 12)})"


@dataclass(frozen=True)
class Mass:
    """A sum of |Z| values, stored through the squared moduli."""

    squares: tuple

    def value(self):
        return mpmath.fsum(mpmath.sqrt(QuadraticNumber.coerce(x).to_mpf()) for x in self.squares)

    def compare(self, other: "Mass") -> int:
        return sqrt_sum_sign(self.squares, other.squares)

    def compare_modulus(self, z: ComplexExact) -> int:
        """Sign of mass - |z|."""
        return sqrt_sum_sign(self.squares, [z.abs2()])

    def scaled(self, factor) -> "Mass":
        f = to_fraction(factor)
        return Mass(tuple(QuadraticNumber.coerce(x) * f * f for x in self.squares))

    def to_json(self, digits: int = 30):
        with mpmath.workdps(digits + 10):
            dec = mpmath.nstr(self.value(), digits)
        return {"squared_terms": [QuadraticNumber.coerce(x).to_json() for x in self.squares], "decimal": dec}


# ---------------------------------------------------------------- conditions


def _generic_coeff(i: int, j: int) -> int:
    return random.Random(1_000_003 * i + j + 17).randrange(1, FIELD_P)


class StabCondition:
    """A heart (of D or of a thick subcategory) with charges on its simples."""

    def __init__(self, heart: Heart, charges):
        charges = tuple(ComplexExact.coerce(z) for z in charges)
        if len(charges) != len(heart.simples):
            raise ValueError(f"need {len(heart.simples)} charges, got {len(charges)}")
        for s, z in zip(heart.simples, charges):
            if not z.in_upper_half():
                raise ValueError(f"charge {z} of simple {s} is not in the upper half plane")
        try:
            total = ComplexExact(0, 0)
            for z in charges:
                total = total + z
        except RadicalMismatch:
            raise ValueError("charges must lie in one real quadratic field") from None
        self.heart = heart
        self.charges = charges
        self._hn = {}
        self._semistables = None

    @classmethod
    def from_class_charge(cls, heart: Heart, Z) -> "StabCondition":
        """Charges of the simples read off a charge on dimension vectors (tuple of n values)."""
        Z = tuple(ComplexExact.coerce(z) for z in Z)
        return cls(heart, [charge_on_class(Z, s.cls(heart.n)) for s in heart.simples])

    @property
    def n(self) -> int:
        return self.heart.n

    @property
    def universe(self) -> frozenset:
        return self.heart.universe

    def key(self):
        return (self.heart.key(), self.charges)

    def __eq__(self, other):
        return isinstance(other, StabCondition) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"StabCondition({self.heart!r}, {list(self.charges)!r})"

    def to_json(self):
        return {"heart": self.heart.to_json(), "charges": [z.to_json() for z in self.charges]}

    # ------------------------------------------------------------ charges
    def charge(self, v) -> ComplexExact:
        c = self.heart.coords(v)
        total = ComplexExact(0, 0)
        for x, z in zip(c, self.charges):
            if x:
                total = total + z * x
        return total

    def charge_of(self, X) -> ComplexExact:
        return self.charge(DGObject.coerce(X).cls(self.n))

    def class_charge(self) -> tuple | None:
        """The charge as values on the n dimension-vector basis vectors, when the heart spans them."""
        try:
            return tuple(self.charge(tuple(1 if i == j else 0 for i in range(self.n))) for j in range(self.n))
        except ValueError:
            return None

    # ------------------------------------------------------------ HN
    def hn(self, X) -> "HNResult":
        X = DGObject.coerce(X)
        if X not in self._hn:
            self._hn[X] = _hn_filtration(X, self)
        return self._hn[X]

    def is_semistable(self, X) -> bool:
        return len(self.hn(X).factors) == 1

    def semistables(self) -> list[IndecObject]:
        """Semistable indecomposables of the heart (all others are shifts of these)."""
        if self._semistables is None:
            self._semistables = [E for E in self.heart.objects if self.is_semistable(E)]
        return self._semistables

    def phase_of_heart_object(self, E) -> Phase:
        return Phase(0, self.charge_of(E))


def charge_on_class(Z, v) -> ComplexExact:
    total = ComplexExact(0, 0)
    for x, z in zip(v, Z):
        if x:
            total = total + ComplexExact.coerce(z) * x
    return total


@dataclass
class HNResult:
    factors: list  # [(DGObject, Phase)]
    mass: Mass

    @property
    def phi_plus(self) -> Phase:
        return self.factors[0][1]

    @property
    def phi_minus(self) -> Phase:
        return self.factors[-1][1]

    def is_semistable(self) -> bool:
        return len(self.factors) == 1

    def to_json(self):
        return {
            "factors": [{"object": F.to_json(), "phase": p.to_json()} for F, p in self.factors],
            "phi_plus": self.phi_plus.to_json(),
            "phi_minus": self.phi_minus.to_json(),
            "mass": self.mass.to_json(),
            "semistable": self.is_semistable(),
        }


# ---------------------------------------------------------------- heart cohomology


def _truncate_top(X: IndecObject, H: Heart, c: int):
    """Triangle A -> X -> B with A in D^{<=-c} and B in D^{>=-c+1}."""
    n = H.n
    window = range(X.t - 3, X.t + 4)
    cands = [IndecObject(a, b, t) for t in window for a, b in sorted(H.universe)]
    cands = [B for B in cands if hom_dim(X, B, 0) and H.in_coaisle(B, -c + 1)]
    for size in range(1, n + 1):
        for combo in combinations_with_replacement(range(len(cands)), size):
            Bs = [cands[j] for j in combo]
            coeffs = {(0, j): _generic_coeff(0, j) for j in range(len(Bs))}
            A = cone_of_sum_map([X], Bs, coeffs, n).shift(-1)
            if all(H.in_aisle(s, -c) for s in A):
                return A, DGObject(Bs)
    raise WindowError(f"no truncation triangle for {X} within shifts {X.t - 3}..{X.t + 3}")


def heart_pieces(X, H: Heart) -> dict[int, list[IndecObject]]:
    """Heart cohomology: k -> heart objects E with E[k] a summand-piece of X."""
    out: dict[int, list[IndecObject]] = {}
    todo = list(DGObject.coerce(X))
    guard = 0
    while todo:
        guard += 1
        if guard > 1000:
            raise WindowError(f"heart cohomology of {X} did not terminate")
        s = todo.pop()
        if s.module not in H.universe:
            raise WindowError(f"{s} is outside the ambient subcategory of the heart")
        k = H.shift_into(s)
        if k is not None:
            out.setdefault(k, []).append(s.shift(-k))
            continue
        top = None
        for c in range(s.t - H.lo + 2, s.t - H.hi - 3, -1):
            if not H.in_coaisle(s, -c + 1):
                top = c
                break
        if top is None:
            raise WindowError(f"{s} has no heart cohomology within the window")
        A, B = _truncate_top(s, H, top)
        todo.extend(A)
        todo.extend(B)
    return out


# ---------------------------------------------------------------- subobjects in the heart

_SUBOBJECTS: dict = {}


def _mono_cokernel(A: tuple, E: tuple, H: Heart):
    """Cokernel of a generic map A -> E if it is a monomorphism in H, else None."""
    if A == E:
        return DGObject()
    if len(A) == 1 and len(E) == 1:
        if not hom_dim(A[0], E[0], 0):
            return None
        Q = cone(A[0], E[0])
    else:
        coeffs = {(i, j): _generic_coeff(i, j) for i in range(len(A)) for j in range(len(E))
                  if hom_dim(A[i], E[j], 0)}
        if not coeffs:
            return None
        Q = cone_of_sum_map(list(A), list(E), coeffs, H.n)
    if all(H.contains(s) for s in Q):
        return Q
    return None


def heart_subobjects(E, H: Heart) -> list[tuple[tuple, DGObject]]:
    """Non-zero subobjects of a heart object, up to isomorphism of sub and quotient."""
    E = tuple(sorted(DGObject.coerce(E)))
    key = (H.key(), H.universe, E)
    if key in _SUBOBJECTS:
        return _SUBOBJECTS[key]
    target = [0] * len(H.simples)
    for e in E:
        for i, x in enumerate(H.coords(e.cls(H.n))):
            target[i] += x
    cands = [Y for Y in H.objects if any(hom_dim(Y, e, 0) for e in E)]
    ccoords = [H.coords(Y.cls(H.n)) for Y in cands]
    found = []
    seen = set()

    def rec(start, chosen, tot):
        if chosen:
            A = tuple(sorted(chosen))
            if A not in seen:
                seen.add(A)
                Q = _mono_cokernel(A, E, H)
                if Q is not None:
                    found.append((A, Q))
        for j in range(start, len(cands)):
            new = [x + y for x, y in zip(tot, ccoords[j])]
            if all(x <= y for x, y in zip(new, target)):
                chosen.append(cands[j])
                rec(j, chosen, new)
                chosen.pop()

    rec(0, [], [0] * len(target))
    _SUBOBJECTS[key] = found
    return found


def _hn_in_heart(E: DGObject, sigma: StabCondition):
    out = []
    while not E.is_zero():
        best = None
        for A, Q in heart_subobjects(E, sigma.heart):
            z = sigma.charge(DGObject(A).cls(sigma.n))
            if best is None:
                best = (A, Q, z)
                continue
            c = cross_sign(z, best[2])
            if c > 0 or (c == 0 and z.abs2() > best[2].abs2()):
                best = (A, Q, z)
        A, Q, z = best
        out.append((DGObject(A), z))
        E = Q
    return out


def _hn_filtration(X: DGObject, sigma: StabCondition) -> HNResult:
    if X.is_zero():
        raise ValueError("the zero object has no HN filtration")
    pieces = heart_pieces(X, sigma.heart)
    factors = []
    for k in sorted(pieces, reverse=True):
        for F, z in _hn_in_heart(DGObject(pieces[k]), sigma):
            factors.append((F.shift(k), Phase(k, z)))
    for (_, p), (_, q) in zip(factors, factors[1:]):
        if not p > q:
            raise InconsistencyError(f"HN phases of {X} are not strictly decreasing")
    return HNResult(factors, Mass(tuple(p.z.abs2() for _, p in factors)))


def hn_filtration(X, sigma: StabCondition) -> HNResult:
    """HN filtration of X: heart cohomology refined by maximal destabilizing subobjects."""
    return sigma.hn(X)


# ---------------------------------------------------------------- support


@dataclass
class SupportResult:
    holds: bool
    constant_squared: QuadraticNumber | None
    witness: IndecObject | None

    @property
    def constant(self):
        if self.constant_squared is None:
            return None
        c2 = self.constant_squared
        if c2.is_rational():
            return QuadraticNumber.sqrt_of(c2.a)
        return mpmath.sqrt(c2.to_mpf())

    def to_json(self):
        c = self.constant
        return {
            "holds": self.holds,
            "best_constant": c.to_json() if isinstance(c, QuadraticNumber) else (None if c is None else mpmath.nstr(c, 30)),
            "best_constant_squared": None if self.constant_squared is None else self.constant_squared.to_json(),
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def support_check(sigma: StabCondition) -> SupportResult:
    """Best C with ||v(E)|| <= C |Z(v(E))| over semistable indecomposables (Euclidean norm on dimension vectors)."""
    best, wit = None, None
    for E in sigma.semistables():
        v = E.cls(sigma.n)
        z = sigma.charge(v)
        if z.is_zero():
            return SupportResult(False, None, E)
        r = QuadraticNumber(sum(x * x for x in v)) / z.abs2()
        if best is None or r > best:
            best, wit = r, E
    return SupportResult(True, best, wit)


# ---------------------------------------------------------------- C-action


def shifted(sigma: StabCondition, s: int) -> StabCondition:
    """The condition with heart H[s] and the charge Z*(-1)^s."""
    return act_C(sigma, ActionParam(s))


def act_C(sigma: StabCondition, act: ActionParam) -> StabCondition:
    """Action of a + i*b: charges times exp(-i*pi*a + pi*b), phases lowered by a."""
    if not act.exact_rotation():
        raise ValueError("only half-integral a is supported with exact charges")
    if not act.exact_scale():
        raise ValueError("b must be an integral multiple of log(2)/pi for exact charges")
    f = act.factor()
    a = act.a
    if a.denominator == 1:
        H2 = sigma.heart.shift(int(a))
        # Z'(S[a]) = f * Z(v(S[a])) = f * (-1)^a Z(S)
        sign = -1 if int(a) % 2 else 1
        return StabCondition(H2, [z * f * sign for z in sigma.charges])
    H = sigma.heart
    lo = H.lo + int(a) - 2
    hi = H.hi + int(a) + 2
    members = []
    for t in range(lo, hi + 1):
        for m in sorted(H.universe):
            X = IndecObject(*m, t)
            r = sigma.hn(X)
            if r.phi_minus.compare_rational(a) > 0 and r.phi_plus.compare_rational(a + 1) <= 0:
                members.append(X)
    H2 = Heart(H.n, simples_of_object_set(members), H.universe)
    if set(H2.objects) != set(members) or H2.check():
        raise InconsistencyError(f"rotated heart {H2} does not match the slicing")
    return StabCondition(H2, [sigma.charge_of(s) * f for s in H2.simples])
