"""Search for line bundles on H_r that are Bridgeland stable but not dHYM.

For fixed l the dHYM polynomial f(k, l) is a quadratic in k with roots k-, k+.
Taking k = floor(k+) makes f(k, l) <= 0, and the candidate is kept when the
stability polynomial is positive there.  Every returned pair is re-verified with
the general intersection-theoretic tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .charge import KahlerParam, line_bundle_ch
from .dhym import f_derived, twisted_ampleness
from .picard import DivisorClass, Surface
from .quadratic import QuadraticNumber, format_fraction, to_fraction
from .stability import bridgeland_stable, g_derived

CONVENTIONS = ("derived", "printed")


class HorizonExhausted(RuntimeError):
    """No verified witness within the horizon; carries the best candidate seen."""

    def __init__(self, message: str, best: dict | None, trace: list):
        super().__init__(message)
        self.best = best
        self.trace = trace


@dataclass(frozen=True)
class SearchParams:
    r: int
    s: Fraction
    alpha2: Fraction
    l_max: int = 10_000
    n_max: int = 10_000

    def __post_init__(self):
        object.__setattr__(self, "s", to_fraction(self.s))
        object.__setattr__(self, "alpha2", to_fraction(self.alpha2))
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"the search needs r >= 1 (H_r with a negative curve), got r = {self.r!r}")
        if self.s <= 0 or self.alpha2 <= 0:
            raise ValueError("s and alpha2 must be positive")
        if self.l_max < 1 or self.n_max < 1:
            raise ValueError("horizons must be positive")

    @property
    def threshold(self) -> Fraction:
        """The boundary value 2 s alpha^2 / r of l^2."""
        return 2 * self.s * self.alpha2 / self.r

    def first_l(self) -> int:
        """Least l >= 0 with r l^2 >= 2 s alpha^2."""
        t = self.threshold
        l = math.isqrt(t.numerator // t.denominator)
        while l * l < t:
            l += 1
        return l


@dataclass(frozen=True)
class RootData:
    l: int
    k_minus: QuadraticNumber
    k_plus: QuadraticNumber
    floor_k_plus: int
    eps: QuadraticNumber
    convention: str = "derived"

    def to_json(self):
        return {
            "l": self.l,
            "k_minus": self.k_minus.to_json(),
            "k_plus": self.k_plus.to_json(),
            "floor_k_plus": self.floor_k_plus,
            "eps": self.eps.to_json(),
            "convention": self.convention,
        }


def radicand(l: int, params: SearchParams) -> Fraction:
    r, s = params.r, params.s
    return (r + 2 / s) * (r * l * l - 2 * s * params.alpha2)


def roots(l: int, params: SearchParams, convention: str = "derived") -> RootData:
    """Exact roots in k of f(k, l) = 0.

    ``derived`` gives the roots of the canonical polynomial, (r l +- sqrt(R))/2;
    ``printed`` uses the opposite cross-term sign, (-r l +- sqrt(R))/2.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    R = radicand(l, params)
    if R < 0:
        raise ValueError(f"complex roots at l = {l}: r l^2 < 2 s alpha^2")
    root = QuadraticNumber.sqrt_of(R)
    centre = Fraction(params.r * l, 2) * (1 if convention == "derived" else -1)
    k_plus = root * Fraction(1, 2) + centre
    k_minus = root * Fraction(-1, 2) + centre
    fl = k_plus.floor()
    return RootData(l, k_minus, k_plus, fl, k_plus - fl, convention)


def eps_sequence(l_start: int, count: int, params: SearchParams) -> list[QuadraticNumber]:
    """Fractional parts of k+ for l_start, ..., l_start + count - 1.

    The value does not depend on the cross-term convention, because the two
    conventions shift k+ by the integer r*l.
    """
    return [roots(l, params).eps for l in range(l_start, l_start + count)]


def _mp_frac(x):
    return x - mpmath.floor(x)


def recurrence_printed(l: int, N: int, params: SearchParams, dps: int = 50):
    """Right-hand side of the printed mod-Z recurrence for eps_{l+N} - eps_l, reduced to [0, 1)."""
    with mpmath.workdps(dps):
        r, s = mpmath.mpf(params.r), mpmath.mpf(params.s.numerator) / params.s.denominator
        c = mpmath.mpf(params.threshold.numerator) / params.threshold.denominator
        k = mpmath.sqrt(r * (r + 2 / s))
        total = -N * r / 2
        for i in range(l, l + N + 1):
            total += k * _mp_frac(mpmath.sqrt((i + 1) ** 2 - c) - mpmath.sqrt(i * i - c))
        return _mp_frac(total)


def recurrence_corrected(l: int, N: int, params: SearchParams, dps: int = 50):
    """Telescoping form: N r/2 + (1/2) sqrt(r(r+2/s)) * sum_{i=l}^{l+N-1} (sqrt((i+1)^2-c) - sqrt(i^2-c)) mod 1."""
    with mpmath.workdps(dps):
        r, s = mpmath.mpf(params.r), mpmath.mpf(params.s.numerator) / params.s.denominator
        c = mpmath.mpf(params.threshold.numerator) / params.threshold.denominator
        k = mpmath.sqrt(r * (r + 2 / s))
        total = N * r / 2
        for i in range(l, l + N):
            total += k / 2 * (mpmath.sqrt((i + 1) ** 2 - c) - mpmath.sqrt(i * i - c))
        return _mp_frac(total)


def root_gap_fraction(l: int, c, dps: int = 60):
    """Fractional part of sqrt((l+1)^2 - c) - sqrt(l^2 - c)."""
    c = to_fraction(c)
    with mpmath.workdps(dps):
        cc = mpmath.mpf(c.numerator) / c.denominator
        return _mp_frac(mpmath.sqrt((l + 1) ** 2 - cc) - mpmath.sqrt(l * l - cc))


# ---------------------------------------------------------------- verification


def verify_pair(k: int, l: int, params: SearchParams) -> dict:
    """Re-check a candidate with the general tests (not the closed forms)."""
    surface = Surface(params.r)
    kahler = KahlerParam.proportional(params.alpha2, params.s, surface)
    L = line_bundle_ch(DivisorClass(k, l, surface))
    dv = twisted_ampleness(L, kahler)
    sv = bridgeland_stable(L, kahler)
    return {
        "verified": sv.in_heart and sv.stable and not dv.solvable,
        "stable": sv.stable,
        "in_heart": sv.in_heart,
        "dhym": dv.solvable,
        "dhym_margin": dv.margin,
        "stability_margin": sv.margin,
    }


@dataclass(frozen=True)
class Witness:
    k: int
    l: int
    params: SearchParams
    convention: str
    strategy: str
    checks: dict
    discrepancies: tuple = field(default=())

    @property
    def verified(self) -> bool:
        return self.checks["verified"]

    def as_tuple(self):
        return self.k, self.l, self.verified

    def to_json(self):
        c = self.checks
        return {
            "r": self.params.r,
            "s": format_fraction(self.params.s),
            "alpha2": format_fraction(self.params.alpha2),
            "witness": {"k": self.k, "l": self.l},
            "stable": c["stable"],
            "dhym": c["dhym"],
            "checks": {
                "in_heart": c["in_heart"],
                "dhym_margin": c["dhym_margin"].to_json(),
                "stability_margin": c["stability_margin"].to_json(),
                "convention": self.convention,
                "strategy": self.strategy,
            },
            "discrepancies": list(self.discrepancies),
        }


class _FastRoot:
    """floor(k+) and eps comparisons using integer square roots only.

    k+ = c + y with c = +-r*l/2 and y = sqrt(t), t = R/4.  Used in the scan
    loop so that no radicand has to be factored; results agree with
    :func:`roots` exactly.
    """

    __slots__ = ("c", "t", "floor")

    def __init__(self, l: int, params: SearchParams, convention: str):
        self.c = Fraction(params.r * l, 2) * (1 if convention == "derived" else -1)
        self.t = radicand(l, params) / 4
        if self.t < 0:
            raise ValueError(f"complex roots at l = {l}")
        m = math.isqrt(self.t.numerator // self.t.denominator)
        c0 = math.floor(self.c)
        if self.c - c0 == 0:
            self.floor = c0 + m
        else:
            self.floor = c0 + m + (1 if self.t >= (m + Fraction(1, 2)) ** 2 else 0)

    def eps_at_most(self, bound: Fraction) -> bool:
        T = self.floor - self.c + bound
        return T >= 0 and self.t <= T * T


def _candidates(l: int, params: SearchParams):
    out = {}
    for conv in CONVENTIONS:
        fr = _FastRoot(l, params, conv)
        out.setdefault(fr.floor, (conv, fr))
    return out


def find_counterexample(params: SearchParams) -> Witness:
    """Least verified (l, then k) pair following the constructive strategy.

    r >= 4: walk l upwards from the first admissible l.  1 <= r < 4: walk
    l0 + N and only try indices with eps <= r/4.  If the gated walk finds
    nothing inside the horizon, an ungated walk over the same range follows.
    """
    start = params.first_l()
    if params.r >= 4:
        limit, gated = params.l_max, False
    else:
        limit, gated = start + params.n_max, True
    quarter = Fraction(params.r, 4)
    best = None
    trace: list = []
    discrepancies: list = []
    for strategy, gate in (("gated", gated), ("ungated", False)):
        if strategy == "ungated" and not gated:
            break
        for l in range(start, limit + 1):
            cands = _candidates(l, params)
            hits = []
            for k, (conv, fr) in sorted(cands.items()):
                if gate and not fr.eps_at_most(quarter):
                    continue
                # cheap exact pre-screen, then the general tests decide
                g = g_derived(k, l, params.r, params.s, params.alpha2)
                if best is None or g > best["g_derived"]:
                    best = {"k": k, "l": l, "g_derived": g, "convention": conv}
                if g <= 0 or f_derived(k, l, params.r, params.s, params.alpha2) > 0:
                    continue
                checks = verify_pair(k, l, params)
                if checks["verified"]:
                    hits.append((k, conv, checks))
            if hits:
                k, conv, checks = hits[0]
                if len(cands) > 1:
                    other = [c for c in cands if c != k]
                    discrepancies.append(
                        {"l": l, "floors": {v[0]: kk for kk, v in cands.items()}, "returned": k, "other_floor_verified": any(h[0] in other for h in hits)}
                    )
                label = ("gated" if gate else "ungated") + (":r>=4" if params.r >= 4 else ":r<4")
                return Witness(k, l, params, conv, label, checks, tuple(discrepancies))
        trace.append({"strategy": strategy, "l_range": [start, limit]})
    if best is not None:
        best = dict(best, g_derived=format_fraction(best["g_derived"]))
    raise HorizonExhausted(f"no verified witness for r={params.r} within l <= {limit}", best, trace)


__all__ = [
    "SearchParams",
    "RootData",
    "Witness",
    "HorizonExhausted",
    "roots",
    "radicand",
    "eps_sequence",
    "recurrence_printed",
    "recurrence_corrected",
    "root_gap_fraction",
    "verify_pair",
    "find_counterexample",
]
