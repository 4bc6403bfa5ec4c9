"""Bridgeland stability of line bundles in the geometric heart.

A line bundle L in the heart (omega.ch1^B > 0) is tested against the
destabilizing quotient L -> L|_C for each negative curve C, which amounts to

    (C.ch1 - C^2/2)(omega.ch1) > (ch2 - omega^2/2)(C.omega).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .charge import ChernCharacter, KahlerParam, twist
from .dhym import f_derived, hirzebruch_curve_reduction, twisted_ampleness
from .picard import DivisorClass, intersect
from .quadratic import QuadraticNumber, to_fraction


@dataclass(frozen=True)
class StabVerdict:
    in_heart: bool
    stable: bool
    destabilizer: DivisorClass | None
    margin: QuadraticNumber
    margin_kind: str
    curve_margins: tuple = field(default=())
    b_field_extension: bool = False

    def to_json(self):
        out = {
            "in_heart": self.in_heart,
            "stable": self.stable,
            "destabilizer": None if self.destabilizer is None else self.destabilizer.to_json(),
            "margin": self.margin.to_json(),
            "margin_kind": self.margin_kind,
            "curve_margins": [{"curve": c.to_json(), "margin": m.to_json()} for c, m in self.curve_margins],
        }
        if self.b_field_extension:
            out["note"] = "nonzero B-field: extension beyond the untwisted criterion"
        return out


def heart_membership(L: ChernCharacter, kahler: KahlerParam, B: DivisorClass | None = None) -> bool:
    chb = L if B is None else twist(L, B)
    return intersect(kahler.omega, chb.ch1).sign() > 0


def stability_margin(L: ChernCharacter, C: DivisorClass, kahler: KahlerParam, B: DivisorClass | None = None) -> QuadraticNumber:
    chb = L if B is None else twist(L, B)
    w = kahler.omega
    half = Fraction(1, 2)
    lhs = (intersect(C, chb.ch1) - intersect(C, C) * half) * intersect(w, chb.ch1)
    rhs = (chb.ch2 - intersect(w, w) * half) * intersect(C, w)
    return lhs - rhs


def bridgeland_stable(L: ChernCharacter, kahler: KahlerParam, B: DivisorClass | None = None, curves=None) -> StabVerdict:
    if L.ch0 != 1:
        raise ValueError(f"line-bundle stability needs a rank-one character, got ch0 = {L.ch0}")
    if curves is None:
        curves = hirzebruch_curve_reduction(kahler.surface)
    extension = B is not None and not B.is_zero()
    chb = L if B is None else twist(L, B)
    heart_margin = intersect(kahler.omega, chb.ch1)
    margins = tuple((C, stability_margin(L, C, kahler, B)) for C in curves)
    if heart_margin.sign() <= 0:
        return StabVerdict(False, False, None, heart_margin, "heart", margins, extension)
    if not margins:
        return StabVerdict(True, True, None, heart_margin, "heart", (), extension)
    worst_curve, worst = margins[0]
    for C, m in margins[1:]:
        if m < worst:
            worst_curve, worst = C, m
    stable = worst.sign() > 0
    return StabVerdict(True, stable, None if stable else worst_curve, worst, "curve", margins, extension)


def g_printed(k, l, r, s, alpha2) -> Fraction:
    """The stability polynomial exactly as printed (leading k^2, +r*l*k)."""
    k, l, r, s, alpha2 = (to_fraction(x) for x in (k, l, r, s, alpha2))
    return k * k + r * l * k + ((r + 2) * alpha2 - r * l * l) / 2 + r * (s * k + l + s * r * l) / 2


def g_derived(k, l, r, s, alpha2) -> Fraction:
    """D2-margin of the stability inequality divided by alpha.

    Equals f_derived + (r/2)(s*k + l); the extra term is -(C^2/2)(omega.ch1)/alpha.
    """
    k, l, r, s = (to_fraction(x) for x in (k, l, r, s))
    return f_derived(k, l, r, s, alpha2) + r * (s * k + l) / 2


def classify(dhym_solvable: bool, stable: bool) -> str:
    if dhym_solvable and stable:
        return "both"
    if stable:
        return "stable-only"
    if dhym_solvable:
        return "dhym-only"
    return "neither"


def joint_verdict(L: ChernCharacter, kahler: KahlerParam, B: DivisorClass | None = None, curves=None):
    """Both verdicts and the four-quadrant class for one line bundle."""
    dv = twisted_ampleness(L, kahler, B, curves)
    sv = bridgeland_stable(L, kahler, B, curves)
    return dv, sv, classify(dv.solvable, sv.stable)


__all__ = [
    "StabVerdict",
    "heart_membership",
    "stability_margin",
    "bridgeland_stable",
    "g_printed",
    "g_derived",
    "classify",
    "joint_verdict",
]
