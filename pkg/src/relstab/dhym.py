"""The twisted ampleness test for dHYM solvability of line bundles.

On a surface, O(L) carries a dHYM metric for (omega, B) iff omega.ch1^B > 0 and
Im(Z_C / Z_X) > 0 for every curve C.  We evaluate Im(Z_C * conj(Z_X)), which has
the same sign and stays inside the quadratic field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .charge import ChernCharacter, KahlerParam, central_charge, curve_charge, twist
from .picard import DivisorClass, Surface, intersect, is_effective, negative_curves
from .quadratic import QuadraticNumber, to_fraction


@dataclass(frozen=True)
class DhymVerdict:
    solvable: bool
    heart_ok: bool
    violating_curve: DivisorClass | None
    margin: QuadraticNumber
    margin_kind: str  # "curve" or "heart"
    curve_margins: tuple = field(default=())

    def to_json(self):
        return {
            "solvable": self.solvable,
            "heart_ok": self.heart_ok,
            "violating_curve": None if self.violating_curve is None else self.violating_curve.to_json(),
            "margin": self.margin.to_json(),
            "margin_kind": self.margin_kind,
            "curve_margins": [{"curve": c.to_json(), "margin": m.to_json()} for c, m in self.curve_margins],
        }


def curve_margin(L: ChernCharacter, C: DivisorClass, kahler: KahlerParam, B: DivisorClass | None = None) -> QuadraticNumber:
    """Im(Z_C(L) * conj(Z_X(L)))."""
    zx = central_charge(L, kahler, B)
    zc = curve_charge(L, C, kahler, B)
    return (zc * zx.conj()).im


def twisted_ampleness(L: ChernCharacter, kahler: KahlerParam, B: DivisorClass | None = None, curves=None) -> DhymVerdict:
    if L.ch0 != 1:
        raise ValueError(f"twisted ampleness needs a rank-one character, got ch0 = {L.ch0}")
    if curves is None:
        curves = hirzebruch_curve_reduction(kahler.surface)
    for C in curves:
        if not is_effective(C):
            raise ValueError(f"test curve {C!r} is not effective")
    chb = L if B is None else twist(L, B)
    heart_margin = intersect(kahler.omega, chb.ch1)
    heart_ok = heart_margin.sign() > 0
    zx = central_charge(L, kahler, B)
    margins = []
    for C in curves:
        zc = curve_charge(L, C, kahler, B)
        margins.append((C, (zc * zx.conj()).im))
    if not heart_ok:
        return DhymVerdict(False, False, None, heart_margin, "heart", tuple(margins))
    if not margins:
        return DhymVerdict(True, True, None, heart_margin, "heart", ())
    worst_curve, worst = margins[0]
    for C, m in margins[1:]:
        if m < worst:
            worst_curve, worst = C, m
    solvable = worst.sign() > 0
    return DhymVerdict(solvable, True, None if solvable else worst_curve, worst, "curve", tuple(margins))


def hirzebruch_curve_reduction(surface: Surface) -> list[DivisorClass]:
    """Curves whose test suffices on H_r: the negative section when r >= 1.

    The curve margin is linear in C, D1 always passes for ample omega and
    in-heart L, and every effective class is a non-negative combination of
    D1 and D2, so a passing D2 test implies all effective classes pass.
    """
    return negative_curves(surface)


# ---------------------------------------------------------------- closed forms
# Coordinates: omega = alpha*(D1 + s*D4), L = O(k*D1 + l*D2), B = 0.


def f_printed(k, l, r, s, alpha2) -> Fraction:
    """The dHYM polynomial with the cross term printed as +r*s*l*k."""
    k, l, r, s, alpha2 = (to_fraction(x) for x in (k, l, r, s, alpha2))
    return s * k * k + r * s * l * k + ((s * s * r + 2 * s) * alpha2 - r * l * l) / 2


def f_coefficients(l, r, s, alpha2) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (A, B, C) of f_derived(k, l) = A k^2 + B k + C."""
    l, r, s, alpha2 = (to_fraction(x) for x in (l, r, s, alpha2))
    return s, -r * s * l, ((s * s * r + 2 * s) * alpha2 - r * l * l) / 2


def f_derived(k, l, r, s, alpha2) -> Fraction:
    """D2-margin of the twisted ampleness test divided by alpha.

    f > 0 iff O(k*D1 + l*D2) passes the test at the negative curve.
    """
    k = to_fraction(k)
    A, B, C = f_coefficients(l, r, s, alpha2)
    return A * k * k + B * k + C


def discriminant_in_k(l, r, s, alpha2) -> Fraction:
    A, B, C = f_coefficients(l, r, s, alpha2)
    return B * B - 4 * A * C


def discriminant_closed_form(l, r, s, alpha2) -> Fraction:
    l, r, s, alpha2 = (to_fraction(x) for x in (l, r, s, alpha2))
    return s * (s * r + 2) * (r * l * l - 2 * s * alpha2)


def hirzebruch_setup(k: int, l: int, r: int, s, alpha2):
    """(surface, kahler, line-bundle character) for the closed-form coordinates."""
    from .charge import line_bundle_ch

    surface = Surface(r)
    kahler = KahlerParam.proportional(alpha2, s, surface)
    L = line_bundle_ch(DivisorClass(k, l, surface))
    return surface, kahler, L


__all__ = [
    "DhymVerdict",
    "twisted_ampleness",
    "curve_margin",
    "hirzebruch_curve_reduction",
    "f_printed",
    "f_derived",
    "f_coefficients",
    "discriminant_in_k",
    "discriminant_closed_form",
    "hirzebruch_setup",
]
