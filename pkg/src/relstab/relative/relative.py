"""Relative stability conditions (Z, P1) on (D, D1): extension search, metric and charts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from ..charge import ActionParam, ComplexExact
from ..quadratic import QuadraticNumber, RadicalMismatch
from ..quiver.category import IndecObject
from ..quiver.hearts import exchange_graph, restricted_heart
from ..quiver.thick import ThickSubcat, orthogonal
from .conditions import StabCondition, act_C, charge_on_class
from .gluing import Refusal, glue, restriction_witness, subcategory_of


@dataclass
class RelStabCondition:
    """A charge on all of K(D) together with a stability condition on D1 it restricts to.

    ``extension`` is a stability condition on D restricting to ``sigma1``
    (the certificate found by ``relative_extend``), when known.
    """

    charge: tuple
    sigma1: StabCondition
    extension: StabCondition | None = None
    certificate: dict = field(default_factory=dict)

    ok = True

    def __post_init__(self):
        self.charge = tuple(ComplexExact.coerce(z) for z in self.charge)
        if len(self.charge) != self.sigma1.n:
            raise ValueError("charge needs one value per vertex")
        for S in self.sigma1.heart.simples:
            if charge_on_class(self.charge, S.cls(self.n)) != self.sigma1.charge_of(S):
                raise ValueError(f"charge disagrees with the subcategory condition on {S}")

    @property
    def n(self) -> int:
        return self.sigma1.n

    @property
    def sub(self) -> ThickSubcat:
        return subcategory_of(self.sigma1)

    def to_json(self):
        out = {
            "charge": [z.to_json() for z in self.charge],
            "sub": self.sub.to_json(),
            "sigma1": self.sigma1.to_json(),
        }
        if self.extension is not None:
            out["extension"] = self.extension.to_json()
        if self.certificate:
            out["certificate"] = self.certificate
        return out


def relative_extend(Z, sigma1: StabCondition, m_max: int = 3, window: int = 1):
    """Search for sigma2 on D2 and an even shift so that gluing extends (Z, sigma1).

    Hearts of D2 are taken from its exchange graph with simples in shifts
    [-window, window]; they are shifted by -2m for m = 0..m_max.  The least
    certificate in (m, heart) order is returned, or a Refusal with the trace.
    """
    Z = tuple(ComplexExact.coerce(z) for z in Z)
    n = sigma1.n
    if len(Z) != n:
        raise ValueError("charge needs one value per vertex")
    for S in sigma1.heart.simples:
        if charge_on_class(Z, S.cls(n)) != sigma1.charge_of(S):
            raise ValueError(f"charge disagrees with the subcategory condition on {S}")
    D1 = subcategory_of(sigma1)
    D2 = orthogonal(D1, "left")
    hearts = exchange_graph(n, lo=-window, hi=window, sub=D2).hearts
    trace = []
    for m in range(m_max + 1):
        for H2 in hearts:
            charges = [charge_on_class(Z, S.cls(n)) for S in H2.simples]
            if not all(z.in_upper_half() for z in charges):
                continue
            sigma2 = StabCondition(H2.shift(-2 * m), charges)
            res = glue(sigma1, sigma2)
            step = {"m": m, "heart2": sigma2.heart.to_json()}
            if not res.ok:
                step["refused"] = res.condition
                trace.append(step)
                continue
            bad = restriction_witness(res.sigma, sigma1)
            if bad is not None:
                step["restriction_fails_at"] = bad.to_json()
                trace.append(step)
                continue
            cert = {"m": m, "sigma2": sigma2.to_json(), "condition_2_gap": res.gap}
            return RelStabCondition(Z, sigma1, res.sigma, cert)
    return Refusal("extension", f"no extension with m <= {m_max} and D2-hearts in window {window}", {}, trace)


def act_relative(sr: RelStabCondition, act: ActionParam) -> RelStabCondition:
    """The C-action on the charge and the subcategory slicing together."""
    s1 = act_C(sr.sigma1, act)
    f = act.factor()
    Z = tuple(z * f for z in sr.charge)
    ext = None if sr.extension is None else act_C(sr.extension, act)
    return RelStabCondition(Z, s1, ext, {})


# ---------------------------------------------------------------- metric


@dataclass
class MetricResult:
    d1: object
    d2: object
    d2_squared: object
    d2_lattice: object
    d1_witness: object
    d2_lattice_witness: object

    @property
    def total(self):
        return self.d1 + self.d2

    @property
    def gap(self):
        return self.d2 - self.d2_lattice

    def to_json(self, digits: int = 30):
        s = lambda x: mpmath.nstr(x, digits)  # noqa: E731
        return {
            "d_r": s(self.total),
            "d1": s(self.d1),
            "d2_operator_norm": s(self.d2),
            "d2_squared": self.d2_squared.to_json() if isinstance(self.d2_squared, QuadraticNumber) else s(self.d2_squared),
            "d2_indecomposable_sup": s(self.d2_lattice),
            "d2_gap": s(self.gap),
            "d1_witness": None if self.d1_witness is None else self.d1_witness.to_json(),
            "d2_witness": None if self.d2_lattice_witness is None else list(self.d2_lattice_witness),
        }


def _d1(s1: StabCondition, s2: StabCondition):
    best, wit = mpmath.mpf(0), None
    for a, b in sorted(s1.universe):
        E = IndecObject(a, b)
        h1, h2 = s1.hn(E), s2.hn(E)
        vals = [
            abs(h2.phi_minus.value() - h1.phi_minus.value()),
            abs(h2.phi_plus.value() - h1.phi_plus.value()),
            abs(mpmath.log(h2.mass.value() / h1.mass.value())),
        ]
        v = max(vals)
        if v > best:
            best, wit = v, E
    return best, wit


def _sym2_max_eig(a, b, c):
    """Largest eigenvalue of [[a, b], [b, c]], exact when possible."""
    tr = a + c
    det = a * c - b * b
    disc = tr * tr - 4 * det
    try:
        disc_q = QuadraticNumber.coerce(disc)
        if disc_q.is_rational():
            return (QuadraticNumber.coerce(tr) + QuadraticNumber.sqrt_of(disc_q.a)) / 2
    except RadicalMismatch:
        pass
    tr_m, disc_m = QuadraticNumber.coerce(tr).to_mpf(), QuadraticNumber.coerce(disc).to_mpf()
    return (tr_m + mpmath.sqrt(max(disc_m, 0))) / 2


def _d2(Z1, Z2, D2: ThickSubcat):
    n = D2.n
    basis = D2.class_basis()
    if not basis:
        return mpmath.mpf(0), QuadraticNumber(0), mpmath.mpf(0), None
    dZ = [ComplexExact.coerce(x) - ComplexExact.coerce(y) for x, y in zip(Z1, Z2)]
    k = len(basis)
    # Gram matrix of the basis and its inverse (exact)
    G = [[Fraction(sum(u[i] * w[i] for i in range(n))) for w in basis] for u in basis]
    Ginv = _invert(G)
    re = [charge_on_class(dZ, u).re for u in basis]
    im = [charge_on_class(dZ, u).im for u in basis]

    def form(x, y):
        tot = QuadraticNumber(0)
        for i in range(k):
            for j in range(k):
                if Ginv[i][j]:
                    tot = tot + x[i] * y[j] * Ginv[i][j]
        return tot

    lam = _sym2_max_eig(form(re, re), form(re, im), form(im, im))
    d2 = mpmath.sqrt(max(QuadraticNumber.coerce(lam).to_mpf() if isinstance(lam, QuadraticNumber) else lam, 0))
    best, wit = None, None
    for a, b in sorted(D2.closure):
        v = IndecObject(a, b).cls(n)
        r = charge_on_class(dZ, v).abs2() / sum(x * x for x in v)
        if best is None or r > best:
            best, wit = r, v
    lat = mpmath.sqrt(best.to_mpf())
    return d2, lam, lat, wit


def _invert(M):
    k = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(M)]
    for c in range(k):
        p = next(i for i in range(c, k) if A[i][c] != 0)
        A[c], A[p] = A[p], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for i in range(k):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [row[k:] for row in A]


def relative_metric(sr1: RelStabCondition, sr2: RelStabCondition, dps: int = 40) -> MetricResult:
    """d_r = d1 + d2 with d1 over indecomposables of D1 and d2 the operator norm on D2."""
    if sr1.sub != sr2.sub:
        raise ValueError("relative conditions on different subcategories")
    with mpmath.workdps(dps):
        if sr1.sub.is_zero():
            d1, w1 = mpmath.mpf(0), None
        else:
            d1, w1 = _d1(sr1.sigma1, sr2.sigma1)
        D2 = orthogonal(sr1.sub, "left")
        d2, lam, lat, w2 = _d2(sr1.charge, sr2.charge, D2)
        return MetricResult(+d1, +d2, lam, +lat, w1, w2)


# ---------------------------------------------------------------- charts


@dataclass
class Chart:
    heart: object
    coordinates: int
    kind: str = "upper-half-planes"

    def to_json(self):
        return {"heart": None if self.heart is None else self.heart.to_json(),
                "coordinates": self.coordinates, "kind": self.kind}


def relative_charts(n: int, D1: ThickSubcat, window: int = 1, convention: str = "subcategory") -> list[Chart]:
    """Hearts indexing the chart union, each chart a copy of H^n.

    convention "subcategory": hearts of D1 itself reachable in the window.
    convention "ambient": hearts of D in the window whose intersection with D1
    is a heart of D1.
    """
    if convention not in ("subcategory", "ambient"):
        raise ValueError("convention must be 'subcategory' or 'ambient'")
    if D1.is_zero():
        return [Chart(None, n, "charges-only")]
    if convention == "subcategory":
        hearts = exchange_graph(n, window, sub=D1).hearts
    else:
        hearts = [H for H in exchange_graph(n, window).hearts if restricted_heart(H, D1) is not None]
    return [Chart(H, n) for H in hearts]
