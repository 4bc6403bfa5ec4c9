"""Gluing stability conditions across a semiorthogonal decomposition D = <D1, D2>.

Here D2 is the left orthogonal of D1, every object X sits in a triangle
Y -> X -> W with W in D1 and Y in D2 (see ``sod_project``), the glued heart is
{X : W in A1, Y in A2} and the glued charge is Z1(W) + Z2(Y).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..charge import ComplexExact
from ..quiver.category import IndecObject, hom_degrees
from ..quiver.hearts import Heart, InconsistencyError, simples_of_object_set
from ..quiver.thick import AdmissibilityError, ThickSubcat, is_left_admissible, orthogonal, sod_project
from .conditions import Phase, StabCondition


@dataclass
class Refusal:
    """A decided negative answer of a finite check, with a witness."""

    condition: str
    reason: str
    witness: dict = field(default_factory=dict)
    trace: list = field(default_factory=list)

    ok = False

    def to_json(self):
        out = {"ok": False, "condition": self.condition, "reason": self.reason, "witness": self.witness}
        if self.trace:
            out["trace"] = self.trace
        return out


@dataclass
class GlueResult:
    sigma: StabCondition
    sub: ThickSubcat
    gap: dict
    hom_amplitude: tuple | None

    ok = True

    def to_json(self):
        return {
            "ok": True,
            "glued": self.sigma.to_json(),
            "condition_2_gap": self.gap,
            "hom_amplitude": None if self.hom_amplitude is None else list(self.hom_amplitude),
            "condition_2_justification": "finite-length hearts with finitely many simples",
        }


def subcategory_of(sigma: StabCondition) -> ThickSubcat:
    return ThickSubcat(sigma.n, sigma.universe)


def hom_amplitude(objs1, objs2) -> tuple[int, int] | None:
    """(min, max) of the degrees k with Hom(E1, E2[k]) != 0, or None if all vanish."""
    ks = [k for E1 in objs1 for E2 in objs2 for k in hom_degrees(E1, E2)]
    if not ks:
        return None
    return min(ks), max(ks)


def required_shift(sigma1: StabCondition, sigma2: StabCondition) -> int:
    """Least m >= 0 such that shifting the heart of sigma2 by -2m clears the Hom amplitude.

    With lo the least degree of a non-zero Hom(A1, A2[k]) and n = -lo, this is
    the least m with 2m >= n + 1.
    """
    amp = hom_amplitude(sigma1.heart.objects, sigma2.heart.objects)
    if amp is None:
        return 0
    n = -amp[0]
    return max(0, -((-(n + 1)) // 2))


def _condition_1(sigma1, sigma2):
    for E1 in sigma1.semistables():
        for E2 in sigma2.semistables():
            for k in hom_degrees(E1, E2):
                if k <= 0:
                    return {"source": E1.to_json(), "target": E2.to_json(), "degree": k}
    return None


def _distinct_phases(items):
    """Sort (object, Phase) pairs by phase and group equal phases."""
    import functools

    items = sorted(items, key=functools.cmp_to_key(lambda x, y: x[1].compare(y[1])))
    groups = []
    for obj, p in items:
        if groups and groups[-1][0].same(p):
            groups[-1][1].append(obj)
        else:
            groups.append((p, [obj]))
    return groups


def _condition_2(sigma1, sigma2):
    """Find a in (0,1) with Hom^{<=0}(P1((a,a+1]), P2((a,a+1])) = 0.

    Only the position of a among the phases of semistable objects matters, so
    one representative per gap is tested.
    """
    items = [((1, E), Phase(0, sigma1.charge_of(E))) for E in sigma1.semistables()]
    items += [((2, E), Phase(0, sigma2.charge_of(E))) for E in sigma2.semistables()]
    groups = _distinct_phases(items)
    phases = [p for p, _ in groups]
    gaps = []
    # gap j lies strictly between phases[j-1] and phases[j] (with 0 and 1 as ends)
    for j in range(len(phases) + 1):
        if j == len(phases) and phases and phases[-1].compare_rational(1) == 0:
            continue
        gaps.append(j)
    last = None
    for j in gaps:
        above = {o for _, objs in groups[j:] for o in objs}
        P1 = [E if (1, E) in above else E.shift(1) for E in sigma1.semistables()]
        P2 = [E if (2, E) in above else E.shift(1) for E in sigma2.semistables()]
        bad = None
        for E1 in P1:
            for E2 in P2:
                for k in hom_degrees(E1, E2):
                    if k <= 0:
                        bad = {"source": E1.to_json(), "target": E2.to_json(), "degree": k}
                        break
                if bad:
                    break
            if bad:
                break
        lower = "0" if j == 0 else phases[j - 1].to_json()
        upper = "1" if j == len(phases) else phases[j].to_json()
        if bad is None:
            return {"a_between": [lower, upper]}, None
        last = dict(bad, a_between=[lower, upper])
    return None, last


def glue(sigma1: StabCondition, sigma2: StabCondition):
    """Glue sigma1 on D1 and sigma2 on the left orthogonal of D1; GlueResult or Refusal."""
    n = sigma1.n
    if sigma2.n != n:
        raise ValueError("conditions live on different quivers")
    D1 = subcategory_of(sigma1)
    D2 = orthogonal(D1, "left")
    if not is_left_admissible(D1):
        raise AdmissibilityError(f"{D1} is not left admissible")
    if sigma2.universe != D2.closure:
        raise ValueError("the second condition must live on the left orthogonal of the first subcategory")
    wit = _condition_1(sigma1, sigma2)
    if wit is not None:
        return Refusal("1", "Hom^{<=0}(P1((0,1]), P2((0,1])) != 0", wit)
    gap, wit = _condition_2(sigma1, sigma2)
    if gap is None:
        return Refusal("2", "no a in (0,1) with Hom^{<=0}(P1((a,a+1]), P2((a,a+1])) = 0", wit or {})
    H1, H2 = sigma1.heart, sigma2.heart
    los = [h.lo for h in (H1, H2) if h.simples]
    his = [h.hi for h in (H1, H2) if h.simples]
    lo, hi = min(los) - 1, max(his) + 1
    members = set()
    for t in range(lo, hi + 1):
        for m in sorted(_all(n)):
            X = IndecObject(*m, t)
            Y, W = sod_project(X, D1)
            if all(H1.contains(w) for w in W) and all(H2.contains(y) for y in Y):
                members.add(X)
    glued = Heart(n, simples_of_object_set(members))
    problems = glued.check()
    if problems or len(glued.simples) != n:
        raise InconsistencyError(f"glued heart {glued} is invalid: {problems}")
    if set(glued.objects) != members:
        raise InconsistencyError(f"glued heart {glued} does not reproduce the glued object set")
    charges = [glued_charge(S, sigma1, sigma2, D1) for S in glued.simples]
    for S, z in zip(glued.simples, charges):
        if not z.in_upper_half():
            raise InconsistencyError(f"glued charge of {S} left the upper half plane")
    amp = hom_amplitude(H1.objects, H2.objects)
    return GlueResult(StabCondition(glued, charges), D1, gap, amp)


def _all(n):
    return frozenset((a, b) for a in range(1, n + 1) for b in range(a, n + 1))


def glued_charge(X, sigma1: StabCondition, sigma2: StabCondition, D1: ThickSubcat) -> ComplexExact:
    """Z1(i1^* X) + Z2(i2^! X)."""
    Y, W = sod_project(X, D1)
    z = ComplexExact(0, 0)
    if not W.is_zero():
        z = z + sigma1.charge_of(W)
    if not Y.is_zero():
        z = z + sigma2.charge_of(Y)
    return z


def restriction_witness(sigma: StabCondition, sigma1: StabCondition):
    """First sigma1-semistable object that is not sigma-semistable of the same phase, else None."""
    for E in sigma1.semistables():
        r = sigma.hn(E)
        p1 = Phase(0, sigma1.charge_of(E))
        if not r.is_semistable() or not r.phi_plus.same(p1):
            return E
    return None


def charge_law_witness(sigma: StabCondition, sigma1: StabCondition, sigma2: StabCondition, lo: int = -1, hi: int = 2):
    """First indecomposable where Z differs from Z1(i1^*) + Z2(i2^!), else None."""
    D1 = subcategory_of(sigma1)
    for t in range(lo, hi + 1):
        for m in sorted(_all(sigma.n)):
            X = IndecObject(*m, t)
            if sigma.charge_of(X) != glued_charge(X, sigma1, sigma2, D1):
                return X
    return None

