"""Thick subcategories, orthogonals and semiorthogonal projections in D^b(A_n).

A thick subcategory is recorded by the set of intervals (a, b) whose shifts
it contains; it is generated by its relative simples, which form the
canonical generator list.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .category import DGObject, IndecObject, cone, hom_dim, modules
from .complexes import cone_of_sum_map


class AdmissibilityError(ValueError):
    pass


class ProjectionError(RuntimeError):
    pass


def _cone_modules(x: tuple[int, int], y: tuple[int, int]) -> list[tuple[int, int]]:
    """Intervals occurring in cones of non-zero maps between shifts of x and y."""
    X = IndecObject(*x)
    out = []
    for Y in (IndecObject(*y, 0), IndecObject(*y, 1)):
        if hom_dim(X, Y, 0):
            out.extend(s.module for s in cone(X, Y))
    return out


def thick_closure(n: int, gens) -> frozenset:
    """Smallest set of intervals containing gens and closed under cones and summands."""
    closed = set(tuple(g) for g in gens)
    frontier = list(closed)
    while frontier:
        new = []
        current = list(closed)
        for x in frontier:
            for y in current:
                for pair in ((x, y), (y, x)):
                    for m in _cone_modules(*pair):
                        if m not in closed:
                            closed.add(m)
                            new.append(m)
        frontier = new
    return frozenset(closed)


def _relative_simples(n: int, closure: frozenset) -> tuple:
    """Simple objects of the wide subcategory of modules in the closure."""
    objs = sorted(closure)
    out = []
    for e in objs:
        E = IndecObject(*e)
        simple = True
        for y in objs:
            if y == e:
                continue
            Y = IndecObject(*y)
            # a monomorphism Y -> E has no kernel term (shift 1) in its cone
            if hom_dim(Y, E, 0) and all(s.t == 0 and s.module in closure for s in cone(Y, E)):
                simple = False
                break
        if simple:
            out.append(e)
    return tuple(sorted(out))


@dataclass(frozen=True)
class ThickSubcat:
    n: int
    closure: frozenset

    @classmethod
    def generated_by(cls, n: int, gens) -> "ThickSubcat":
        gens = [tuple(g[:2]) if not isinstance(g, IndecObject) else g.module for g in gens]
        return cls(n, thick_closure(n, gens))

    @classmethod
    def full(cls, n: int) -> "ThickSubcat":
        return cls(n, frozenset(modules(n)))

    @classmethod
    def zero(cls, n: int) -> "ThickSubcat":
        return cls(n, frozenset())

    @property
    def generators(self) -> tuple:
        return _relative_simples(self.n, self.closure)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def contains(self, X) -> bool:
        if isinstance(X, IndecObject):
            return X.module in self.closure
        return all(s.module in self.closure for s in DGObject.coerce(X))

    def is_full(self) -> bool:
        return len(self.closure) == self.n * (self.n + 1) // 2

    def is_zero(self) -> bool:
        return not self.closure

    def indecomposables(self, lo: int, hi: int) -> list[IndecObject]:
        return [IndecObject(a, b, t) for t in range(lo, hi + 1) for a, b in sorted(self.closure)]

    def class_basis(self) -> list[tuple[int, ...]]:
        return [IndecObject(*g).dimvec(self.n) for g in self.generators]

    def to_json(self):
        return [list(g) for g in self.generators]

    def sort_key(self):
        return (len(self.closure), sorted(self.closure))

    def __repr__(self):
        return f"Thick(A_{self.n}; {list(self.generators)})"


def thick_subcategories(n: int) -> list[ThickSubcat]:
    """All thick subcategories, by closure of subsets reached breadth-first."""
    if n > 6:
        raise ValueError("desk-scale enumeration supports n <= 6")
    mods = modules(n)
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        new = []
        for T in frontier:
            for m in mods:
                if m in T:
                    continue
                C = thick_closure(n, set(T) | {m})
                if C not in seen:
                    seen.add(C)
                    new.append(C)
        frontier = new
    return sorted((ThickSubcat(n, c) for c in seen), key=ThickSubcat.sort_key)


def _hom_any_degree(x: tuple[int, int], y: tuple[int, int]) -> bool:
    X, Y = IndecObject(*x), IndecObject(*y)
    return bool(hom_dim(X, Y, 0) or hom_dim(X, Y, 1))


def orthogonal(T: ThickSubcat, side: str) -> ThickSubcat:
    """Left orthogonal {E : Hom(E, T[k]) = 0 for all k} or right orthogonal {E : Hom(T[k], E) = 0}."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    out = []
    for m in modules(T.n):
        if side == "left":
            ok = not any(_hom_any_degree(m, t) for t in T.closure)
        else:
            ok = not any(_hom_any_degree(t, m) for t in T.closure)
        if ok:
            out.append(m)
    return ThickSubcat(T.n, frozenset(out))


def is_left_admissible(D1: ThickSubcat) -> bool:
    """<D1, ^perp D1> generates D and Hom(^perp D1, D1[k]) = 0 for all k."""
    D2 = orthogonal(D1, "left")
    if any(_hom_any_degree(y, x) for y in D2.closure for x in D1.closure):
        return False
    return thick_closure(D1.n, set(D1.closure) | set(D2.closure)) == frozenset(modules(D1.n))


# ---------------------------------------------------------------- projection


def _lattice_split(v: tuple[int, ...], D1: ThickSubcat, D2: ThickSubcat):
    """Write v = v1 + v2 with v_i in the span of the classes of D_i (exact)."""
    from fractions import Fraction

    basis = D1.class_basis() + D2.class_basis()
    n = D1.n
    # solve sum c_j basis_j = v by Gaussian elimination over Q
    m = len(basis)
    rows = [[Fraction(basis[j][i]) for j in range(m)] + [Fraction(v[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][m] != 0 for i in range(r, n)) or r != m:
        raise AdmissibilityError("classes of D1 and its orthogonal do not form a basis")
    coeffs = [Fraction(0)] * m
    for i, c in enumerate(piv_cols):
        coeffs[c] = rows[i][m]
    k1 = len(D1.class_basis())
    v1 = [sum(coeffs[j] * basis[j][i] for j in range(k1)) for i in range(n)]
    v2 = [v[i] - v1[i] for i in range(n)]
    if any(x.denominator != 1 for x in v1):
        raise AdmissibilityError("non-integral lattice split")
    return tuple(int(x) for x in v1), tuple(int(x) for x in v2)


def _multisets_with_class(cands: list[IndecObject], target: tuple[int, ...], n: int, max_size: int):
    for size in range(0, max_size + 1):
        for combo in combinations_with_replacement(range(len(cands)), size):
            tot = [0] * n
            for j in combo:
                for i, x in enumerate(cands[j].cls(n)):
                    tot[i] += x
            if tuple(tot) == target:
                yield [cands[j] for j in combo]


@lru_cache(maxsize=None)
def _project_indec(X: IndecObject, D1: ThickSubcat) -> tuple[DGObject, DGObject]:
    n = D1.n
    D2 = orthogonal(D1, "left")
    if D1.contains(X):
        return DGObject(), DGObject.of(X)
    if D2.contains(X):
        return DGObject.of(X), DGObject()
    w_class, _ = _lattice_split(X.cls(n), D1, D2)
    window = range(X.t - 2, X.t + 3)
    # a summand of W receiving no map from X would split off into the cone
    cands = [IndecObject(a, b, t) for t in window for a, b in sorted(D1.closure)]
    cands = [w for w in cands if hom_dim(X, w, 0)]
    found = []
    for W in _multisets_with_class(cands, w_class, n, n):
        coeffs = {(0, j): 1 for j in range(len(W))}
        c = cone_of_sum_map([X], W, coeffs, n)
        Y = c.shift(-1)
        if all(D2.contains(s) for s in Y):
            found.append((Y, DGObject(W)))
    uniq = set(found)
    if not uniq:
        raise ProjectionError(f"no projection triangle for {X} within shifts {X.t - 2}..{X.t + 2}")
    if len(uniq) > 1:
        raise ProjectionError(f"projection of {X} is not unique: {sorted(map(repr, uniq))}")
    return found[0]


def sod_project(X, D1: ThickSubcat) -> tuple[DGObject, DGObject]:
    """The triangle Y -> X -> W with W in D1 and Y in the left orthogonal of D1."""
    if not is_left_admissible(D1):
        raise AdmissibilityError(f"{D1} is not left admissible")
    Ys, Ws = [], []
    for s in DGObject.coerce(X):
        y, w = _project_indec(s, D1)
        Ys.extend(y)
        Ws.extend(w)
    return DGObject(Ys), DGObject(Ws)


def parse_thick(text: str, n: int) -> ThickSubcat:
    """Parse generators "a,b;c,d" (empty string for the zero subcategory)."""
    text = text.strip()
    if text in ("", "0", "zero"):
        return ThickSubcat.zero(n)
    if text == "full":
        return ThickSubcat.full(n)
    gens = []
    for part in text.split(";"):
        a, b = (int(x) for x in part.split(",")[:2])
        IndecObject(a, b)
        if b > n:
            raise ValueError(f"interval [{a},{b}] does not live on A_{n}")
        gens.append((a, b))
    return ThickSubcat.generated_by(n, gens)
