"""Bounded complexes of projective A_n-modules over GF(p).

This is an explicit model of D^b(A_n) = K^b(proj A_n) used to realise actual
morphisms and their cones, e.g. to decide whether a map between heart objects
is a monomorphism (its cone lies in the heart).  Projectives are P_j = M[j,n];
Hom(P_i, P_j) is one-dimensional iff j <= i and composition multiplies scalars.

Indecomposable summands of a complex are read off from its cohomology
representations via the interval (barcode) rank formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gf
from .category import DGObject, IndecObject, hom_dim


@dataclass(frozen=True)
class Complex:
    n: int
    terms: tuple  # tuple of (degree, tuple of vertices)
    diffs: tuple  # tuple of (degree, matrix as tuple of row tuples), d^i : C^i -> C^{i+1}

    def term(self, i: int) -> tuple:
        return dict(self.terms).get(i, ())

    def diff(self, i: int) -> list[list[int]]:
        m = dict(self.diffs).get(i)
        rows, cols = len(self.term(i + 1)), len(self.term(i))
        if m is None:
            return gf.zeros(rows, cols)
        return [list(r) for r in m]

    def degrees(self) -> list[int]:
        return sorted(d for d, v in self.terms if v)


def make_complex(n: int, terms: dict, diffs: dict) -> Complex:
    t = tuple(sorted((d, tuple(v)) for d, v in terms.items() if v))
    dd = []
    for d, m in sorted(diffs.items()):
        if terms.get(d) and terms.get(d + 1):
            dd.append((d, tuple(tuple(x % gf.P for x in row) for row in m)))
    return Complex(n, t, tuple(dd))


@lru_cache(maxsize=None)
def complex_of(X: IndecObject, n: int) -> Complex:
    """Projective resolution of M[a,b][t] placed in degrees -t-1, -t."""
    a, b, t = X.a, X.b, X.t
    if b == n:
        return make_complex(n, {-t: [a]}, {})
    return make_complex(n, {-t - 1: [b + 1], -t: [a]}, {-t - 1: [[1]]})


def direct_sum(cs: list[Complex], n: int) -> tuple[Complex, dict]:
    """Direct sum and, per degree, the offsets of each summand's block."""
    degs = sorted({d for c in cs for d in c.degrees()})
    terms, offsets = {}, {}
    for d in degs:
        verts, offs = [], []
        for c in cs:
            offs.append(len(verts))
            verts.extend(c.term(d))
        terms[d] = verts
        offsets[d] = offs
    diffs = {}
    for d in degs:
        if d + 1 not in terms:
            continue
        m = gf.zeros(len(terms[d + 1]), len(terms[d]))
        for j, c in enumerate(cs):
            cd = c.diff(d)
            ro, co = offsets[d + 1][j], offsets[d][j]
            for r, row in enumerate(cd):
                for q, x in enumerate(row):
                    m[ro + r][co + q] = x
        diffs[d] = m
    return make_complex(n, terms, diffs), offsets


def complex_of_object(X: DGObject, n: int) -> Complex:
    return direct_sum([complex_of(s, n) for s in X], n)[0]


# ---------------------------------------------------------------- chain maps


@dataclass(frozen=True)
class ChainMap:
    src: Complex
    tgt: Complex
    comps: tuple  # (degree, matrix) with matrix len(tgt^d) x len(src^d)

    def comp(self, d: int) -> list[list[int]]:
        m = dict(self.comps).get(d)
        if m is None:
            return gf.zeros(len(self.tgt.term(d)), len(self.src.term(d)))
        return [list(r) for r in m]


def _variables(src: Complex, tgt: Complex, shift: int = 0):
    """Allowed entries of maps src^d -> tgt^{d+shift}: (deg, row, col)."""
    out = []
    for d in sorted(set(src.degrees())):
        tv = tgt.term(d + shift)
        sv = src.term(d)
        for r, j in enumerate(tv):
            for c, i in enumerate(sv):
                if j <= i:
                    out.append((d, r, c))
    return out


def _maps_from_vector(src: Complex, tgt: Complex, variables, vec, shift: int = 0) -> dict:
    mats = {}
    for (d, r, c), x in zip(variables, vec):
        if d not in mats:
            mats[d] = gf.zeros(len(tgt.term(d + shift)), len(src.term(d)))
        mats[d][r][c] = x % gf.P
    return mats


def hom_space(src: Complex, tgt: Complex) -> list[ChainMap]:
    """Representatives of a basis of Hom_K(src, tgt) (chain maps mod homotopy)."""
    fv = _variables(src, tgt)
    index = {v: k for k, v in enumerate(fv)}
    nf = len(fv)
    # chain-map equations: d_tgt f^d - f^{d+1} d_src = 0
    eqs = []
    degs = sorted(set(src.degrees()) | {d - 1 for d in src.degrees()})
    for d in degs:
        rows_t = tgt.term(d + 1)
        cols_s = src.term(d)
        if not rows_t or not cols_s:
            continue
        dt = tgt.diff(d)
        ds = src.diff(d)
        for r in range(len(rows_t)):
            for c in range(len(cols_s)):
                eq = [0] * nf
                # (d_tgt f^d)[r][c] = sum_k dt[r][k] f^d[k][c]
                for k in range(len(tgt.term(d))):
                    if dt[r][k] and (d, k, c) in index:
                        eq[index[(d, k, c)]] += dt[r][k]
                # (f^{d+1} d_src)[r][c] = sum_k f^{d+1}[r][k] ds[k][c]
                for k in range(len(src.term(d + 1))):
                    if ds[k][c] and (d + 1, r, k) in index:
                        eq[index[(d + 1, r, k)]] -= ds[k][c]
                if any(x % gf.P for x in eq):
                    eqs.append(eq)
    Z = gf.nullspace(eqs, nf) if nf else []
    # homotopies h^d : src^d -> tgt^{d-1}; f = d_tgt h + h d_src
    hv = _variables(src, tgt, shift=-1)
    B = []
    for (d, r, c) in hv:
        # unit homotopy e_{r,c} in degree d contributes to f^{d-1} and f^d
        vec = [0] * nf
        # f^d += d_tgt^{d-1} h^d : entries (row x, col c) += dt[x][r]
        dt = tgt.diff(d - 1)
        for x in range(len(tgt.term(d))):
            if dt[x][r] and (d, x, c) in index:
                vec[index[(d, x, c)]] += dt[x][r]
        # f^{d-1} += h^d d_src^{d-1} : entries (r, y) += ds[c][y]
        ds = src.diff(d - 1)
        for y in range(len(src.term(d - 1))):
            if ds[c][y] and (d - 1, r, y) in index:
                vec[index[(d - 1, r, y)]] += ds[c][y]
        B.append(vec)
    base_rank = gf.rank(B, nf) if B and nf else 0
    reps = []
    current = [list(v) for v in B]
    cur_rank = base_rank
    for z in Z:
        trial = current + [z]
        rk = gf.rank(trial, nf)
        if rk > cur_rank:
            current = trial
            cur_rank = rk
            mats = _maps_from_vector(src, tgt, fv, z)
            reps.append(ChainMap(src, tgt, tuple((d, tuple(tuple(r) for r in m)) for d, m in sorted(mats.items()))))
    return reps


def is_null_homotopic(f: ChainMap) -> bool:
    src, tgt = f.src, f.tgt
    fv = _variables(src, tgt)
    nf = len(fv)
    if nf == 0:
        return True
    vec = [f.comp(d)[r][c] for (d, r, c) in fv]
    if not any(vec):
        return True
    hv = _variables(src, tgt, shift=-1)
    B = []
    index = {v: k for k, v in enumerate(fv)}
    for (d, r, c) in hv:
        v = [0] * nf
        dt = tgt.diff(d - 1)
        for x in range(len(tgt.term(d))):
            if dt[x][r] and (d, x, c) in index:
                v[index[(d, x, c)]] += dt[x][r]
        ds = src.diff(d - 1)
        for y in range(len(src.term(d - 1))):
            if ds[c][y] and (d - 1, r, y) in index:
                v[index[(d - 1, r, y)]] += ds[c][y]
        B.append(v)
    return gf.rank(B + [vec], nf) == gf.rank(B, nf) if B else False


@lru_cache(maxsize=None)
def basic_morphism(X: IndecObject, Y: IndecObject, n: int) -> ChainMap:
    """A chain map representing the non-zero morphism X -> Y (Hom is one-dimensional)."""
    if hom_dim(X, Y, 0) != 1:
        raise ValueError(f"Hom({X}, {Y}) is not one-dimensional")
    reps = hom_space(complex_of(X, n), complex_of(Y, n))
    if len(reps) != 1:
        raise AssertionError(f"complex model disagrees with interval rules for {X} -> {Y}: {len(reps)}")
    return reps[0]


def sum_morphism(sources: list[IndecObject], targets: list[IndecObject], coeffs: dict, n: int) -> ChainMap:
    """Morphism between direct sums assembled from basic morphisms.

    ``coeffs[(i, j)]`` scales the basic morphism sources[i] -> targets[j].
    """
    src, soff = direct_sum([complex_of(s, n) for s in sources], n)
    tgt, toff = direct_sum([complex_of(t, n) for t in targets], n)
    mats = {}
    for d in src.degrees():
        mats[d] = gf.zeros(len(tgt.term(d)), len(src.term(d)))
    for (i, j), c in coeffs.items():
        if not c % gf.P:
            continue
        f = basic_morphism(sources[i], targets[j], n)
        for d, m in f.comps:
            if d not in mats or d not in toff:
                continue
            ro, co = toff[d][j], soff[d][i]
            for r, row in enumerate(m):
                for q, x in enumerate(row):
                    mats[d][ro + r][co + q] = (mats[d][ro + r][co + q] + c * x) % gf.P
    return ChainMap(src, tgt, tuple((d, tuple(tuple(r) for r in m)) for d, m in sorted(mats.items())))


def mapping_cone(f: ChainMap) -> Complex:
    """Cone^i = src^{i+1} + tgt^i with d = [[-d_src, 0], [f, d_tgt]]."""
    src, tgt = f.src, f.tgt
    degs = sorted({d - 1 for d in src.degrees()} | set(tgt.degrees()))
    terms = {d: list(src.term(d + 1)) + list(tgt.term(d)) for d in degs}
    diffs = {}
    for d in degs:
        if d + 1 not in terms:
            continue
        ns1, nt1 = len(src.term(d + 1)), len(tgt.term(d))
        ns2, nt2 = len(src.term(d + 2)), len(tgt.term(d + 1))
        m = gf.zeros(ns2 + nt2, ns1 + nt1)
        ds = src.diff(d + 1)
        for r in range(ns2):
            for c in range(ns1):
                m[r][c] = (-ds[r][c]) % gf.P
        fm = f.comp(d + 1)
        for r in range(nt2):
            for c in range(ns1):
                m[ns2 + r][c] = fm[r][c]
        dt = tgt.diff(d)
        for r in range(nt2):
            for c in range(nt1):
                m[ns2 + r][ns1 + c] = dt[r][c]
        diffs[d] = m
    return make_complex(src.n, terms, diffs)


# ---------------------------------------------------------------- decomposition


def _at_vertex(C: Complex, i: int, v: int) -> list[int]:
    return [k for k, j in enumerate(C.term(i)) if j <= v]


def _cycles(C: Complex, i: int, v: int) -> list[list[int]]:
    """Basis of ker d^i at vertex v, in coordinates of C^i (zero off-support)."""
    cols = _at_vertex(C, i, v)
    rows = _at_vertex(C, i + 1, v)
    d = C.diff(i)
    sub = [[d[r][c] for c in cols] for r in rows]
    ker = gf.nullspace(sub, len(cols)) if rows else [[1 if q == k else 0 for q in range(len(cols))] for k in range(len(cols))]
    full = []
    for vec in ker:
        w = [0] * len(C.term(i))
        for c, x in zip(cols, vec):
            w[c] = x
        full.append(w)
    return full


def _boundaries(C: Complex, i: int, v: int) -> list[list[int]]:
    """Spanning set of im d^{i-1} at vertex v, in coordinates of C^i."""
    cols = _at_vertex(C, i - 1, v)
    rows = _at_vertex(C, i, v)
    d = C.diff(i - 1)
    out = []
    for c in cols:
        w = [0] * len(C.term(i))
        for r in rows:
            w[r] = d[r][c]
        if any(w):
            out.append(w)
    return out


def _rank_between(C: Complex, i: int, a: int, b: int) -> int:
    """Rank of the structure map H^i(C)_a -> H^i(C)_b for a <= b."""
    width = len(C.term(i))
    if width == 0:
        return 0
    Z = _cycles(C, i, a)
    if not Z:
        return 0
    B = _boundaries(C, i, b)
    rb = gf.rank(B, width) if B else 0
    return gf.rank(B + Z, width) - rb


def decompose(C: Complex) -> DGObject:
    """Indecomposable summands of C in D^b(A_n)."""
    n = C.n
    out = []
    degs = C.degrees()
    if not degs:
        return DGObject()
    for i in range(min(degs), max(degs) + 1):
        cache = {}

        def r(a, b):
            if a < 1 or b > n:
                return 0
            if (a, b) not in cache:
                cache[(a, b)] = _rank_between(C, i, a, b)
            return cache[(a, b)]

        for a in range(1, n + 1):
            for b in range(a, n + 1):
                mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
                if mult < 0:
                    raise AssertionError("negative barcode multiplicity")
                out.extend([IndecObject(a, b, -i)] * mult)
    return DGObject(out)


def cone_of_sum_map(sources: list[IndecObject], targets: list[IndecObject], coeffs: dict, n: int) -> DGObject:
    return decompose(mapping_cone(sum_morphism(sources, targets, coeffs, n)))
