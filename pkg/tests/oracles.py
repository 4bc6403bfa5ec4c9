"""Independent reference computations used to check the fast code paths.

Nothing here reuses the interval combinatorics of the package:
- intersection numbers come from the toric fan of H_r,
- Hom and Ext^1 come from explicit matrix representations of A_n,
- thick subcategories come from noncrossing partitions,
- intermediate hearts come from brute-force torsion classes,
- HN filtrations come from the convex hull of subobject charges.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy

# ---------------------------------------------------------------- toric surfaces

# rays of the fan of H_r, in the cyclic order D1, D2, D3, D4
def hirzebruch_rays(r: int):
    return [(1, 0), (0, 1), (-1, r), (0, -1)]


def fan_intersection_matrix(r: int):
    """4x4 intersection numbers of the torus-invariant divisors from the fan.

    Adjacent rays meet once; D_i^2 = -a_i where u_{i-1} + u_{i+1} = a_i u_i.
    """
    u = hirzebruch_rays(r)
    M = [[0] * 4 for _ in range(4)]
    for i in range(4):
        M[i][(i + 1) % 4] = M[(i + 1) % 4][i] = 1
        s = (u[i - 1][0] + u[(i + 1) % 4][0], u[i - 1][1] + u[(i + 1) % 4][1])
        ui = u[i]
        a = s[0] // ui[0] if ui[0] else s[1] // ui[1]
        assert (a * ui[0], a * ui[1]) == s
        M[i][i] = -a
    return M


def fan_relations(r: int):
    """Linear relations sum_i <m, u_i> D_i = 0 for m = e1, e2."""
    u = hirzebruch_rays(r)
    return [[ray[j] for ray in u] for j in range(2)]


def fan_intersect(x4, y4, r: int):
    M = fan_intersection_matrix(r)
    return sum(x4[i] * M[i][j] * y4[j] for i in range(4) for j in range(4))


def closed_forms_by_sympy():
    """Re-derive the D2-margins of both tests divided by alpha, symbolically.

    Uses only the fan intersection matrix: omega = alpha (D1 + s D4),
    L = O(k D1 + l D2), C = D2, B = 0.
    """
    k, l, r, s, a = sympy.symbols("k l r s alpha", real=True)
    # symbolic intersection matrix, checked against the fan for small r below
    M = sympy.Matrix([[0, 1, 0, 1], [1, -r, 1, 0], [0, 1, 0, 1], [1, 0, 1, r]])
    for rr in range(5):
        assert M.subs(r, rr).tolist() == fan_intersection_matrix(rr)

    def dot(x, y):
        return (sympy.Matrix([x]) * M * sympy.Matrix(y))[0]

    omega = [a, 0, 0, a * s]
    L = [k, l, 0, 0]
    C = [0, 1, 0, 0]
    ch2 = dot(L, L) / 2
    w2 = dot(omega, omega)
    zx_re, zx_im = w2 / 2 - ch2, dot(omega, L)
    zc_re, zc_im = -dot(C, L), dot(C, omega)
    dhym = sympy.expand((zc_im * zx_re - zc_re * zx_im) / a)
    stab = sympy.expand(((dot(C, L) - dot(C, C) / 2) * dot(omega, L) - (ch2 - w2 / 2) * dot(C, omega)) / a)
    return (k, l, r, s, a), dhym, stab


# ---------------------------------------------------------------- exact linear algebra


def rref(rows, ncols: int):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    A = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    rk = 0
    for c in range(ncols):
        p = next((i for i in range(rk, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[rk], A[p] = A[p], A[rk]
        inv = 1 / A[rk][c]
        A[rk] = [x * inv for x in A[rk]]
        for i in range(len(A)):
            if i != rk and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[rk])]
        pivots.append(c)
        rk += 1
    return A[:rk], pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1]) if rows else 0


def nullspace(rows, ncols: int):
    R, piv = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(R, piv):
            v[c] = -row[f]
        basis.append(v)
    return basis


def matmul(A, B):
    return [[sum(A[i][t] * B[t][j] for t in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


# ---------------------------------------------------------------- representations of A_n


class Rep:
    """A representation of 1 -> 2 -> ... -> n: dims[i] and maps[i]: V_i -> V_{i+1}."""

    def __init__(self, dims, maps):
        self.dims = list(dims)
        self.maps = [[list(row) for row in m] for m in maps]
        self.n = len(dims)

    @classmethod
    def interval(cls, a: int, b: int, n: int) -> "Rep":
        dims = [1 if a <= i <= b else 0 for i in range(1, n + 1)]
        maps = []
        for i in range(n - 1):
            maps.append([[1] * dims[i]] * dims[i + 1] if dims[i] and dims[i + 1] else [[0] * dims[i] for _ in range(dims[i + 1])])
        return cls(dims, maps)

    def path_map(self, i: int, j: int):
        """Composite V_i -> V_j (0-based, i <= j), assuming all V_t non-zero on the way."""
        M = [[Fraction(int(p == q)) for q in range(self.dims[i])] for p in range(self.dims[i])]
        for t in range(i, j):
            M = matmul(self.maps[t], M)
        return M

    def path_rank(self, i: int, j: int, sub=None) -> int:
        """Rank of V_i -> V_j, restricted to the column space of ``sub`` when given."""
        if i < 0 or j >= self.n or any(not self.dims[t] for t in range(i, j + 1)):
            return 0
        M = self.path_map(i, j)
        if sub is not None:
            if not sub or not sub[0]:
                return 0
            M = matmul(M, sub)
        return rank(M, len(M[0]))

    def interval_multiplicities(self):
        """Multiplicity of M[a,b] from ranks of path maps."""
        n = self.n

        def rk(i, j):
            return self.path_rank(i, j)

        out = {}
        for a in range(n):
            for b in range(a, n):
                m = rk(a, b) - rk(a - 1, b) - rk(a, b + 1) + rk(a - 1, b + 1)
                if m:
                    out[(a + 1, b + 1)] = m
        return out


def _hom_constraints(M: Rep, N: Rep):
    """Linear map delta: sum_i Hom(M_i, N_i) -> sum_arrows Hom(M_i, N_{i+1})."""
    offs, k = [], 0
    for i in range(M.n):
        offs.append(k)
        k += N.dims[i] * M.dims[i]
    rows = []
    for i in range(M.n - 1):
        # (f_{i+1} A_i - B_i f_i)[p][q] for p in N_{i+1}, q in M_i
        for p in range(N.dims[i + 1]):
            for q in range(M.dims[i]):
                row = [0] * k
                for t in range(M.dims[i + 1]):
                    row[offs[i + 1] + p * M.dims[i + 1] + t] += M.maps[i][t][q]
                for t in range(N.dims[i]):
                    row[offs[i] + t * M.dims[i] + q] -= N.maps[i][p][t]
                rows.append(row)
    return rows, k


def rep_hom_ext(M: Rep, N: Rep) -> tuple[int, int]:
    """(dim Hom(M, N), dim Ext^1(M, N)) from the standard two-term complex."""
    rows, k = _hom_constraints(M, N)
    target = sum(M.dims[i] * N.dims[i + 1] for i in range(M.n - 1))
    rk = rank(rows, k) if rows else 0
    return k - rk, target - rk


def oracle_hom_dim(X, Y, degree: int, n: int) -> int:
    """dim Hom(X, Y[degree]) for shifted interval modules, via matrices."""
    e = Y.t + degree - X.t
    if e not in (0, 1):
        return 0
    h, x = rep_hom_ext(Rep.interval(X.a, X.b, n), Rep.interval(Y.a, Y.b, n))
    return h if e == 0 else x


def generic_extension(M: Rep, N: Rep, rng: random.Random) -> Rep:
    """Middle term of 0 -> N -> E -> M -> 0 with a random cocycle."""
    dims = [N.dims[i] + M.dims[i] for i in range(M.n)]
    maps = []
    for i in range(M.n - 1):
        rows = []
        for p in range(N.dims[i + 1]):
            rows.append(list(N.maps[i][p]) + [rng.randrange(1, 50) for _ in range(M.dims[i])])
        for p in range(M.dims[i + 1]):
            rows.append([0] * N.dims[i] + list(M.maps[i][p]))
        maps.append(rows)
    return Rep(dims, maps)


def generic_hom(M: Rep, N: Rep, rng: random.Random):
    """A random element of Hom(M, N) as per-vertex matrices, or None if Hom = 0."""
    rows, k = _hom_constraints(M, N)
    basis = nullspace(rows, k) if rows else [[Fraction(int(i == j)) for i in range(k)] for j in range(k)]
    if not basis:
        return None
    v = [sum(rng.randrange(1, 50) * b[i] for b in basis) for i in range(k)]
    maps, off = [], 0
    for i in range(M.n):
        maps.append([[v[off + p * M.dims[i] + q] for q in range(M.dims[i])] for p in range(N.dims[i])])
        off += N.dims[i] * M.dims[i]
    return maps


def image_intervals(M: Rep, N: Rep, rng: random.Random):
    """Interval multiplicities of the image of a generic map M -> N."""
    f = generic_hom(M, N, rng)
    if f is None:
        return {}
    n = N.n

    def rk(i, j):
        if i < 0 or j >= n:
            return 0
        return N.path_rank(i, j, sub=f[i])

    out = {}
    for a in range(n):
        for b in range(a, n):
            m = rk(a, b) - rk(a - 1, b) - rk(a, b + 1) + rk(a - 1, b + 1)
            if m:
                out[(a + 1, b + 1)] = m
    return out


# ---------------------------------------------------------------- thick subcategories


def noncrossing_partitions(m: int):
    """All noncrossing set partitions of {1..m}."""
    def partitions(elems):
        if not elems:
            yield []
            return
        first, rest = elems[0], elems[1:]
        for p in partitions(rest):
            for i in range(len(p)):
                yield p[:i] + [[first] + p[i]] + p[i + 1:]
            yield [[first]] + p

    out = []
    for p in partitions(list(range(1, m + 1))):
        ok = True
        for B1, B2 in itertools.permutations(p, 2):
            for x, y in itertools.combinations(sorted(B1), 2):
                for u, v in itertools.combinations(sorted(B2), 2):
                    if x < u < y < v:
                        ok = False
        if ok:
            out.append(p)
    return out


def thick_subcategories_oracle(n: int):
    """Module sets {M[a,b] : a and b+1 in the same block} over noncrossing partitions of n+1 points."""
    out = set()
    for p in noncrossing_partitions(n + 1):
        block = {x: i for i, B in enumerate(p) for x in B}
        out.add(frozenset((a, b) for a in range(1, n + 1) for b in range(a, n + 1) if block[a] == block[b + 1]))
    return out


# ---------------------------------------------------------------- torsion classes


def torsion_classes_oracle(n: int):
    """Torsion classes of mod A_n as sets of intervals, by brute force.

    Closure under quotients uses images of the matrix maps; closure under
    extensions uses the interval decomposition of generic extensions.
    """
    ints = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    reps = {x: Rep.interval(*x, n) for x in ints}
    rng = random.Random(7)
    quotients = {}
    for x in ints:
        qs = set()
        for y in ints:
            qs.update(image_intervals(reps[x], reps[y], rng))
        quotients[x] = qs
    middles = {}
    for x in ints:
        for y in ints:
            if rep_hom_ext(reps[x], reps[y])[1]:
                E = generic_extension(reps[x], reps[y], rng)
                middles[(x, y)] = set(E.interval_multiplicities())
    out = []
    for mask in range(1 << len(ints)):
        T = {ints[i] for i in range(len(ints)) if mask >> i & 1}
        if any(not quotients[x] <= T for x in T):
            continue
        if any(not middles[(x, y)] <= T for x in T for y in T if (x, y) in middles):
            continue
        out.append(frozenset(T))
    return out


def heart_of_torsion_class(T, n: int):
    """Objects of the tilted heart F[1] + T as (a, b, t) triples."""
    from relstab.quiver.category import IndecObject

    ints = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    reps = {x: Rep.interval(*x, n) for x in ints}
    F = [y for y in ints if all(rep_hom_ext(reps[x], reps[y])[0] == 0 for x in T)]
    return frozenset([IndecObject(a, b, 0) for a, b in T] + [IndecObject(a, b, 1) for a, b in F])


# ---------------------------------------------------------------- HN filtrations


def _subobject_charges(E, sigma, rng, trials=2):
    """Charges of all subobjects of a heart object, found by random-coefficient cones."""
    from relstab.quiver.category import DGObject, hom_dim
    from relstab.quiver.complexes import cone_of_sum_map
    from relstab.quiver.gf import P

    H = sigma.heart
    E = list(E)
    target = [0] * len(H.simples)
    for e in E:
        for i, x in enumerate(H.coords(e.cls(H.n))):
            target[i] += x
    objs = list(H.objects)
    coords = [H.coords(Y.cls(H.n)) for Y in objs]
    charges = set()
    E_set = sorted(E)

    def rec(start, chosen, tot):
        if chosen:
            A = sorted(chosen)
            if A == E_set:
                charges.add(sigma.charge_of(DGObject(A)))
            else:
                pairs = [(i, j) for i in range(len(A)) for j in range(len(E)) if hom_dim(A[i], E[j], 0)]
                for _ in range(trials if pairs else 0):
                    coeffs = {p: rng.randrange(1, P) for p in pairs}
                    Q = cone_of_sum_map(A, E, coeffs, H.n)
                    if all(H.contains(s) for s in Q):
                        charges.add(sigma.charge_of(DGObject(A)))
                        break
        for j in range(start, len(objs)):
            new = [x + y for x, y in zip(tot, coords[j])]
            if all(x <= y for x, y in zip(new, target)):
                chosen.append(objs[j])
                rec(j, chosen, new)
                chosen.pop()

    rec(0, [], [0] * len(target))
    return charges


def hn_polygon(points, total):
    """Vertices of the HN polygon from 0 to total over the given charge points.

    From each vertex the next one maximizes the phase of the step, then its
    length; this walks the upper convex hull.
    """
    from relstab.charge import ComplexExact
    from relstab.relative.certified import cross_sign

    p = ComplexExact(0, 0)
    steps = []
    while p != total:
        best = None
        for q in points:
            d = q - p
            if d.is_zero() or not d.in_upper_half():
                continue
            if best is None:
                best = (q, d)
                continue
            c = cross_sign(d, best[1])
            if c > 0 or (c == 0 and d.abs2() > best[1].abs2()):
                best = (q, d)
        if best is None:
            raise AssertionError("polygon walk got stuck")
        steps.append(best[1])
        p = best[0]
    return steps


def hn_oracle(X, sigma, seed=0):
    """HN factor charges with their shifts, highest phase first."""
    from relstab.relative.conditions import heart_pieces

    rng = random.Random(seed)
    pieces = heart_pieces(X, sigma.heart)
    out = []
    for k in sorted(pieces, reverse=True):
        E = pieces[k]
        assert all(sigma.heart.contains(e) for e in E)
        pts = _subobject_charges(E, sigma, rng)
        total = sum((sigma.charge_of(e) for e in E[1:]), sigma.charge_of(E[0]))
        for d in hn_polygon(pts, total):
            out.append((k, d))
    return out


def standard_hn_oracle(a: int, b: int, Z):
    """HN steps of M[a,b] in the standard heart: subrepresentations are M[c,b]."""
    from relstab.charge import ComplexExact

    def z(c, d):
        return sum((ComplexExact.coerce(Z[i - 1]) for i in range(c + 1, d + 1)), ComplexExact.coerce(Z[c - 1]))

    points = [z(c, b) for c in range(a, b + 1)]
    return hn_polygon(points, z(a, b))
