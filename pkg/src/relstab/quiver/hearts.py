"""Finite-length hearts of D^b(A_n) (or of a thick subcategory), given by simples.

A collection of simples S_1..S_k determines the bounded t-structure with

    D^{>=0} = {X : Hom(S_i[m], X) = 0 for all m >= 1}
    D^{<=0} = {X : Hom(X, Y) = 0 for all Y in D^{>=1}}

and the heart is their intersection.  Membership is decided indecomposable by
indecomposable, restricted to the ambient thick subcategory ("universe").
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .category import DGObject, IndecObject, cone, hom_dim, modules
from .thick import ThickSubcat, thick_closure


class HeartError(ValueError):
    pass


class InconsistencyError(AssertionError):
    """Two independent computations of the same object disagree."""


@dataclass(frozen=True)
class Heart:
    n: int
    simples: tuple
    universe: frozenset = None

    def __post_init__(self):
        object.__setattr__(self, "simples", tuple(sorted(self.simples)))
        if self.universe is None:
            object.__setattr__(self, "universe", frozenset(modules(self.n)))
        for s in self.simples:
            if s.module not in self.universe:
                raise HeartError(f"simple {s} is outside the ambient subcategory")

    # ------------------------------------------------------------ basic data
    @property
    def lo(self) -> int:
        return min(s.t for s in self.simples) if self.simples else 0

    @property
    def hi(self) -> int:
        return max(s.t for s in self.simples) if self.simples else 0

    def key(self):
        return (self.n, tuple((s.a, s.b, s.t) for s in self.simples))

    def __lt__(self, other: "Heart"):
        return self.key() < other.key()

    def to_json(self):
        return [s.to_json() for s in self.simples]

    def __repr__(self):
        return "Heart{" + ", ".join(map(repr, self.simples)) + "}"

    def shift(self, k: int) -> "Heart":
        return Heart(self.n, tuple(s.shift(k) for s in self.simples), self.universe)

    @property
    def subcategory(self) -> ThickSubcat:
        return ThickSubcat(self.n, self.universe)

    # ------------------------------------------------------------ t-structure
    def in_coaisle(self, X: IndecObject, k: int = 0) -> bool:
        """X in D^{>=k}."""
        Xs = X.shift(k)
        for S in self.simples:
            for m in (Xs.t - S.t, Xs.t - S.t - 1):
                if m >= 1 and hom_dim(S.shift(m), Xs, 0):
                    return False
        return True

    def in_aisle(self, X: IndecObject, k: int = 0) -> bool:
        """X in D^{<=k}."""
        Xs = X.shift(k)
        for a, b in self.universe:
            for u in (Xs.t, Xs.t + 1):
                Y = IndecObject(a, b, u)
                if hom_dim(Xs, Y, 0) and self.in_coaisle(Y, 1):
                    return False
        return True

    def contains(self, X) -> bool:
        if isinstance(X, DGObject):
            return all(self.contains(s) for s in X)
        if X.module not in self.universe:
            return False
        return self.in_coaisle(X) and self.in_aisle(X)

    @cached_property
    def objects(self) -> tuple:
        """All indecomposables of the heart (they have shifts between lo and hi)."""
        out = []
        for t in range(self.lo, self.hi + 1):
            for a, b in sorted(self.universe):
                X = IndecObject(a, b, t)
                if self.contains(X):
                    out.append(X)
        return tuple(out)

    def shift_into(self, X: IndecObject) -> int | None:
        """The k with X[-k] in the heart, if any."""
        for k in range(X.t - self.hi, X.t - self.lo + 1):
            if self.contains(X.shift(-k)):
                return k
        return None

    # ------------------------------------------------------------ classes
    @cached_property
    def _class_solver(self):
        n = self.n
        basis = [s.cls(n) for s in self.simples]
        return basis

    def coords(self, v) -> tuple:
        """Coordinates of a class in the basis of simple classes (exact)."""
        basis = self._class_solver
        m, n = len(basis), self.n
        rows = [[Fraction(basis[j][i]) for j in range(m)] + [Fraction(v[i])] for i in range(n)]
        piv = []
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
            piv.append(c)
            r += 1
        if any(rows[i][m] != 0 for i in range(r, n)):
            raise HeartError(f"class {v} is outside the span of the simples")
        out = [Fraction(0)] * m
        for i, c in enumerate(piv):
            out[c] = rows[i][m]
        if any(x.denominator != 1 for x in out):
            raise HeartError(f"class {v} has non-integral coordinates")
        return tuple(int(x) for x in out)

    # ------------------------------------------------------------ validation
    def check(self) -> list[str]:
        """Problems with the simple-minded collection axioms (empty if valid)."""
        problems = []
        ss = self.simples
        if len(set(ss)) != len(ss):
            problems.append("repeated simple")
        for i, S in enumerate(ss):
            for j, T in enumerate(ss):
                for k in range(-3, 1):
                    h = hom_dim(S, T, k)
                    if k == 0 and i == j and h != 1:
                        problems.append(f"End({S}) is not one-dimensional")
                    elif (k < 0 or i != j) and h and k <= 0:
                        problems.append(f"Hom({S}, {T}[{k}]) != 0")
        gen = thick_closure(self.n, {s.module for s in ss})
        if gen != self.universe:
            problems.append("simples do not generate the ambient subcategory")
        return problems

    def is_valid(self) -> bool:
        return not self.check()


def standard_heart(n: int, sub: ThickSubcat | None = None) -> Heart:
    """mod A_n, or its intersection with a thick subcategory."""
    if sub is None:
        return Heart(n, tuple(IndecObject(i, i) for i in range(1, n + 1)))
    return Heart(n, tuple(IndecObject(a, b) for a, b in sub.generators), sub.closure)


def simples_of_object_set(objs) -> tuple:
    """Simple objects of an abelian heart given by its indecomposables.

    E is simple iff no other member Y maps to E with cone inside the set (such
    a map is a proper monomorphism).
    """
    members = set(objs)
    out = []
    for E in sorted(members):
        simple = True
        for Y in members:
            if Y == E or not hom_dim(Y, E, 0):
                continue
            if all(s in members for s in cone(Y, E)):
                simple = False
                break
        if simple:
            out.append(E)
    return tuple(out)


def _extension_closure(gens: set) -> set:
    closed = set(gens)
    frontier = list(closed)
    while frontier:
        new = []
        current = list(closed)
        for A in frontier:
            for B in current:
                for X, Y in ((A, B), (B, A)):
                    if hom_dim(X, Y, 1):
                        # Y -> E -> X -> Y[1]
                        for s in cone(X, Y.shift(1)).shift(-1):
                            if s not in closed:
                                closed.add(s)
                                new.append(s)
        frontier = new
    return closed


def simple_tilt(H: Heart, S: IndecObject, direction: str = "forward") -> Heart:
    """Forward tilt <S[1], ^perp S> or backward tilt <S^perp, S[-1]> at a simple S."""
    if S not in H.simples:
        raise HeartError(f"{S} is not a simple of {H}")
    if direction not in ("forward", "backward"):
        raise ValueError("direction must be 'forward' or 'backward'")
    objs = H.objects
    cands = [IndecObject(a, b, t) for t in range(H.lo - 1, H.hi + 2) for a, b in sorted(H.universe)]
    if direction == "forward":
        torsion = [X for X in objs if not hom_dim(X, S, 0)]
        gens = {S.shift(1)} | set(torsion)

        def member(X):
            return (
                H.in_aisle(X, 0)
                and H.in_coaisle(X, -1)
                and not hom_dim(X, S, 0)
                and not any(hom_dim(T.shift(1), X, 0) for T in torsion)
            )

    else:
        free = [X for X in objs if not hom_dim(S, X, 0)]
        gens = {S.shift(-1)} | set(free)

        def member(X):
            return (
                H.in_aisle(X, 1)
                and H.in_coaisle(X, 0)
                and not hom_dim(S, X, 0)
                and not any(hom_dim(X, F.shift(-1), 0) for F in free)
            )

    closure = _extension_closure(gens)
    predicate = {X for X in cands if member(X)}
    if closure != predicate:
        raise InconsistencyError(
            f"tilt of {H} at {S}: extension closure and torsion-pair description differ "
            f"({sorted(closure ^ predicate)})"
        )
    new = Heart(H.n, simples_of_object_set(predicate), H.universe)
    if set(new.objects) != predicate:
        raise InconsistencyError(f"tilted heart {new} does not reproduce its object set")
    problems = new.check()
    if problems:
        raise InconsistencyError(f"tilted heart {new} is invalid: {problems}")
    return new


@dataclass
class ExchangeGraph:
    hearts: list
    edges: list  # (i, j, simple) forward tilts
    lo: int
    hi: int
    complete: bool = True
    notes: list = field(default_factory=list)

    def index(self, H: Heart) -> int:
        return self.hearts.index(H)

    def to_json(self):
        adj = {i: [] for i in range(len(self.hearts))}
        for i, j, s in self.edges:
            adj[i].append({"to": j, "simple": s.to_json()})
        return {
            "window": [self.lo, self.hi],
            "complete": self.complete,
            "hearts": [h.to_json() for h in self.hearts],
            "adjacency": [adj[i] for i in range(len(self.hearts))],
        }


def exchange_graph(n: int, window: int = 1, lo: int | None = None, hi: int | None = None,
                   sub: ThickSubcat | None = None, max_hearts: int = 100_000) -> ExchangeGraph:
    """Hearts reachable from the standard heart whose simples have shifts in [lo, hi].

    By default lo = 0 and hi = window, so window 1 gives the hearts between
    the standard heart H and H[1].
    """
    lo = 0 if lo is None else lo
    hi = window if hi is None else hi
    if hi < lo:
        raise ValueError("empty window")
    start = standard_heart(n, sub)
    if sub is not None and sub.is_zero():
        return ExchangeGraph([start], [], lo, hi)
    if not (lo <= start.lo and start.hi <= hi):
        start = start.shift(lo)
    seen = {start}
    queue = deque([start])
    complete = True
    while queue:
        H = queue.popleft()
        for S in H.simples:
            for direction in ("forward", "backward"):
                shift = 1 if direction == "forward" else -1
                if not (lo <= S.t + shift <= hi):
                    continue
                H2 = simple_tilt(H, S, direction)
                if not (lo <= H2.lo and H2.hi <= hi):
                    continue
                if H2 not in seen:
                    if len(seen) >= max_hearts:
                        complete = False
                        continue
                    seen.add(H2)
                    queue.append(H2)
    hearts = sorted(seen)
    idx = {h: i for i, h in enumerate(hearts)}
    edges = []
    for H in hearts:
        for S in H.simples:
            if S.t + 1 > hi:
                continue
            H2 = simple_tilt(H, S, "forward")
            if H2 in idx:
                edges.append((idx[H], idx[H2], S))
    edges.sort(key=lambda e: (e[0], e[1], e[2]))
    return ExchangeGraph(hearts, edges, lo, hi, complete)


def intermediate_hearts(n: int, sub: ThickSubcat | None = None) -> list[Heart]:
    return exchange_graph(n, 1, sub=sub).hearts


def restricted_heart(H: Heart, sub: ThickSubcat) -> Heart | None:
    """H intersected with a thick subcategory, if that is a heart of it."""
    members = [X for X in H.objects if X.module in sub.closure]
    if sub.is_zero():
        return Heart(H.n, (), sub.closure)
    simples = simples_of_object_set(members)
    try:
        cand = Heart(H.n, simples, sub.closure)
    except HeartError:
        return None
    if cand.check():
        return None
    if set(cand.objects) != set(members):
        return None
    return cand


def parse_heart(text: str, n: int, sub: ThickSubcat | None = None) -> Heart:
    from .category import parse_objects

    objs = parse_objects(text)
    for o in objs:
        if o.b > n:
            raise ValueError(f"{o} does not live on A_{n}")
    H = Heart(n, tuple(objs), None if sub is None else sub.closure)
    problems = H.check()
    if problems:
        raise HeartError("; ".join(problems))
    return H
