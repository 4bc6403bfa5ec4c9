"""Dense linear algebra over the prime field GF(p), p = 2^31 - 1."""

from __future__ import annotations

P = 2_147_483_647


def _reduce(rows: list[list[int]], ncols: int):
    """Row-reduce in place; return (reduced rows, pivot columns)."""
    rows = [[x % P for x in r] for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], P - 2, P)
        rows[rank] = [(x * inv) % P for x in rows[rank]]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % P for x, y in zip(rows[i], pr)]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def rank(rows: list[list[int]], ncols: int | None = None) -> int:
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    if ncols == 0:
        return 0
    return len(_reduce(rows, ncols)[1])


def nullspace(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of {x : rows * x = 0}."""
    if ncols == 0:
        return []
    red, pivots = _reduce(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for r, pc in zip(red, pivots):
            v[pc] = (-r[fcol]) % P
        basis.append(v)
    return basis


def matmul(A: list[list[int]], B: list[list[int]], inner: int, ncols: int) -> list[list[int]]:
    out = []
    for row in A:
        out.append([sum(row[k] * B[k][j] for k in range(inner)) % P for j in range(ncols)])
    return out


def zeros(r: int, c: int) -> list[list[int]]:
    return [[0] * c for _ in range(r)]
