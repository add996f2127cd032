"""Exact linear algebra over Q on sparse rows.

Rows are dicts ``{column: Fraction}``; dense list-of-lists input is accepted
everywhere and converted.  Only what the rest of the package needs:
row reduction, rank, null space, and solving for coordinates in a span.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

Row = Dict[int, Fraction]


def to_sparse(rows) -> List[Row]:
    out = []
    for r in rows:
        if isinstance(r, dict):
            out.append({c: Fraction(v) for c, v in r.items() if v})
        else:
            out.append({c: Fraction(v) for c, v in enumerate(r) if v})
    return out


def _axpy(dst: Row, src: Row, f: Fraction):
    """dst += f * src, in place."""
    for c, v in src.items():
        s = dst.get(c, 0) + f * v
        if s:
            dst[c] = s
        else:
            dst.pop(c, None)


def rref(rows, ncols: int | None = None) -> Tuple[List[Row], List[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    work = [r for r in to_sparse(rows) if r]
    pivots: List[int] = []
    reduced: List[Row] = []
    for r in work:
        # eliminate existing pivots from r
        for p, prow in zip(pivots, reduced):
            v = r.get(p)
            if v:
                _axpy(r, prow, -v)
        if not r:
            continue
        p = min(r)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for prow in reduced:
            v = prow.get(p)
            if v:
                _axpy(prow, r, -v)
        pivots.append(p)
        reduced.append(r)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [reduced[i] for i in order], [pivots[i] for i in order]


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int) -> List[List[Fraction]]:
    """Basis of {x : M x = 0} as dense vectors of length ``ncols``."""
    red, piv = rref(rows, ncols)
    pivset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for prow, p in zip(red, piv):
            v = prow.get(free)
            if v:
                x[p] = -v
        basis.append(x)
    return basis


def transpose(rows, ncols: int) -> List[Row]:
    out: List[Row] = [dict() for _ in range(ncols)]
    for i, r in enumerate(to_sparse(rows)):
        for c, v in r.items():
            out[c][i] = v
    return out


def solve_in_span(vectors: Sequence[Row], target: Row):
    """Coefficients a with sum a_i vectors_i == target, or None if impossible."""
    # augmented system: columns are the vectors, rows are coordinates
    coords = sorted(set().union(*[set(v) for v in vectors], set(target)))
    index = {c: i for i, c in enumerate(coords)}
    k = len(vectors)
    rows: List[Row] = [dict() for _ in coords]
    for j, v in enumerate(vectors):
        for c, x in v.items():
            if x:
                rows[index[c]][j] = Fraction(x)
    for c, x in target.items():
        if x:
            rows[index[c]][k] = Fraction(x)
    red, piv = rref(rows)
    if k in piv:
        return None
    sol = [Fraction(0)] * k
    for prow, p in zip(red, piv):
        sol[p] = prow.get(k, Fraction(0))
    return sol


def inverse(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Inverse of a square matrix; raises ValueError if singular."""
    n = len(matrix)
    rows = []
    for i, r in enumerate(matrix):
        row = {c: Fraction(v) for c, v in enumerate(r) if v}
        row[n + i] = Fraction(1)
        rows.append(row)
    red, piv = rref(rows)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular")
    return [[red[i].get(n + j, Fraction(0)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]):
    m, k = len(a), len(b)
    p = len(b[0]) if b else 0
    return [[sum((a[i][t] * b[t][j] for t in range(k) if a[i][t] and b[t][j]), Fraction(0))
             for j in range(p)] for i in range(m)]
