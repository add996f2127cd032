"""Coadjoint geometry: stabilizers in g_1 / g_-1, the map r, the n = 2 equations.

g* is realized as matrices (q, s; u, q^t) with s skew and u symmetric.  A
point of V is (c, d, y) with c, d skew with odd entries and y even; r sends
it to (y - dc, d; cy - y^t c - cdc, y^t + cd).  Symbolic points live in a
:class:`GrassmannRing` with generators y{i}{j}, c{i}{j}, d{i}{j} (1-based,
i < j for c and d).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import linalg
from .report import CheckReport
from .symcore import GrassmannPoly, GrassmannRing, as_scalar, render_grassmann

Matrix = List[List]


# -- numeric stabilizers ------------------------------------------------------

def _mat(q) -> List[List[Fraction]]:
    return [[as_scalar(x) for x in row] for row in q]


def _sym_basis(n: int):
    return [(i, j) for i in range(n) for j in range(i, n)]


def _skew_basis(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _unit_sym(n, i, j):
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = m[j][i] = Fraction(1)
    return m


def _unit_skew(n, i, j):
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j], m[j][i] = Fraction(1), Fraction(-1)
    return m


def _mm(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)] for i in range(n)]


def _tp(a):
    return [list(r) for r in zip(*a)]


def _sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _kernel_dim(images: List[List[List[Fraction]]]) -> int:
    """dim ker of the linear map whose basis images are the given matrices."""
    if not images:
        return 0
    cols = [[x for row in m for x in row] for m in images]
    return len(images) - linalg.rank(linalg.transpose(linalg.to_sparse(cols), len(cols[0])))


def stabilizer_dims(q) -> Tuple[int, int]:
    """(dim g_x cap g_1, dim g_x cap g_-1) for x = (q, 0; 0, q^t).

    g_1 part: symmetric b with q b - b q^t = 0; g_-1 part: skew c with
    c q - q^t c = 0.
    """
    q = _mat(q)
    n = len(q)
    if any(len(r) != n for r in q):
        raise ValueError("q must be square")
    qt = _tp(q)
    plus = [_sub(_mm(q, b), _mm(b, qt)) for b in (_unit_sym(n, i, j) for i, j in _sym_basis(n))]
    minus = [_sub(_mm(c, q), _mm(qt, c)) for c in (_unit_skew(n, i, j) for i, j in _skew_basis(n))]
    return _kernel_dim(plus), _kernel_dim(minus)


def centralizer_dim(q) -> int:
    """dim of the centralizer of q in gl(n); q is regular iff this is n."""
    q = _mat(q)
    n = len(q)
    imgs = []
    for i in range(n):
        for j in range(n):
            e = [[Fraction(int((a, b) == (i, j))) for b in range(n)] for a in range(n)]
            imgs.append(_sub(_mm(q, e), _mm(e, q)))
    return _kernel_dim(imgs)


def is_regular(q) -> bool:
    return centralizer_dim(q) == len(q)


def random_regular_matrices(n: int, count: int, seed: int) -> List[List[List[Fraction]]]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = [[Fraction(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
        if is_regular(q):
            out.append(q)
    return out


def nonregular_matrices(n: int, seed: int, count: int = 5) -> List[List[List[Fraction]]]:
    """Matrices with a repeated eigenvalue split over two Jordan blocks:
    scalars, and P diag(a, a, b3, ...) P^-1 for random unipotent P."""
    rng = random.Random(seed)
    out = [[[Fraction(int(i == j) * 3) for j in range(n)] for i in range(n)]]
    while len(out) < count:
        a = Fraction(rng.randint(-5, 5))
        diag = [a, a] + [Fraction(rng.randint(-5, 5)) for _ in range(n - 2)]
        low = [[Fraction(int(i == j)) if i <= j else Fraction(rng.randint(-3, 3)) for j in range(n)]
               for i in range(n)]
        up = [[Fraction(int(i == j)) if i >= j else Fraction(rng.randint(-3, 3)) for j in range(n)]
              for i in range(n)]
        p = _mm(low, up)
        d = [[diag[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        q = _mm(_mm(p, d), linalg.inverse(p))
        out.append(q)
    return out


# -- the map r ------------------------------------------------------------------

def _gmm(a: Matrix, b: Matrix, ring: GrassmannRing) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ring.zero()
            for t in range(k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def _gadd(a: Matrix, b: Matrix, s: int = 1) -> Matrix:
    return [[x + y * s for x, y in zip(r, t)] for r, t in zip(a, b)]


def _gtp(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)]


@dataclass
class VPoint:
    c: Matrix
    d: Matrix
    y: Matrix
    ring: GrassmannRing

    @property
    def n(self) -> int:
        return len(self.y)

    def __post_init__(self):
        for name, m in (("c", self.c), ("d", self.d)):
            for i in range(self.n):
                for j in range(self.n):
                    if m[i][j] != -m[j][i]:
                        raise ValueError(f"{name} is not skew-symmetric")

    @classmethod
    def symbolic(cls, n: int, y=None) -> "VPoint":
        """Generic point; pass numeric ``y`` to keep only c, d formal."""
        pairs = _skew_basis(n)
        odd = [f"c{i + 1}{j + 1}" for i, j in pairs] + [f"d{i + 1}{j + 1}" for i, j in pairs]
        even = [] if y is not None else [f"y{i + 1}{j + 1}" for i in range(n) for j in range(n)]
        ring = GrassmannRing(even, odd)
        if y is None:
            ym = [[ring.gen(f"y{i + 1}{j + 1}") for j in range(n)] for i in range(n)]
        else:
            ym = [[ring.scalar(as_scalar(x)) for x in row] for row in y]
        return cls(_skew_matrix(ring, "c", n), _skew_matrix(ring, "d", n), ym, ring)


def _skew_matrix(ring: GrassmannRing, name: str, n: int) -> Matrix:
    m = [[ring.zero() for _ in range(n)] for _ in range(n)]
    for i, j in _skew_basis(n):
        g = ring.gen(f"{name}{i + 1}{j + 1}")
        m[i][j], m[j][i] = g, -g
    return m


@dataclass
class GStarPoint:
    q: Matrix
    s: Matrix
    u: Matrix

    def __post_init__(self):
        n = len(self.q)
        for i in range(n):
            for j in range(n):
                if self.s[i][j] != -self.s[j][i]:
                    raise ValueError("s block is not skew-symmetric")
                if self.u[i][j] != self.u[j][i]:
                    raise ValueError("u block is not symmetric")

    def coordinates(self) -> Dict[str, GrassmannPoly]:
        """q_ij (all), s_ij (i < j), u_ij (i <= j), 1-based names."""
        n = len(self.q)
        out = {f"q{i + 1}{j + 1}": self.q[i][j] for i in range(n) for j in range(n)}
        out.update({f"s{i + 1}{j + 1}": self.s[i][j] for i, j in _skew_basis(n)})
        out.update({f"u{i + 1}{j + 1}": self.u[i][j] for i, j in _sym_basis(n)})
        return out


def r_map(v: VPoint) -> GStarPoint:
    """(y - dc, d; cy - y^t c - cdc, y^t + cd)."""
    ring = v.ring
    yt = _gtp(v.y)
    dc = _gmm(v.d, v.c, ring)
    cd = _gmm(v.c, v.d, ring)
    q = _gadd(v.y, dc, -1)
    u = _gadd(_gadd(_gmm(v.c, v.y, ring), _gmm(yt, v.c, ring), -1), _gmm(cd, v.c, ring), -1)
    lower = _gadd(yt, cd)
    if lower != _gtp(q):
        raise ArithmeticError("lower-right block is not q^t")
    return GStarPoint(q, [list(r) for r in v.d], u)


def cdc(v: VPoint) -> Matrix:
    return _gmm(_gmm(v.c, v.d, v.ring), v.c, v.ring)


# -- the n = 2 equations -----------------------------------------------------------

def q_equations_n2(x: Dict[str, object], variant: str = "printed") -> List[Tuple[str, object]]:
    """The six equations cutting out Q for n = 2, evaluated on coordinates x.

    ``printed`` is the system as usually stated; ``corrected`` replaces the
    second and third equations by the forms that actually vanish on the
    image of r (q12 and q21 swapped, u11 and u22 swapped).
    """
    q11, q12, q21, q22 = x["q11"], x["q12"], x["q21"], x["q22"]
    u11, u12, u22 = x["u11"], x["u12"], x["u22"]
    if variant == "printed":
        e2 = ("2 q21 u12 + (q11 - q22) u22", q21 * u12 * 2 + (q11 - q22) * u22)
        e3 = ("2 q12 u12 + (q22 - q11) u11", q12 * u12 * 2 + (q22 - q11) * u11)
    elif variant == "corrected":
        e2 = ("2 q12 u12 + (q22 - q11) u22", q12 * u12 * 2 + (q22 - q11) * u22)
        e3 = ("2 q21 u12 + (q11 - q22) u11", q21 * u12 * 2 + (q11 - q22) * u11)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return [
        ("q12 u11 + q21 u22", q12 * u11 + q21 * u22),
        e2,
        e3,
        ("u11 u22", u11 * u22),
        ("u12 u11", u12 * u11),
        ("u12 u22", u12 * u22),
    ]


def check_Q_equations_n2(v: VPoint | None = None, variant: str = "printed") -> CheckReport:
    """cdc = 0 and the six equations, on r(v) for a fully symbolic n = 2 point."""
    v = v or VPoint.symbolic(2)
    if v.n != 2:
        raise ValueError("the equations are for n = 2")
    report = CheckReport(f"n = 2 equations of Q ({variant})")
    m = cdc(v)
    resid = [x for row in m for x in row if not x.is_zero()]
    report.add("cdc = 0", not resid, "0" if not resid else "; ".join(render_grassmann(x) for x in resid))
    coords = r_map(v).coordinates()
    for label, value in q_equations_n2(coords, variant):
        report.add(f"{label} = 0", value.is_zero(), render_grassmann(value))
    return report


def q_equation_ring() -> GrassmannRing:
    return GrassmannRing(["q11", "q12", "q21", "q22"], ["u11", "u12", "u22"])


def q_equation_jacobian_rank(q, variant: str = "corrected") -> int:
    """Rank of the Jacobian of the six equations in (q, u) at (q, u = 0)."""
    ring = q_equation_ring()
    x = {name: ring.gen(name) for name in ring.even + ring.odd}
    eqs = [e for _, e in q_equations_n2(x, variant)]
    point = {f"q{i + 1}{j + 1}": as_scalar(q[i][j]) for i in range(2) for j in range(2)}
    rows = []
    for e in eqs:
        row = []
        for name in ring.even + ring.odd:
            dv = e.diff(name).subs_even(point).subs_odd_zero()
            row.append(dv.scalar_value())
        rows.append(row)
    return linalg.rank(rows)


def singular_locus_scan(values: Sequence[int] = (-1, 0, 1, 2), variant: str = "corrected") -> CheckReport:
    """Over a grid of numeric q at u = 0: the Jacobian has rank below its
    generic value exactly when q is scalar."""
    grid = [[[Fraction(a), Fraction(b)], [Fraction(c), Fraction(d)]]
            for a, b, c, d in itertools.product(values, repeat=4)]
    ranks = {tuple(map(tuple, q)): q_equation_jacobian_rank(q, variant) for q in grid}
    generic = max(ranks.values())
    report = CheckReport(f"singular locus of Q, n = 2 ({variant}, generic rank {generic})")
    bad = []
    for q, r in ranks.items():
        scalar = q[0][1] == 0 and q[1][0] == 0 and q[0][0] == q[1][1]
        if (r < generic) != scalar:
            bad.append(f"q={[[str(x) for x in row] for row in q]} rank={r}")
    report.add("rank drops iff q is scalar", not bad, "; ".join(bad[:5]) or f"{len(grid)} points")
    return report


# -- superdimension -------------------------------------------------------------------

def generic_y(n: int, seed: int) -> List[List[Fraction]]:
    """Triangular matrix with distinct diagonal, conjugated by a unipotent
    matrix, so the eigenvalues are distinct rationals."""
    rng = random.Random(seed)
    eig = rng.sample(range(-20, 21), n)
    t = [[Fraction(eig[i]) if i == j else (Fraction(rng.randint(-4, 4)) if i < j else Fraction(0))
          for j in range(n)] for i in range(n)]
    low = [[Fraction(int(i == j)) if i <= j else Fraction(rng.randint(-3, 3)) for j in range(n)]
           for i in range(n)]
    return _mm(_mm(low, t), linalg.inverse(low))


def differential_rank(n: int, y) -> Tuple[int, int]:
    """(even rank, odd rank) of d r at (c, d, y) = (0, 0, y)."""
    v = VPoint.symbolic(n)
    out = r_map(v).coordinates()
    ring = v.ring
    point = {f"y{i + 1}{j + 1}": as_scalar(y[i][j]) for i in range(n) for j in range(n)}
    even_out = [k for k in out if k.startswith("q")]
    odd_out = [k for k in out if not k.startswith("q")]

    def jac(outs, ins):
        rows = []
        for k in outs:
            rows.append([out[k].diff(x).subs_even(point).subs_odd_zero().scalar_value() for x in ins])
        return linalg.rank(rows)

    return jac(even_out, list(ring.even)), jac(odd_out, list(ring.odd))


def superdimension_Q(n: int, seed: int = 0, attempts: int = 5) -> Tuple[int, int]:
    """Rank of the superdifferential of r at a generic point.

    A rank deficiency at the sampled point triggers a resample; the maximal
    rank seen is returned.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    best = (0, 0)
    target = (n * n, n * n - n)
    for k in range(attempts):
        y = generic_y(n, seed + k)
        rk = differential_rank(n, y)
        best = max(best, rk)
        if rk == target:
            break
    return best


def identity_on_g0_star(n: int, y) -> bool:
    """r(0, 0, y) = (y, 0; 0, y^t)."""
    ring = GrassmannRing()
    z = [[ring.zero()] * n for _ in range(n)]
    ym = [[ring.scalar(as_scalar(x)) for x in row] for row in y]
    img = r_map(VPoint(z, [list(r) for r in z], ym, ring))
    return img.q == ym and all(x.is_zero() for row in img.s + img.u for x in row)
