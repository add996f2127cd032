"""Matrix realization of g = p~(n) and g' = p(n).

Elements are 2n x 2n block matrices ``(a, b; c, -a^t)`` with ``b`` symmetric
and ``c`` skew-symmetric.  The fixed ordered basis (used as the PBW order) is

* ``B_ij`` (i <= j): root vectors of g_1, weight eps_i + eps_j;
* ``E_ij``: the a-part matrix units, g_0 = gl(n), weight eps_i - eps_j;
* ``C_ij`` (i < j): root vectors of g_-1, weight -eps_i - eps_j;

each block lexicographic in (i, j).  Indices are 0-based internally and
1-based in names (``B12``, ``E21``, ``C12``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .rootdata import Root

Combo = Dict[int, Fraction]


def _zeros(n: int) -> List[List[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def _unit(n: int, i: int, j: int) -> List[List[Fraction]]:
    m = _zeros(n)
    m[i][j] = Fraction(1)
    return m


def _freeze(m) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def _madd(x, y, s=1):
    return [[a + s * b for a, b in zip(r1, r2)] for r1, r2 in zip(x, y)]


def _mmul(x, y):
    n = len(x)
    return [[sum((x[i][k] * y[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def _tr(m):
    return [list(r) for r in zip(*m)]


@dataclass(frozen=True)
class GMatrix:
    """Element of p~(n) in block form; ``-a^t`` is implied."""

    a: Tuple[Tuple[Fraction, ...], ...]
    b: Tuple[Tuple[Fraction, ...], ...]
    c: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.a)
        for i in range(n):
            for j in range(n):
                if self.b[i][j] != self.b[j][i]:
                    raise ValueError("b block must be symmetric")
                if self.c[i][j] != -self.c[j][i]:
                    raise ValueError("c block must be skew-symmetric")

    @classmethod
    def from_blocks(cls, a=None, b=None, c=None, n: int | None = None) -> "GMatrix":
        n = n or len(next(m for m in (a, b, c) if m is not None))
        z = _zeros(n)
        return cls(_freeze(a or z), _freeze(b or z), _freeze(c or z))

    @classmethod
    def from_full(cls, m) -> "GMatrix":
        n = len(m) // 2
        a = [row[:n] for row in m[:n]]
        b = [row[n:] for row in m[:n]]
        c = [row[:n] for row in m[n:]]
        d = [row[n:] for row in m[n:]]
        if _freeze(d) != _freeze([[-x for x in r] for r in _tr(a)]):
            raise ValueError("lower-right block is not -a^t: not in p~(n)")
        return cls.from_blocks(a, b, c, n)

    @property
    def n(self) -> int:
        return len(self.a)

    def full(self) -> List[List[Fraction]]:
        n = self.n
        d = [[-x for x in r] for r in _tr(self.a)]
        top = [list(self.a[i]) + list(self.b[i]) for i in range(n)]
        bot = [list(self.c[i]) + d[i] for i in range(n)]
        return top + bot

    def is_zero(self) -> bool:
        return not any(any(r) for blk in (self.a, self.b, self.c) for r in blk)

    @property
    def parity(self) -> int:
        """0 for even, 1 for odd; raises on mixed parity."""
        has_even = any(any(r) for r in self.a)
        has_odd = any(any(r) for r in self.b) or any(any(r) for r in self.c)
        if has_even and has_odd:
            raise ValueError("mixed-parity element")
        return 1 if has_odd else 0

    def __add__(self, other: "GMatrix") -> "GMatrix":
        return GMatrix.from_blocks(_madd(self.a, other.a), _madd(self.b, other.b), _madd(self.c, other.c))

    def scale(self, s) -> "GMatrix":
        s = Fraction(s)
        return GMatrix.from_blocks(*[[[s * x for x in r] for r in blk] for blk in (self.a, self.b, self.c)])

    def __neg__(self):
        return self.scale(-1)


def supercommutator(x: GMatrix, y: GMatrix) -> GMatrix:
    """[x, y] = xy - (-1)^{|x||y|} yx for pure-parity x, y."""
    sign = -1 if x.parity and y.parity else 1
    xy, yx = _mmul(x.full(), y.full()), _mmul(y.full(), x.full())
    return GMatrix.from_full(_madd(xy, yx, -sign))


@dataclass(frozen=True, order=True)
class BasisIndex:
    """One element of the fixed basis: tag 'B' (g_1), 'E' (g_0) or 'C' (g_-1)."""

    tag: str
    i: int
    j: int

    @property
    def grade(self) -> int:
        return {"B": 1, "E": 0, "C": -1}[self.tag]

    @property
    def parity(self) -> int:
        return 0 if self.tag == "E" else 1

    def weight(self, n: int) -> Tuple[int, ...]:
        w = [0] * n
        if self.tag == "E":
            w[self.i] += 1
            w[self.j] -= 1
        elif self.tag == "B":
            w[self.i] += 1
            w[self.j] += 1
        else:
            w[self.i] -= 1
            w[self.j] -= 1
        return tuple(w)

    @property
    def name(self) -> str:
        return f"{self.tag}{self.i + 1}{self.j + 1}"

    def __str__(self):
        return self.name


def basis_matrix(n: int, e: BasisIndex) -> GMatrix:
    """The matrix of a basis element, with the root-vector normalization.

    For i < j the g_1 vector is b = -(E_ij + E_ji): with c = E_ij - E_ji this
    makes [X_a, X_-a] = E_ii - E_jj, i.e. the H_a with (H_a, H_a) = 2 that
    pairs with a weight mu to mu_i - mu_j.  X_{2 eps_i} is b = E_ii.
    """
    i, j = e.i, e.j
    if e.tag == "E":
        return GMatrix.from_blocks(a=_unit(n, i, j), n=n)
    if e.tag == "B":
        if i == j:
            return GMatrix.from_blocks(b=_unit(n, i, i), n=n)
        b = _madd(_unit(n, i, j), _unit(n, j, i))
        return GMatrix.from_blocks(b=[[-x for x in r] for r in b], n=n)
    c = _madd(_unit(n, i, j), _unit(n, j, i), -1)
    return GMatrix.from_blocks(c=c, n=n)


class SuperAlgebra:
    """p~(n) with its fixed ordered basis and structure constants."""

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"n must be an integer >= 2, got {n!r}")
        self.n = n
        plus = [BasisIndex("B", i, j) for i in range(n) for j in range(i, n)]
        zero = [BasisIndex("E", i, j) for i in range(n) for j in range(n)]
        minus = [BasisIndex("C", i, j) for i in range(n) for j in range(i + 1, n)]
        self.basis: List[BasisIndex] = plus + zero + minus
        self.index: Dict[BasisIndex, int] = {b: k for k, b in enumerate(self.basis)}
        self.by_name: Dict[str, int] = {b.name: k for k, b in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.parity = [b.parity for b in self.basis]
        self.grade = [b.grade for b in self.basis]
        self.weight = [b.weight(n) for b in self.basis]
        self.matrices = [basis_matrix(n, b) for b in self.basis]
        self.g1 = [k for k, b in enumerate(self.basis) if b.tag == "B"]
        self.g0 = [k for k, b in enumerate(self.basis) if b.tag == "E"]
        self.gm1 = [k for k, b in enumerate(self.basis) if b.tag == "C"]
        self.cartan = [self.index[BasisIndex("E", i, i)] for i in range(n)]
        # positive part n+ = n0+ plus g_1; negative part n- = n0- plus g_-1
        self.n0_plus = [self.index[BasisIndex("E", i, j)] for i in range(n) for j in range(i + 1, n)]
        self.n0_minus = [self.index[BasisIndex("E", i, j)] for i in range(n) for j in range(i)]
        self.nplus = set(self.n0_plus) | set(self.g1)
        self.nminus = set(self.n0_minus) | set(self.gm1)
        self._table = [[self._compute_bracket(a, b) for b in range(self.dim)] for a in range(self.dim)]

    # -- decomposition -----------------------------------------------------
    def decompose(self, m: GMatrix) -> Combo:
        """Coordinates of a matrix in the fixed basis; raises if outside g."""
        n = self.n
        out: Combo = {}
        for i in range(n):
            for j in range(n):
                if m.a[i][j]:
                    out[self.index[BasisIndex("E", i, j)]] = m.a[i][j]
            for j in range(i, n):
                v = m.b[i][j]
                if v:
                    out[self.index[BasisIndex("B", i, j)]] = v if i == j else -v
            for j in range(i + 1, n):
                if m.c[i][j]:
                    out[self.index[BasisIndex("C", i, j)]] = m.c[i][j]
        if self.to_matrix(out) != m:
            raise ValueError("matrix not in the span of the basis")
        return out

    def to_matrix(self, combo: Combo) -> GMatrix:
        acc = GMatrix.from_blocks(n=self.n, a=_zeros(self.n))
        for k, c in combo.items():
            acc = acc + self.matrices[k].scale(c)
        return acc

    def _compute_bracket(self, a: int, b: int) -> Combo:
        return self.decompose(supercommutator(self.matrices[a], self.matrices[b]))

    def bracket(self, a: int, b: int) -> Combo:
        """Structure constants: [e_a, e_b] as {index: coeff}."""
        return self._table[a][b]

    def bracket_combo(self, x: Combo, y: Combo) -> Combo:
        out: Combo = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for k, v in self._table[a][b].items():
                    s = out.get(k, 0) + ca * cb * v
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def combo_parity(self, x: Combo) -> int:
        ps = {self.parity[k] for k in x}
        if len(ps) > 1:
            raise ValueError("mixed-parity combination")
        return ps.pop() if ps else 0

    # -- names and distinguished elements -----------------------------------
    def element(self, name: str) -> int:
        return self.by_name[name]

    def name(self, k: int) -> str:
        return self.basis[k].name

    def root_index(self, alpha: Root | Sequence[int]) -> int:
        """Basis index of the root vector X_alpha."""
        vec = tuple(alpha.vector if isinstance(alpha, Root) else alpha)
        for k, w in enumerate(self.weight):
            if w == vec and k not in self.cartan:
                return k
        raise ValueError(f"{vec} is not a root of p~({self.n})")

    def root_vector(self, alpha: Root | Sequence[int]) -> GMatrix:
        return self.matrices[self.root_index(alpha)]

    def coroot(self, alpha: Root | Sequence[int]) -> Combo:
        """H_alpha = [X_alpha, X_-alpha] when -alpha is a root."""
        vec = tuple(alpha.vector if isinstance(alpha, Root) else alpha)
        neg = tuple(-x for x in vec)
        return self.bracket(self.root_index(vec), self.root_index(neg))

    def cartan_value(self, h: Combo, mu: Sequence):
        """mu(h) for h in the Cartan subalgebra."""
        total = 0
        for k, c in h.items():
            i = self.cartan.index(k)
            total = total + mu[i] * c
        return total

    def trace_form(self, x: Combo, y: Combo) -> Fraction:
        """(A1, A2) = tr A1 A2 on g_0."""
        mx, my = self.to_matrix(x), self.to_matrix(y)
        return sum((mx.a[i][k] * my.a[k][i] for i in range(self.n) for k in range(self.n)), Fraction(0))

    def z0(self) -> Combo:
        """diag(1_n, -1_n), the center of g_0."""
        return {k: Fraction(1) for k in self.cartan}

    def grading_of(self, k: int) -> int:
        return self.grade[k]

    def parity_of(self, k: int) -> str:
        return "odd" if self.parity[k] else "even"

    def weight_of_combo(self, x: Combo):
        ws = {self.weight[k] for k in x}
        if len(ws) != 1:
            raise ValueError("not a weight vector")
        return ws.pop()


@lru_cache(maxsize=None)
def superalgebra(n: int) -> SuperAlgebra:
    """Shared, immutable structure-constant table for p~(n)."""
    return SuperAlgebra(n)


def p_n_basis(n: int) -> List[Combo]:
    """Basis of g' = p(n): traceless g_0 part plus all of g_1 and g_-1."""
    g = superalgebra(n)
    out: List[Combo] = [{k: Fraction(1)} for k in g.g1]
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append({g.index[BasisIndex("E", i, j)]: Fraction(1)})
    for i in range(n - 1):
        out.append({g.cartan[i]: Fraction(1), g.cartan[i + 1]: Fraction(-1)})
    out += [{k: Fraction(1)} for k in g.gm1]
    return out


def sl_basis(n: int) -> List[Combo]:
    """Basis of g'_0 = sl(n) inside g_0."""
    g = superalgebra(n)
    out = [{g.index[BasisIndex("E", i, j)]: Fraction(1)} for i in range(n) for j in range(n) if i != j]
    for i in range(n - 1):
        out.append({g.cartan[i]: Fraction(1), g.cartan[i + 1]: Fraction(-1)})
    return out
