"""PBW normal forms in U(g) for g = p~(n).

A PBW monomial is a tuple of basis indices, non-decreasing in the rank of
the chosen order, with odd generators appearing at most once.  Two orders
are used:

``"grade"``
    U = U(g_1) U(g_0) U(g_-1): the basis order of :class:`SuperAlgebra`.
    This is where x -> x_0 lives.
``"triangular"``
    U = U(n^-) U(h) U(n^+), with n^- = g_-1 then n0^-, and n^+ = n0^+
    then g_1.  This is where the Harish-Chandra projection lives.

Straightening uses the rule xy = (-1)^{|x||y|} yx + [x, y] (and
x^2 = [x, x]/2 for odd x) with a memo of products ``generator * monomial``.
"""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .superalg import Combo, SuperAlgebra, superalgebra
from .symcore import WeightPoly

Mono = Tuple[int, ...]
Terms = Dict[Mono, Fraction]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def _add(dst: dict, src: dict, c=1):
    for k, v in src.items():
        s = dst.get(k, 0) + c * v
        if s:
            dst[k] = s
        else:
            dst.pop(k, None)


def order_ranks(g: SuperAlgebra, kind: str) -> List[int]:
    if kind == "grade":
        seq = list(range(g.dim))
    elif kind == "triangular":
        seq = (list(g.gm1) + sorted(g.n0_minus) + list(g.cartan)
               + sorted(g.n0_plus) + list(g.g1))
    else:
        raise ValueError(f"unknown PBW order {kind!r}")
    rank = [0] * g.dim
    for r, k in enumerate(seq):
        rank[k] = r
    return rank


class UEA:
    """U(p~(n)) with a fixed PBW order."""

    def __init__(self, g: SuperAlgebra, order: str = "grade"):
        self.g = g
        self.n = g.n
        self.order = order
        self.rank = order_ranks(g, order)
        self._odd = g.parity
        self._memo: Dict[Tuple[int, Mono], Terms] = {}

    # -- constructors -------------------------------------------------------
    def elem(self, terms: Dict[Mono, object] | None = None) -> "UEAElem":
        return UEAElem(self, {k: Fraction(v) for k, v in (terms or {}).items()})

    def one(self) -> "UEAElem":
        return UEAElem(self, {(): Fraction(1)})

    def zero(self) -> "UEAElem":
        return UEAElem(self, {})

    def gen(self, x) -> "UEAElem":
        k = self.g.element(x) if isinstance(x, str) else x
        return UEAElem(self, {(k,): Fraction(1)})

    def from_combo(self, combo: Combo) -> "UEAElem":
        return UEAElem(self, {(k,): Fraction(c) for k, c in combo.items() if c})

    def word(self, names: Sequence, coeff=1) -> "UEAElem":
        """Normal form of the ordered product of the given generators."""
        idx = [self.g.element(x) if isinstance(x, str) else x for x in names]
        return UEAElem(self, self.normal_form_word(idx, Fraction(coeff)))

    # -- straightening ------------------------------------------------------
    def is_normal(self, m: Sequence[int]) -> bool:
        r = self.rank
        for a, b in zip(m, m[1:]):
            if r[a] > r[b] or (a == b and self._odd[a]):
                return False
        return True

    def lmul_gen(self, x: int, m: Mono) -> Terms:
        """x * m for a generator x and a normal monomial m."""
        key = (x, m)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not m:
            res = {(x,): Fraction(1)}
        else:
            y = m[0]
            rest = m[1:]
            rx, ry = self.rank[x], self.rank[y]
            if rx < ry or (x == y and not self._odd[x]):
                res = {(x,) + m: Fraction(1)}
            elif x == y:
                res = {}
                for k, c in self.g.bracket(x, x).items():
                    _add(res, self.lmul_gen(k, rest), c / 2)
            else:
                sign = -1 if self._odd[x] and self._odd[y] else 1
                res = {}
                for mono, c in self.lmul_gen(x, rest).items():
                    _add(res, self.lmul_gen(y, mono), sign * c)
                for k, c in self.g.bracket(x, y).items():
                    _add(res, self.lmul_gen(k, rest), c)
        self._memo[key] = res
        return res

    def mono_mul(self, m1: Mono, m2: Mono) -> Terms:
        cur: Terms = {m2: Fraction(1)}
        for x in reversed(m1):
            nxt: Terms = {}
            for mono, c in cur.items():
                _add(nxt, self.lmul_gen(x, mono), c)
            cur = nxt
        return cur

    def normal_form_word(self, word: Sequence[int], coeff=Fraction(1)) -> Terms:
        return {k: coeff * v for k, v in self.mono_mul(tuple(word), ()).items()} if coeff else {}

    def normal_form_terms(self, terms: Dict[Sequence[int], object]) -> Terms:
        """Normal form of a sum of arbitrary words."""
        out: Terms = {}
        for w, c in terms.items():
            _add(out, self.mono_mul(tuple(w), ()), Fraction(c))
        return out

    def straighten_random(self, terms: Dict[Sequence[int], object], rng: random.Random) -> Terms:
        """Normal form by rewriting random out-of-order adjacent pairs.

        Independent of the memoized engine; used to test confluence.
        """
        r = self.rank
        work: Dict[Mono, Fraction] = {}
        _add(work, {tuple(w): Fraction(c) for w, c in terms.items()})
        done: Terms = {}
        while work:
            w = rng.choice(sorted(work))
            c = work.pop(w)
            bad = [i for i in range(len(w) - 1)
                   if r[w[i]] > r[w[i + 1]] or (w[i] == w[i + 1] and self._odd[w[i]])]
            if not bad:
                _add(done, {w: c})
                continue
            i = rng.choice(bad)
            x, y = w[i], w[i + 1]
            head, tail = w[:i], w[i + 2:]
            new: Dict[Mono, Fraction] = {}
            if x == y:
                for k, v in self.g.bracket(x, x).items():
                    _add(new, {head + (k,) + tail: v / 2})
            else:
                sign = -1 if self._odd[x] and self._odd[y] else 1
                _add(new, {head + (y, x) + tail: Fraction(sign)})
                for k, v in self.g.bracket(x, y).items():
                    _add(new, {head + (k,) + tail: v})
            _add(work, new, c)
        return done

    # -- monomial data ------------------------------------------------------
    def mono_parity(self, m: Mono) -> int:
        return sum(self._odd[k] for k in m) & 1

    def mono_weight(self, m: Mono) -> Tuple[int, ...]:
        w = [0] * self.n
        for k in m:
            for i, x in enumerate(self.g.weight[k]):
                w[i] += x
        return tuple(w)

    def mono_grade(self, m: Mono) -> int:
        return sum(self.g.grade[k] for k in m)

    def render_mono(self, m: Mono) -> str:
        if not m:
            return "1"
        parts = []
        i = 0
        while i < len(m):
            j = i
            while j < len(m) and m[j] == m[i]:
                j += 1
            name = self.g.name(m[i])
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)


class UEAElem:
    """Sparse sum of PBW monomials with rational coefficients; immutable."""

    __slots__ = ("U", "_terms")

    def __init__(self, U: UEA, terms: Terms):
        self.U = U
        self._terms = {k: v for k, v in terms.items() if v}

    @property
    def terms(self) -> Terms:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _same(self, other: "UEAElem"):
        if other.U is not self.U:
            raise ValueError("elements of different enveloping algebras / PBW orders")

    def __add__(self, other):
        if not isinstance(other, UEAElem):
            other = self.U.one() * Fraction(other)
        self._same(other)
        out = dict(self._terms)
        _add(out, other._terms)
        return UEAElem(self.U, out)

    __radd__ = __add__

    def __neg__(self):
        return UEAElem(self.U, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, UEAElem):
            return multiply(self, other)
        c = Fraction(other)
        return UEAElem(self.U, {k: c * v for k, v in self._terms.items()} if c else {})

    def __rmul__(self, other):
        c = Fraction(other)
        return UEAElem(self.U, {k: c * v for k, v in self._terms.items()} if c else {})

    def __eq__(self, other):
        if isinstance(other, UEAElem):
            return self.U is other.U and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=-1)

    def parity(self) -> int:
        ps = {self.U.mono_parity(m) for m in self._terms}
        if len(ps) > 1:
            raise ValueError("mixed parity")
        return ps.pop() if ps else 0

    def weights(self):
        return {self.U.mono_weight(m) for m in self._terms}

    def homogeneous_parts(self):
        """Split by monomial parity: {0: even part, 1: odd part}."""
        parts: Dict[int, Terms] = {0: {}, 1: {}}
        for m, c in self._terms.items():
            parts[self.U.mono_parity(m)][m] = c
        return {p: UEAElem(self.U, t) for p, t in parts.items() if t}

    def sorted_terms(self):
        r = self.U.rank
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), [r[k] for k in t[0]]))

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = self.U.render_mono(m)
            mag = abs(c)
            body = str(mag) if mono == "1" else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __str__ = render

    def __repr__(self):
        return f"UEAElem({self.render()})"

    def to_order(self, U: UEA) -> "UEAElem":
        """Re-straighten in another PBW order of the same algebra."""
        if U.g is not self.U.g:
            raise ValueError("different superalgebras")
        if U is self.U:
            return self
        return UEAElem(U, U.normal_form_terms(self._terms))


def multiply(a: UEAElem, b: UEAElem) -> UEAElem:
    a._same(b)
    U = a.U
    out: Terms = {}
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            _add(out, U.mono_mul(m1, m2), c1 * c2)
    return UEAElem(U, out)


def pbw_normal_form(U: UEA, word: Sequence, coeff=1) -> UEAElem:
    return U.word(word, coeff)


def adjoint(x, u: UEAElem) -> UEAElem:
    """ad_x(u) = x u - (-1)^{|x||u|} u x, extended linearly over parities.

    ``x`` is a basis index, a generator name, a combination dict or a
    homogeneous UEAElem.
    """
    U = u.U
    if isinstance(x, UEAElem):
        xe = x
    elif isinstance(x, dict):
        xe = U.from_combo(x)
    else:
        xe = U.gen(x)
    if xe.is_zero():
        return U.zero()
    px = xe.parity()
    out = U.zero()
    for pu, part in u.homogeneous_parts().items():
        sign = -1 if px and pu else 1
        out = out + multiply(xe, part) - multiply(part, xe) * sign
    return out


@lru_cache(maxsize=None)
def enveloping(n: int, order: str = "grade") -> UEA:
    """Shared UEA instance (memo tables are write-once caches)."""
    return UEA(superalgebra(n), order)


def hc_project(u: UEAElem) -> WeightPoly:
    """Harish-Chandra projection along n^- U + U n^+, as a polynomial in mu."""
    U = u.U
    g = U.g
    tri = enveloping(g.n, "triangular") if U.g is superalgebra(g.n) else UEA(g, "triangular")
    zero_w = (0,) * g.n
    weight_zero = {m: c for m, c in u.items() if U.mono_weight(m) == zero_w}
    nf = tri.normal_form_terms(weight_zero)
    cart = {k: i for i, k in enumerate(g.cartan)}
    out: Dict[Tuple[int, ...], Fraction] = {}
    for m, c in nf.items():
        if all(k in cart for k in m):
            e = [0] * g.n
            for k in m:
                e[cart[k]] += 1
            out[tuple(e)] = out.get(tuple(e), 0) + c
    return WeightPoly(out, g.n)


def h0_project(u: UEAElem) -> UEAElem:
    """Projection onto U(g_0) along g_1 U + U g_-1 (grade-order PBW)."""
    U = u.U
    if U.order != "grade":
        u = u.to_order(enveloping(U.n, "grade"))
        U = u.U
    g = U.g
    return UEAElem(U, {m: c for m, c in u.items() if all(g.grade[k] == 0 for k in m)})


def odd_root_order(n: int) -> List[Tuple[int, int]]:
    """The pairs (i, j), i < j, in the order eps_i + eps_j < eps_p + eps_q
    iff i < p or (i = p and j < q)."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def big_Y(U: UEA) -> UEAElem:
    """Y = X_{-a_1} X_{-a_2} ... X_{-a_d} in the root order."""
    g = U.g
    word = [g.root_index(_neg_sum(g.n, i, j)) for i, j in odd_root_order(g.n)]
    return U.word(word)


def big_X(U: UEA) -> UEAElem:
    """X = X_{a_d} ... X_{a_1}: the proof of XYv = Delta v applies X_{a_1} first."""
    g = U.g
    word = [g.root_index(_pos_sum(g.n, i, j)) for i, j in odd_root_order(g.n)]
    return U.word(list(reversed(word)))


def _pos_sum(n, i, j):
    v = [0] * n
    v[i] += 1
    v[j] += 1
    return tuple(v)


def _neg_sum(n, i, j):
    return tuple(-x for x in _pos_sum(n, i, j))


def y_generators(g: SuperAlgebra) -> List[int]:
    """Basis indices of X_{-a_1}, ..., X_{-a_d}."""
    return [g.root_index(_neg_sum(g.n, i, j)) for i, j in odd_root_order(g.n)]


def y_adjoint(ys: Iterable[int], u: UEAElem) -> UEAElem:
    """Y^ad(u) = ad_{y_1} ad_{y_2} ... ad_{y_d} (u)."""
    for y in reversed(list(ys)):
        u = adjoint(y, u)
    return u
