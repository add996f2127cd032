"""Verma modules M_mu = Ind_{g_0 + g_1}^g M0_mu with g_1 M0_mu = 0.

M_mu is free over U(n^-) with n^- = g_-1 + n0^-, so a vector is a sparse
sum of n^- PBW monomials (g_-1 factors first, then n0^- factors) applied to
the highest vector v.  Coefficients are Fractions for a numeric highest
weight and :class:`WeightPoly` for a symbolic one; both run through the
same code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .report import CheckReport
from .rootdata import delta_poly, symbolic_weight
from .superalg import BasisIndex, SuperAlgebra, superalgebra
from .symcore import WeightPoly, poly_equal, render_poly, scalar_value
from .uea import UEAElem, order_ranks

Mono = Tuple[int, ...]


def _add(dst: dict, src: dict, c=1):
    for k, v in src.items():
        s = dst.get(k, 0) + c * v
        if s:
            dst[k] = s
        else:
            dst.pop(k, None)


class VermaModule:
    """M_mu over p~(n); ``mu`` entries are Fractions or WeightPolys."""

    def __init__(self, n: int, mu: Sequence):
        if len(mu) != n:
            raise ValueError(f"highest weight has {len(mu)} coordinates, expected {n}")
        self.g: SuperAlgebra = superalgebra(n)
        self.n = n
        self.mu = tuple(mu)
        self.rank = order_ranks(self.g, "triangular")
        self._cartan = {k: i for i, k in enumerate(self.g.cartan)}
        self._memo: Dict[Tuple[int, Mono], dict] = {}

    # -- vectors ------------------------------------------------------------
    def highest_vector(self) -> "VermaVector":
        return VermaVector(self, {(): Fraction(1)})

    def vector(self, terms: dict) -> "VermaVector":
        return VermaVector(self, dict(terms))

    def mono_weight(self, m: Mono) -> tuple:
        w = list(self.mu)
        for k in m:
            for i, x in enumerate(self.g.weight[k]):
                if x:
                    w[i] = w[i] + x
        return tuple(w)

    # -- action -------------------------------------------------------------
    def act_gen(self, x: int, m: Mono) -> dict:
        """e_x applied to the basis vector m v."""
        key = (x, m)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        g = self.g
        if x in self._cartan:
            c = self.mono_weight(m)[self._cartan[x]]
            res = {m: c} if c else {}
        elif not m:
            res = {} if x in g.nplus else {(x,): Fraction(1)}
        else:
            y, rest = m[0], m[1:]
            if x in g.nminus and (self.rank[x] < self.rank[y] or (x == y and not g.parity[x])):
                res = {(x,) + m: Fraction(1)}
            elif x == y:
                res = {}
                for k, c in g.bracket(x, x).items():
                    _add(res, self.act_gen(k, rest), c / 2)
            else:
                sign = -1 if g.parity[x] and g.parity[y] else 1
                res = {}
                for mono, c in self.act_gen(x, rest).items():
                    _add(res, self.act_gen(y, mono), sign * c)
                for k, c in g.bracket(x, y).items():
                    _add(res, self.act_gen(k, rest), c)
        self._memo[key] = res
        return res

    def act_word(self, word: Sequence[int], vec: "VermaVector") -> "VermaVector":
        cur = dict(vec.terms)
        for x in reversed(word):
            nxt: dict = {}
            for m, c in cur.items():
                _add(nxt, self.act_gen(x, m), c)
            cur = nxt
        return VermaVector(self, cur)

    def act(self, u: UEAElem, vec: "VermaVector") -> "VermaVector":
        if u.U.g is not self.g:
            raise ValueError("element and module belong to different algebras")
        out: dict = {}
        for word, c in u.items():
            _add(out, self.act_word(word, vec).terms, c)
        return VermaVector(self, out)

    def render_mono(self, m: Mono) -> str:
        return "*".join(self.g.name(k) for k in m) + ("*v" if m else "v")


class VermaVector:
    """Finite sum of n^- monomials applied to the highest vector."""

    __slots__ = ("module", "terms")

    def __init__(self, module: VermaModule, terms: dict):
        self.module = module
        self.terms = {k: v for k, v in terms.items() if v}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "VermaVector"):
        out = dict(self.terms)
        _add(out, other.terms)
        return VermaVector(self.module, out)

    def __neg__(self):
        return VermaVector(self.module, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "VermaVector":
        return VermaVector(self.module, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, VermaVector):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(poly_equal(self.terms[k], other.terms[k]) for k in self.terms)

    def coefficient(self, m: Mono = ()):
        return self.terms.get(m, Fraction(0))

    def render(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
        return " + ".join(f"({_render_coeff(c)})*{self.module.render_mono(m)}" for m, c in items)

    __str__ = render

    def __repr__(self):
        return f"VermaVector({self.render()})"


def _render_coeff(c) -> str:
    return render_poly(c) if isinstance(c, WeightPoly) else str(c)


def act(u: UEAElem, vec: VermaVector) -> VermaVector:
    return vec.module.act(u, vec)


def weight_of(vec: VermaVector):
    """Common weight of all terms, or the string ``"mixed"``."""
    module = vec.module
    ws = [module.mono_weight(m) for m in vec.terms]
    if not ws:
        return "mixed"
    first = ws[0]
    for w in ws[1:]:
        if not all(poly_equal(a, b) for a, b in zip(first, w)):
            return "mixed"
    return first


def in_line_of(vec: VermaVector, target: VermaVector) -> bool:
    """Whether vec lies in C * target (zero counts)."""
    if vec.is_zero():
        return True
    if target.is_zero() or set(vec.terms) - set(target.terms):
        return False
    m0 = next(iter(target.terms))
    num, den = vec.terms.get(m0, 0), target.terms[m0]
    # cross-multiplied comparison works for polynomial coefficients too
    return all(poly_equal(vec.terms.get(m, 0) * den, t * num) for m, t in target.terms.items())


def _equal_weights(a, b) -> bool:
    return poly_equal(a, b)


def constrained_symbolic_weight(n: int) -> tuple:
    """(mu1, ..., mu_{n-1}, mu_{n-1}): generic weight with mu_{n-1} = mu_n."""
    mu = list(symbolic_weight(n))
    mu[-1] = mu[-2]
    return tuple(mu)


def singular_vector_check(n: int, mu: Sequence | None = None) -> CheckReport:
    """u = X_{eps_n - eps_{n-1}} v is n^+-invariant and n^+ w lies in C u,
    w = X_{-eps_n - eps_{n-1}} v, whenever mu_{n-1} = mu_n."""
    if mu is None:
        mu = constrained_symbolic_weight(n)
    if not _equal_weights(mu[n - 2], mu[n - 1]):
        raise ValueError("singular_vector_check requires mu_{n-1} = mu_n")
    M = VermaModule(n, mu)
    g = M.g
    v = M.highest_vector()
    f = g.index[BasisIndex("E", n - 1, n - 2)]
    c = g.index[BasisIndex("C", n - 2, n - 1)]
    u = M.act_word([f], v)
    w = M.act_word([c], v)
    report = CheckReport(f"singular vectors at mu_(n-1) = mu_n, n = {n}")
    positives = sorted(g.n0_plus) + list(g.g1)
    for x in positives:
        xu = M.act_word([x], u)
        report.add(f"{g.name(x)} . u = 0", xu.is_zero(), xu.render())
    for x in positives:
        xw = M.act_word([x], w)
        report.add(f"{g.name(x)} . w in C u", in_line_of(xw, u), xw.render())
    return report


def delta_vanishing_reducibility(n: int, mu: Sequence) -> bool:
    """Whether Delta(mu) = 0.

    Delta(mu) != 0 means the highest vector is recovered from Yv (XYv =
    Delta(mu) v), so this mechanism gives no proper submodule; True is only
    a hint that M_mu may be reducible, never a proof.
    """
    vals = [scalar_value(x) for x in mu]
    if any(v is None for v in vals):
        raise TypeError("numeric weight required")
    return delta_poly(n)(*vals) == 0


def xy_delta_check(n: int, mu: Sequence | None = None) -> CheckReport:
    """X (Y v) = Delta(mu) v, symbolic by default."""
    from .uea import big_X, big_Y, enveloping

    mu = symbolic_weight(n) if mu is None else tuple(mu)
    M = VermaModule(n, mu)
    U = enveloping(n)
    v = M.highest_vector()
    xyv = M.act(big_X(U), M.act(big_Y(U), v))
    delta = delta_poly(n)
    value = delta.subs(dict(enumerate(mu))) if any(isinstance(x, WeightPoly) for x in mu) else delta(*mu)
    report = CheckReport(f"X Y v = Delta(mu) v, n = {n}")
    report.add("X Y v = Delta(mu) v", xyv == v.scale(value), f"Delta(mu) = {_render_coeff(value)}")
    return report
