"""Root data of p~(n): roots, rho_0, the dot action, Delta, Theta, typicality.

Weights are plain tuples of coordinates in the basis eps_1..eps_n; a
coordinate may be a Fraction or a :class:`WeightPoly` (symbolic weights).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

from .symcore import WeightPoly, as_scalar, scalar_value

Weight = Tuple


MAX_ENUMERATED_N = 8


@dataclass(frozen=True)
class Root:
    vector: Tuple[int, ...]
    grade: int  # -1, 0, +1

    @property
    def parity(self) -> str:
        return "even" if self.grade == 0 else "odd"

    def __str__(self):
        return format_weight(self.vector, basis="e")


class RootSystem(NamedTuple):
    even: List[Root]
    minus: List[Root]  # roots of g_{-1}
    plus: List[Root]  # roots of g_1

    def all(self) -> List[Root]:
        return self.even + self.minus + self.plus


def _eps(n: int, *idx_sign) -> Tuple[int, ...]:
    v = [0] * n
    for i, s in idx_sign:
        v[i] += s
    return tuple(v)


def _check_n(n: int):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")


def roots(n: int) -> RootSystem:
    """The three root families of p~(n) (indices 0-based internally)."""
    _check_n(n)
    even = [Root(_eps(n, (i, 1), (j, -1)), 0)
            for i in range(n) for j in range(n) if i != j]
    minus = [Root(_eps(n, (i, -1), (j, -1)), -1)
             for i in range(n) for j in range(i + 1, n)]
    plus = [Root(_eps(n, (i, 1), (j, 1)), 1)
            for i in range(n) for j in range(i, n)]
    return RootSystem(even, minus, plus)


def positive_even_roots(n: int) -> List[Tuple[int, ...]]:
    return [_eps(n, (i, 1), (j, -1)) for i in range(n) for j in range(i + 1, n)]


def rho0(n: int) -> Tuple[Fraction, ...]:
    """Half sum of the positive even roots."""
    _check_n(n)
    total = [Fraction(0)] * n
    for r in positive_even_roots(n):
        for k, x in enumerate(r):
            total[k] += Fraction(x, 2)
    return tuple(total)


def symbolic_weight(n: int) -> Tuple[WeightPoly, ...]:
    """The generic weight (mu1, ..., mun)."""
    return WeightPoly.gens(n)


def permute(w: Sequence[int], mu: Sequence) -> tuple:
    """Coordinate action of a permutation: (w.mu)[w[i]] = mu[i]."""
    out = [None] * len(mu)
    for i, x in enumerate(mu):
        out[w[i]] = x
    return tuple(out)


def dot_action(w: Sequence[int], mu: Sequence) -> tuple:
    """mu^w = w(mu + rho0) - rho0."""
    n = len(mu)
    if sorted(w) != list(range(n)):
        raise ValueError(f"{w!r} is not a permutation of 0..{n - 1}")
    rho = rho0(n)
    shifted = [m + r for m, r in zip(mu, rho)]
    return tuple(x - r for x, r in zip(permute(w, shifted), rho))


def compose(v: Sequence[int], w: Sequence[int]) -> Tuple[int, ...]:
    """(v o w)(i) = v(w(i))."""
    return tuple(v[w[i]] for i in range(len(w)))


def invert(w: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x] = i
    return tuple(out)


def _linear(n: int, coeffs: dict, const) -> WeightPoly:
    p = WeightPoly.const(const, n)
    for i, c in coeffs.items():
        p = p + WeightPoly.var(i, n) * c
    return p


def delta_poly(n: int) -> WeightPoly:
    """prod_{i<j} (mu_i - mu_j + j - i - 1)."""
    _check_n(n)
    p = WeightPoly.const(1, n)
    for i in range(n):
        for j in range(i + 1, n):
            p = p * _linear(n, {i: 1, j: -1}, j - i - 1)
    return p


def theta_factor(n: int, i: int, j: int) -> WeightPoly:
    """(mu + rho0, eps_i - eps_j) - 1 as a polynomial in mu."""
    rho = rho0(n)
    return _linear(n, {i: 1, j: -1}, rho[i] - rho[j] - 1)


def theta_poly(n: int) -> WeightPoly:
    """prod_{i != j} ((mu + rho0, eps_i - eps_j) - 1)."""
    _check_n(n)
    p = WeightPoly.const(1, n)
    for i in range(n):
        for j in range(n):
            if i != j:
                p = p * theta_factor(n, i, j)
    return p


def dot_substitute(p: WeightPoly, w: Sequence[int]) -> WeightPoly:
    """The polynomial mu -> p(mu^w)."""
    n = len(w)
    return p.subs(dict(enumerate(dot_action(w, symbolic_weight(n)))))


def _numeric(mu: Sequence) -> Tuple[Fraction, ...]:
    vals = tuple(scalar_value(x) for x in mu)
    if any(v is None for v in vals):
        raise TypeError("numeric weight required, got a symbolic coordinate")
    return vals


def is_typical(mu: Sequence) -> bool:
    """True iff Theta(mu) != 0."""
    vals = _numeric(mu)
    return theta_poly(len(vals))(*vals) != 0


def same_central_character(mu: Sequence, nu: Sequence) -> bool:
    """chi_mu == chi_nu: both atypical, or both typical and dot-conjugate."""
    mu, nu = _numeric(mu), _numeric(nu)
    if len(mu) != len(nu):
        raise ValueError("weights of different rank")
    n = len(mu)
    if n > MAX_ENUMERATED_N:
        raise ValueError(f"n = {n} exceeds the enumeration guard ({MAX_ENUMERATED_N})")
    t_mu, t_nu = is_typical(mu), is_typical(nu)
    if not t_mu and not t_nu:
        return True
    if t_mu != t_nu:
        return False
    return any(dot_action(w, nu) == mu for w in itertools.permutations(range(n)))


def format_weight(mu: Sequence, basis: str = "e") -> str:
    """Render a weight like ``e1 - e2`` (integer coordinates) or a tuple."""
    if all(isinstance(x, int) for x in mu):
        parts = []
        for i, x in enumerate(mu):
            if not x:
                continue
            mag = "" if abs(x) == 1 else str(abs(x))
            parts.append(("-" if x < 0 else "+", f"{mag}{basis}{i + 1}"))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s
    return "(" + ", ".join(str(x) for x in mu) + ")"


def num_positive_even(n: int) -> int:
    return math.comb(n, 2)


def parse_weight(text: str, n: int):
    """Parse ``"p/q,..."`` or ``"symbolic"``."""
    if text.strip() == "symbolic":
        return symbolic_weight(n)
    vals = tuple(as_scalar(t) for t in text.split(","))
    if len(vals) != n:
        raise ValueError(f"expected {n} coordinates, got {len(vals)}")
    return vals
