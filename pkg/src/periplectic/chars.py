"""Truncated formal characters of M0_mu, M_mu and P_mu.

A series stores multiplicities by the drop ``top - weight`` (an integer
vector).  Depth is measured by the linear functional f(eps_k) = n - k + 1/2
(1-based k): it gives eps_i - eps_j height j - i in simple roots and the
lowest odd root eps_{n-1} + eps_n weight 2, and since it is linear the
product of truncated series can be re-truncated without loss.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .rootdata import positive_even_roots, roots
from .symcore import as_scalar

Drop = Tuple[int, ...]


def depth_of(drop: Sequence[int]) -> int:
    """f(drop) with f(eps_k) = n - k + 1/2; integral on the root lattice."""
    n = len(drop)
    twice = sum(x * (2 * (n - k) - 1) for k, x in enumerate(drop))  # k is 0-based
    if twice % 2:
        raise ValueError(f"{drop} is not in the root lattice")
    return twice // 2


def odd_negative_roots(n: int) -> List[Drop]:
    """eps_i + eps_j, i < j, as drops (weights of g_-1 negated)."""
    return [tuple(-x for x in r.vector) for r in roots(n).minus]


def odd_positive_roots(n: int) -> List[Drop]:
    return [r.vector for r in roots(n).plus]


@dataclass
class CharSeries:
    top: Tuple[Fraction, ...]
    depth: int
    mults: Dict[Drop, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.top)

    def weight(self, drop: Drop) -> Tuple[Fraction, ...]:
        return tuple(t - x for t, x in zip(self.top, drop))

    def drop_of(self, weight: Sequence) -> Drop:
        d = tuple(t - as_scalar(w) for t, w in zip(self.top, weight))
        if any(x.denominator != 1 for x in d):
            raise ValueError("weight is not in top - root lattice")
        return tuple(int(x) for x in d)

    def mult(self, weight: Sequence) -> int:
        return self.mults.get(self.drop_of(weight), 0)

    def mult_at_drop(self, drop: Drop) -> int:
        return self.mults.get(tuple(drop), 0)

    def items(self):
        """(weight, multiplicity) pairs sorted by depth, then drop."""
        for d in sorted(self.mults, key=lambda d: (depth_of(d), d)):
            yield self.weight(d), self.mults[d]

    def __eq__(self, other):
        if not isinstance(other, CharSeries):
            return NotImplemented
        return (self.top, self.depth, self.mults) == (other.top, other.depth, other.mults)

    def to_list(self) -> List[list]:
        return [[[str(x) for x in w], m] for w, m in self.items()]

    def to_text(self) -> str:
        return json.dumps({"top": [str(x) for x in self.top], "depth": self.depth,
                           "terms": self.to_list()}, sort_keys=True)


def _clean(mults: Dict[Drop, int], depth: int) -> Dict[Drop, int]:
    return {d: m for d, m in mults.items() if m and depth_of(d) <= depth}


def _shift(a: Drop, b: Drop, s: int = 1) -> Drop:
    return tuple(x + s * y for x, y in zip(a, b))


def _times_geometric(mults: Dict[Drop, int], root: Drop, depth: int) -> Dict[Drop, int]:
    """Multiply by 1 / (1 - e^{-root}) and truncate."""
    step = depth_of(root)
    if step <= 0:
        raise ValueError("depth functional must be positive on the root")
    out: Dict[Drop, int] = {}
    for d, m in mults.items():
        cur = d
        while depth_of(cur) <= depth:
            out[cur] = out.get(cur, 0) + m
            cur = _shift(cur, root)
    return out


def _times_binomial(mults: Dict[Drop, int], shift: Drop, depth: int | None) -> Dict[Drop, int]:
    """Multiply by (1 + e^{-shift}); shift may be negative (a raising factor)."""
    out = dict(mults)
    for d, m in mults.items():
        nd = _shift(d, shift)
        out[nd] = out.get(nd, 0) + m
    if depth is None:
        return {d: m for d, m in out.items() if m}
    return _clean(out, depth)


def _numeric_mu(mu: Sequence) -> Tuple[Fraction, ...]:
    return tuple(as_scalar(x) for x in mu)


def char_M0(n: int, mu: Sequence, depth: int) -> CharSeries:
    """Character of the g_0 Verma module: Kostant partition counts."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    mu = _numeric_mu(mu)
    if len(mu) != n:
        raise ValueError("weight length mismatch")
    mults: Dict[Drop, int] = {(0,) * n: 1}
    for root in positive_even_roots(n):
        mults = _times_geometric(mults, root, depth)
    return CharSeries(mu, depth, mults)


def char_product_g_minus(n: int, base: CharSeries) -> CharSeries:
    """base * prod_{i<j} (1 + e^{-eps_i - eps_j})."""
    if base.n != n:
        raise ValueError("rank mismatch")
    mults = dict(base.mults)
    for r in odd_negative_roots(n):
        mults = _times_binomial(mults, r, base.depth)
    return CharSeries(base.top, base.depth, mults)


def char_M(n: int, mu: Sequence, depth: int) -> CharSeries:
    return char_product_g_minus(n, char_M0(n, mu, depth))


def char_M_bruteforce(n: int, mu: Sequence, depth: int) -> CharSeries:
    """Weight-space dimensions of M_mu by direct basis enumeration.

    M_mu is free over U(g_-1) with M0_mu free over U(n0^-), so a basis is
    (subset of g_-1 roots) x (exponent vector over positive even roots).
    """
    mu = _numeric_mu(mu)
    even = positive_even_roots(n)
    odd = odd_negative_roots(n)
    mults: Dict[Drop, int] = {}
    zero = (0,) * n
    for k in range(len(odd) + 1):
        for subset in itertools.combinations(odd, k):
            base = zero
            for r in subset:
                base = _shift(base, r)
            if depth_of(base) > depth:
                continue
            _enumerate_exponents(even, 0, base, depth, mults)
    return CharSeries(mu, depth, mults)


def _enumerate_exponents(even: List[Drop], i: int, cur: Drop, depth: int, out: Dict[Drop, int]):
    if i == len(even):
        out[cur] = out.get(cur, 0) + 1
        return
    while depth_of(cur) <= depth:
        _enumerate_exponents(even, i + 1, cur, depth, out)
        cur = _shift(cur, even[i])


def _sum_of(vectors: Iterable[Drop], n: int) -> Drop:
    total = (0,) * n
    for v in vectors:
        total = _shift(total, v)
    return total


def char_P_induced(n: int, mu: Sequence, depth: int) -> CharSeries:
    """ch M0_mu * prod_{g_1}(1 + e^alpha) * prod_{i<j}(1 + e^{-eps_i-eps_j}),
    truncated relative to the top weight mu + (sum of g_1 roots)."""
    mu = _numeric_mu(mu)
    raise_all = _sum_of(odd_positive_roots(n), n)
    top = tuple(m + r for m, r in zip(mu, raise_all))
    # re-express M0_mu relative to the new top
    m0 = char_M0(n, mu, depth)
    # raising factors can pull deep terms back up, so no truncation until
    # they are all applied; M0 at depth `depth` is enough since f >= 0 on
    # every remaining drop
    mults = {_shift(d, raise_all): m for d, m in m0.mults.items()}
    for alpha in odd_positive_roots(n):
        # e^{alpha} lowers the drop from top by alpha
        mults = _times_binomial(mults, tuple(-x for x in alpha), None)
    mults = _clean(mults, depth)
    for r in odd_negative_roots(n):
        mults = _times_binomial(mults, r, depth)
    return CharSeries(top, depth, mults)


def char_P_filtration(n: int, mu: Sequence, depth: int) -> Tuple[CharSeries, int]:
    """sum over subsets gamma of g_1 roots of ch M_{mu + gamma}; returns the
    series and the number of gamma terms."""
    mu = _numeric_mu(mu)
    plus = odd_positive_roots(n)
    raise_all = _sum_of(plus, n)
    top = tuple(m + r for m, r in zip(mu, raise_all))
    total: Dict[Drop, int] = {}
    count = 0
    for k in range(len(plus) + 1):
        for gamma in itertools.combinations(plus, k):
            count += 1
            g = _sum_of(gamma, n)
            offset = tuple(a - b for a, b in zip(raise_all, g))  # top - (mu + gamma)
            room = depth - depth_of(offset)
            if room < 0:
                continue
            sub = char_M(n, tuple(m + x for m, x in zip(mu, g)), room)
            for d, m in sub.mults.items():
                key = _shift(d, offset)
                total[key] = total.get(key, 0) + m
    return CharSeries(top, depth, _clean(total, depth)), count


def char_P(n: int, mu: Sequence, depth: int) -> Tuple[CharSeries, CharSeries, int]:
    """Both computations of ch P_mu and the number of filtration terms."""
    induced = char_P_induced(n, mu, depth)
    filtered, count = char_P_filtration(n, mu, depth)
    return induced, filtered, count


def filtration_check(n: int, mu: Sequence, depth: int) -> bool:
    induced, filtered, count = char_P(n, mu, depth)
    return induced == filtered and count == 2 ** (n * (n + 1) // 2)
