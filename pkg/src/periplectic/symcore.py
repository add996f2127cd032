"""Exact scalars, weight polynomials and the Grassmann polynomial superring.

Scalars are :class:`fractions.Fraction`.  :class:`WeightPoly` is a sparse
commutative polynomial in indexed variables ``mu1 .. mun`` (plus any extra
indexed variables, e.g. a deformation parameter ``t``) with rational
coefficients.  :class:`GrassmannPoly` lives in a ring with named even
(commuting) and odd (anticommuting, square-zero) generators.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Scalar = Fraction
Exps = Tuple[int, ...]


def as_scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def _trim(exps: Sequence[int], nvars: int) -> Exps:
    return tuple(exps) + (0,) * (nvars - len(exps))


class WeightPoly:
    """Sparse polynomial over Q in ``nvars`` indexed variables.

    Instances are immutable; arithmetic returns new objects.  Zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "nvars", "names", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None,
                 nvars: int = 0, names: Sequence[str] | None = None):
        clean: Dict[Exps, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) > nvars:
                    if any(exps[nvars:]):
                        raise ValueError("exponent vector longer than nvars")
                    exps = exps[:nvars]
                key = _trim(exps, nvars)
                c = as_scalar(c)
                if c:
                    s = clean.get(key, 0) + c
                    if s:
                        clean[key] = s
                    else:
                        clean.pop(key, None)
        self._terms = clean
        self.nvars = nvars
        self.names = tuple(names) if names is not None else None
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c, nvars: int = 0) -> "WeightPoly":
        return cls({(): c}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "WeightPoly":
        """The i-th variable (0-based), printed as ``mu{i+1}``."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars)

    @classmethod
    def gens(cls, nvars: int) -> Tuple["WeightPoly", ...]:
        return tuple(cls.var(i, nvars) for i in range(nvars))

    # basic protocol
    @property
    def terms(self) -> Dict[Exps, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def live_vars(self) -> Tuple[int, ...]:
        used = set()
        for e in self._terms:
            used.update(i for i, k in enumerate(e) if k)
        return tuple(sorted(used))

    def _coerce(self, other) -> "WeightPoly":
        if isinstance(other, WeightPoly):
            return other
        return WeightPoly({(): as_scalar(other)}, self.nvars)

    def _nv(self, other: "WeightPoly") -> int:
        return max(self.nvars, other.nvars)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        nv = self._nv(other)
        out = {_trim(e, nv): c for e, c in self._terms.items()}
        for e, c in other._terms.items():
            k = _trim(e, nv)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return WeightPoly._raw(out, nv)

    __radd__ = __add__

    def __neg__(self):
        return WeightPoly._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, WeightPoly):
            try:
                c = as_scalar(other)
            except TypeError:
                return NotImplemented
            if not c:
                return WeightPoly({}, self.nvars)
            return WeightPoly._raw({e: v * c for e, v in self._terms.items()}, self.nvars)
        nv = self._nv(other)
        out: Dict[Exps, Fraction] = {}
        a = [(_trim(e, nv), c) for e, c in self._terms.items()]
        b = [(_trim(e, nv), c) for e, c in other._terms.items()]
        for e1, c1 in a:
            for e2, c2 in b:
                k = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return WeightPoly._raw(out, nv)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_scalar(other)
        return self * (1 / c)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = WeightPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    @classmethod
    def _raw(cls, terms: Dict[Exps, Fraction], nvars: int) -> "WeightPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p.names = None
        p._hash = None
        return p

    def __eq__(self, other):
        if not isinstance(other, WeightPoly):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return poly_equal(self, other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(
                (e[:max((i + 1 for i, k in enumerate(e) if k), default=0)], c)
                for e, c in self._terms.items()))
        return self._hash

    def sorted_terms(self):
        """Terms in degree-lexicographic order, highest first."""
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def __call__(self, *point):
        return poly_eval(self, list(point))

    def subs(self, mapping: Mapping[int, object]) -> "WeightPoly":
        """Substitute variables (by index) with scalars or polynomials."""
        nv = max([self.nvars] + [x.nvars for x in mapping.values() if isinstance(x, WeightPoly)])
        powers: Dict[Tuple[int, int], object] = {}
        acc: Dict[Exps, Fraction] = {}
        for e, c in self._terms.items():
            term = WeightPoly({tuple(0 if i in mapping else k for i, k in enumerate(e)): c}, nv)
            for i, k in enumerate(e):
                if k and i in mapping:
                    if (i, k) not in powers:
                        powers[(i, k)] = _pow(mapping[i], k)
                    term = term * powers[(i, k)]
            for key, v in term._terms.items():
                acc[key] = acc.get(key, 0) + v
        return WeightPoly(acc, nv)

    def __repr__(self):
        return f"WeightPoly({render_poly(self)})"

    def __str__(self):
        return render_poly(self)


def _pow(x, k):
    if isinstance(x, WeightPoly):
        return x ** k
    return as_scalar(x) ** k


def _var_name(i: int, names) -> str:
    if names is not None and i < len(names):
        return names[i]
    return f"mu{i + 1}"


def render_poly(p: WeightPoly, names: Sequence[str] | None = None) -> str:
    """Deterministic text rendering, degree-lex order, e.g. ``mu1 - mu2``."""
    names = names if names is not None else p.names
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in p.sorted_terms():
        factors = []
        for i, k in enumerate(exps):
            if k == 1:
                factors.append(_var_name(i, names))
            elif k > 1:
                factors.append(f"{_var_name(i, names)}^{k}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_eval(p: WeightPoly, point: Sequence) -> Fraction:
    """Evaluate ``p`` exactly; ``len(point)`` must equal ``p.nvars``."""
    if len(point) != p.nvars:
        raise ValueError(f"arity mismatch: polynomial has {p.nvars} variables, got {len(point)} values")
    pt = [as_scalar(x) for x in point]
    total = Fraction(0)
    for e, c in p.items():
        v = c
        for x, k in zip(pt, e):
            if k:
                v *= x ** k
        total += v
    return total


def poly_equal(a, b) -> bool:
    """Exact equality of canonical forms (trailing unused variables ignored)."""
    if not isinstance(a, WeightPoly):
        a = WeightPoly.const(a, 0)
    if not isinstance(b, WeightPoly):
        b = WeightPoly.const(b, 0)
    nv = max(a.nvars, b.nvars)
    ta = {_trim(e, nv): c for e, c in a.items()}
    tb = {_trim(e, nv): c for e, c in b.items()}
    return ta == tb


def to_poly(x, nvars: int) -> WeightPoly:
    if isinstance(x, WeightPoly):
        return x
    return WeightPoly.const(x, nvars)


def scalar_value(x) -> Fraction | None:
    """Return ``x`` as a Fraction when it is (or is a constant) number, else None."""
    if isinstance(x, WeightPoly):
        return x.constant_value() if x.is_constant() else None
    return as_scalar(x)


# ---------------------------------------------------------------------------
# Grassmann polynomial superring
# ---------------------------------------------------------------------------

GKey = Tuple[Exps, Tuple[int, ...]]


def _merge_odd(a: Tuple[int, ...], b: Tuple[int, ...]):
    """Sign and sorted union of two strictly increasing index tuples, or None."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    if set(a) & set(b):
        return None
    # inversions between a (left) and b (right): pairs with a_i > b_j
    inv = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inv += j
    return (-1 if inv & 1 else 1), tuple(sorted(a + b))


class GrassmannRing:
    """Generator universe: named even generators and named odd generators."""

    def __init__(self, even: Sequence[str] = (), odd: Sequence[str] = ()):
        self.even = tuple(even)
        self.odd = tuple(odd)
        if len(set(self.even) | set(self.odd)) != len(self.even) + len(self.odd):
            raise ValueError("generator names must be distinct")
        self._even_idx = {n: i for i, n in enumerate(self.even)}
        self._odd_idx = {n: i for i, n in enumerate(self.odd)}

    def __eq__(self, other):
        return isinstance(other, GrassmannRing) and (self.even, self.odd) == (other.even, other.odd)

    def __hash__(self):
        return hash((self.even, self.odd))

    def __repr__(self):
        return f"GrassmannRing(even={list(self.even)}, odd={list(self.odd)})"

    def zero(self) -> "GrassmannPoly":
        return GrassmannPoly(self, {})

    def one(self) -> "GrassmannPoly":
        return self.scalar(1)

    def scalar(self, c) -> "GrassmannPoly":
        return GrassmannPoly(self, {((0,) * len(self.even), ()): c})

    def gen(self, name: str) -> "GrassmannPoly":
        if name in self._even_idx:
            e = [0] * len(self.even)
            e[self._even_idx[name]] = 1
            return GrassmannPoly(self, {(tuple(e), ()): 1})
        if name in self._odd_idx:
            return GrassmannPoly(self, {((0,) * len(self.even), (self._odd_idx[name],)): 1})
        raise KeyError(name)

    def is_odd(self, name: str) -> bool:
        return name in self._odd_idx


class GrassmannPoly:
    """Element of a :class:`GrassmannRing`; immutable."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: GrassmannRing, terms: Mapping[GKey, object]):
        self.ring = ring
        clean: Dict[GKey, Fraction] = {}
        for (e, o), c in terms.items():
            c = as_scalar(c)
            if not c:
                continue
            o = tuple(o)
            if list(o) != sorted(set(o)):
                sign_sorted = _sort_sign(o)
                if sign_sorted is None:
                    continue
                sgn, o = sign_sorted
                c = c * sgn
            key = (tuple(e), o)
            s = clean.get(key, 0) + c
            if s:
                clean[key] = s
            else:
                clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        return p

    def items(self):
        return self._terms.items()

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other: "GrassmannPoly"):
        if self.ring != other.ring:
            raise ValueError("generator universe mismatch")

    def _coerce(self, other):
        if isinstance(other, GrassmannPoly):
            self._check(other)
            return other
        return self.ring.scalar(as_scalar(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return GrassmannPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannPoly._raw(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GrassmannPoly):
            try:
                c = as_scalar(other)
            except TypeError:
                return NotImplemented
            return GrassmannPoly._raw(self.ring, {k: v * c for k, v in self._terms.items()} if c else {})
        return grassmann_mul(self, other)

    def __rmul__(self, other):
        # scalars commute with everything
        return self.__mul__(other)

    def __eq__(self, other):
        if isinstance(other, GrassmannPoly):
            return self.ring == other.ring and self._terms == other._terms
        try:
            return self._terms == self.ring.scalar(as_scalar(other))._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def parity_parts(self):
        """Split into (even part, odd part) by odd-degree parity."""
        ev = {k: c for k, c in self._terms.items() if len(k[1]) % 2 == 0}
        od = {k: c for k, c in self._terms.items() if len(k[1]) % 2 == 1}
        return GrassmannPoly._raw(self.ring, ev), GrassmannPoly._raw(self.ring, od)

    def odd_degree_part(self, k: int) -> "GrassmannPoly":
        return GrassmannPoly._raw(self.ring, {key: c for key, c in self._terms.items() if len(key[1]) == k})

    def diff(self, name: str) -> "GrassmannPoly":
        """Partial derivative; left derivative for odd generators."""
        ring = self.ring
        out: Dict[GKey, Fraction] = {}
        if name in ring._even_idx:
            i = ring._even_idx[name]
            for (e, o), c in self._terms.items():
                if e[i]:
                    ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                    out[(ne, o)] = out.get((ne, o), 0) + c * e[i]
        elif name in ring._odd_idx:
            j = ring._odd_idx[name]
            for (e, o), c in self._terms.items():
                if j in o:
                    p = o.index(j)
                    no = o[:p] + o[p + 1:]
                    out[(e, no)] = out.get((e, no), 0) + (-c if p & 1 else c)
        else:
            raise KeyError(name)
        return GrassmannPoly(ring, out)

    def subs_even(self, values: Mapping[str, object]) -> "GrassmannPoly":
        """Substitute scalars for even generators."""
        ring = self.ring
        idx = {ring._even_idx[k]: as_scalar(v) for k, v in values.items()}
        out: Dict[GKey, Fraction] = {}
        for (e, o), c in self._terms.items():
            ne = list(e)
            for i, v in idx.items():
                if ne[i]:
                    c = c * v ** ne[i]
                    ne[i] = 0
            key = (tuple(ne), o)
            out[key] = out.get(key, 0) + c
        return GrassmannPoly(ring, out)

    def subs_odd_zero(self) -> "GrassmannPoly":
        return self.odd_degree_part(0)

    def scalar_value(self) -> Fraction:
        if any(any(e) or o for e, o in self._terms):
            raise ValueError("not a scalar")
        return next(iter(self._terms.values()), Fraction(0))

    def __repr__(self):
        return f"GrassmannPoly({render_grassmann(self)})"

    def __str__(self):
        return render_grassmann(self)


def _sort_sign(o: Sequence[int]):
    if len(set(o)) != len(o):
        return None
    o = list(o)
    sign = 1
    for i in range(len(o)):
        for j in range(len(o) - 1 - i):
            if o[j] > o[j + 1]:
                o[j], o[j + 1] = o[j + 1], o[j]
                sign = -sign
    return sign, tuple(o)


def grassmann_mul(a: GrassmannPoly, b: GrassmannPoly) -> GrassmannPoly:
    """Supercommutative product with sign bookkeeping for odd generators."""
    a._check(b)
    out: Dict[GKey, Fraction] = {}
    for (e1, o1), c1 in a._terms.items():
        for (e2, o2), c2 in b._terms.items():
            m = _merge_odd(o1, o2)
            if m is None:
                continue
            sgn, o = m
            key = (tuple(x + y for x, y in zip(e1, e2)), o)
            s = out.get(key, 0) + (c1 * c2 if sgn > 0 else -c1 * c2)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return GrassmannPoly._raw(a.ring, out)


def render_grassmann(p: GrassmannPoly) -> str:
    if p.is_zero():
        return "0"
    ring = p.ring

    def key(item):
        (e, o), _ = item
        return (-(sum(e) + len(o)), tuple(-k for k in e), o)

    parts = []
    for (e, o), c in sorted(p.items(), key=key):
        factors = []
        for i, k in enumerate(e):
            if k == 1:
                factors.append(ring.even[i])
            elif k > 1:
                factors.append(f"{ring.even[i]}^{k}")
        factors += [ring.odd[j] for j in o]
        mono = "*".join(factors)
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


Number = Union[Fraction, WeightPoly]


def product(items: Iterable, start=1):
    out = start
    for x in items:
        out = out * x
    return out
