"""Central elements of U/I built from Y and S^d(g_1).

Pipeline, for d = n(n-1)/2:

* ``phi(x) = (Y x)_0`` from S^d(g_1) = U(g_1)_d into U^d(g_0);
* an ad-invariant complement {X_i} of ker(phi);
* an ad-invariant symmetric form B on U^d(g_0) and the B-dual vectors
  (Y X_i)'_0 of the images (Y X_i)_0;
* ``T = sum X_i (Y X_i)'_0``, ``S = Y^ad(T)`` and ``S_z = Y^ad(z T)``.

Everything is computed in U.  Statements about the quotient by the radical
are checked through the action on Verma modules, which separates its
elements.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .report import CheckReport
from .rootdata import delta_poly, dot_action, is_typical, symbolic_weight, theta_poly
from .superalg import BasisIndex, sl_basis
from .symcore import WeightPoly, poly_equal
from .uea import (UEA, UEAElem, adjoint, big_X, big_Y, enveloping, h0_project, hc_project,
                  multiply, y_adjoint, y_generators)
from .verma import VermaModule

Mono = Tuple[int, ...]

MAX_N = 3


def _check_n(n: int):
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > MAX_N:
        raise ValueError(f"n = {n} exceeds the cost guard (n <= {MAX_N})")


def _vec_to_elem(U: UEA, basis: Sequence[Mono], vec: Sequence[Fraction]) -> UEAElem:
    return U.elem({m: c for m, c in zip(basis, vec) if c})


@dataclass
class PhiMap:
    """Matrix of x -> (Y x)_0 on S^d(g_1) with kernel and complement."""

    n: int
    d: int
    source: List[Mono]  # PBW monomials of U(g_1) of degree d
    target: List[Mono]  # PBW monomials of U(g_0) of degree <= d
    images: List[UEAElem]
    kernel: List[List[Fraction]]
    complement: List[List[Fraction]]

    @property
    def rank(self) -> int:
        return len(self.source) - len(self.kernel)

    def apply(self, vec: Sequence[Fraction]) -> UEAElem:
        U = self.images[0].U
        out = U.zero()
        for c, im in zip(vec, self.images):
            if c:
                out = out + im * c
        return out

    def complement_elements(self) -> List[UEAElem]:
        U = self.images[0].U
        return [_vec_to_elem(U, self.source, v) for v in self.complement]


def hermitian_weight(g, mono: Mono) -> int:
    """Squared norm of a g_1 monomial under the compact (u(n)-invariant) form.

    X_{eps_i + eps_j} corresponds to +-(e_i e_j + e_j e_i) (norm^2 2) for
    i < j and X_{2 eps_i} to e_i e_i (norm^2 1); distinct monomials are
    orthogonal.
    """
    w = 1
    for k in mono:
        b = g.basis[k]
        w *= 2 if b.i != b.j else 1
    return w


def build_phi(n: int) -> PhiMap:
    _check_n(n)
    U = enveloping(n)
    g = U.g
    d = n * (n - 1) // 2
    Y = big_Y(U)
    source = list(itertools.combinations(g.g1, d))
    target = [m for k in range(d + 1) for m in itertools.combinations_with_replacement(g.g0, k)]
    tix = {m: i for i, m in enumerate(target)}
    images = [h0_project(multiply(Y, U.elem({s: 1}))) for s in source]
    rows: List[Dict[int, Fraction]] = [dict() for _ in target]
    for j, im in enumerate(images):
        for m, c in im.items():
            rows[tix[m]][j] = c
    kernel = linalg.nullspace(rows, len(source))
    # orthogonal complement of the kernel under the compact hermitian form;
    # the form is u(n)-invariant, so the complement of an invariant subspace
    # is invariant under u(n) and hence under its complexification g_0
    weights = [hermitian_weight(g, s) for s in source]
    constraints = [{j: k[j] * weights[j] for j in range(len(source)) if k[j]} for k in kernel]
    complement = linalg.nullspace(constraints, len(source)) if kernel else [
        [Fraction(int(i == j)) for j in range(len(source))] for i in range(len(source))]
    return PhiMap(n, d, source, target, images, kernel, complement)


class InvariantForm:
    """ad g_0-invariant symmetric form B on U^d(g_0).

    B is the trace form on g_0, extended to S^k(g_0) by the permanent
    B(x_1..x_k, y_1..y_k) = sum_sigma prod tr(x_i y_sigma(i)), with distinct
    symmetric degrees orthogonal and B(1, 1) = 1, and transported to
    U^d(g_0) through the symmetrization map.
    """

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.U = enveloping(n)
        self.g = self.U.g
        g = self.g
        self._tr = {}
        for a in g.g0:
            for b in g.g0:
                v = g.trace_form({a: Fraction(1)}, {b: Fraction(1)})
                if v:
                    self._tr[(a, b)] = v
        # each g_0 basis element pairs with exactly one other under tr
        self._dual = {a: b for (a, b) in self._tr}
        self._inv_sym: Dict[Mono, Dict[Mono, Fraction]] = {(): {(): Fraction(1)}}

    def symmetrize(self, s: Mono) -> Dict[Mono, Fraction]:
        """beta(x_1..x_k) = (1/k!) sum over orderings, in PBW coordinates."""
        out: Dict[Mono, Fraction] = {}
        perms = list(itertools.permutations(s))
        w = Fraction(1, len(perms)) if perms else Fraction(1)
        for p in perms:
            for m, c in self.U.mono_mul(tuple(p), ()).items():
                out[m] = out.get(m, 0) + c * w
        return {m: c for m, c in out.items() if c}

    def inverse_symmetrize(self, m: Mono) -> Dict[Mono, Fraction]:
        """Symmetric-algebra coordinates of the PBW monomial m."""
        hit = self._inv_sym.get(m)
        if hit is not None:
            return hit
        # beta(m) = m + lower-degree terms
        out: Dict[Mono, Fraction] = {m: Fraction(1)}
        for m2, c in self.symmetrize(m).items():
            if m2 == m:
                continue
            if len(m2) >= len(m):
                raise ArithmeticError("symmetrization is not unitriangular")
            for s, v in self.inverse_symmetrize(m2).items():
                out[s] = out.get(s, 0) - c * v
        out = {s: v for s, v in out.items() if v}
        self._inv_sym[m] = out
        return out

    def sym_coords(self, u: UEAElem) -> Dict[Mono, Fraction]:
        out: Dict[Mono, Fraction] = {}
        for m, c in u.items():
            if any(self.g.grade[k] != 0 for k in m):
                raise ValueError("element is not in U(g_0)")
            if len(m) > self.d:
                raise ValueError(f"element has degree {len(m)} > {self.d}")
            for s, v in self.inverse_symmetrize(m).items():
                out[s] = out.get(s, 0) + c * v
        return {s: v for s, v in out.items() if v}

    def sym_pair(self, a: Mono, b: Mono) -> Fraction:
        if len(a) != len(b):
            return Fraction(0)
        total = Fraction(0)
        for p in set(itertools.permutations(b)):
            prod = Fraction(1)
            for x, y in zip(a, p):
                v = self._tr.get((x, y))
                if not v:
                    prod = Fraction(0)
                    break
                prod *= v
            total += prod
        # set() collapsed equal orderings; restore their multiplicity
        mult = 1
        for k in set(b):
            mult *= math.factorial(b.count(k))
        return total * mult

    def dual_mono(self, a: Mono) -> Mono:
        return tuple(sorted(self._dual[x] for x in a))

    def pair_sym(self, sa: Dict[Mono, Fraction], sb: Dict[Mono, Fraction]) -> Fraction:
        total = Fraction(0)
        for a, ca in sa.items():
            b = self.dual_mono(a)
            cb = sb.get(b)
            if cb:
                total += ca * cb * self.sym_pair(a, b)
        return total

    def __call__(self, u: UEAElem, w: UEAElem) -> Fraction:
        return self.pair_sym(self.sym_coords(u), self.sym_coords(w))

    def gram(self, elems: Sequence[UEAElem]) -> List[List[Fraction]]:
        coords = [self.sym_coords(e) for e in elems]
        return [[self.pair_sym(a, b) for b in coords] for a in coords]

    def check_nondegenerate(self) -> bool:
        """The Gram matrix on the symmetric monomials is a weighted
        permutation matrix; nondegenerate iff every pairing is nonzero."""
        for k in range(self.d + 1):
            for a in itertools.combinations_with_replacement(self.g.g0, k):
                if not self.sym_pair(a, self.dual_mono(a)):
                    return False
        return True


def invariant_form_B(n: int, d: int | None = None) -> InvariantForm:
    if d is None:
        d = n * (n - 1) // 2
    form = InvariantForm(n, d)
    if not form.check_nondegenerate():
        raise ArithmeticError("degenerate Gram matrix for B")
    return form


@dataclass
class CentralCandidate:
    n: int
    T: UEAElem
    S: Optional[UEAElem] = None
    S_z: Optional[UEAElem] = None
    z: Optional[UEAElem] = None
    kappa: Optional[Fraction] = None
    duals: List[UEAElem] = field(default_factory=list)


def build_T(n: int, phi: PhiMap | None = None, form: InvariantForm | None = None) -> CentralCandidate:
    _check_n(n)
    phi = phi or build_phi(n)
    form = form or invariant_form_B(n, phi.d)
    U = enveloping(n)
    xs = phi.complement_elements()
    images = [phi.apply(v) for v in phi.complement]
    gram = form.gram(images)
    try:
        ginv = linalg.inverse(gram)
    except ValueError:
        raise ArithmeticError("B is degenerate on the image of phi") from None
    duals = []
    for i in range(len(images)):
        acc = U.zero()
        for j, im in enumerate(images):
            if ginv[j][i]:
                acc = acc + im * ginv[j][i]
        duals.append(acc)
    T = U.zero()
    for x, dual in zip(xs, duals):
        T = T + multiply(x, dual)
    if h0_project(multiply(big_Y(U), T)).is_zero():
        raise ArithmeticError("(Y T)_0 = 0: bad complement or dual basis")
    return CentralCandidate(n, T, duals=duals)


def is_central_in_g0(z: UEAElem) -> bool:
    g = z.U.g
    return all(adjoint(x, z).is_zero() for x in g.g0)


def gelfand_invariant(n: int, k: int) -> UEAElem:
    """sum over i_1..i_k of E_{i1 i2} E_{i2 i3} ... E_{ik i1}, k in {1, 2}."""
    if k not in (1, 2):
        raise ValueError("only k = 1, 2 are provided")
    U = enveloping(n)
    g = U.g
    e = lambda i, j: g.index[BasisIndex("E", i, j)]
    if k == 1:
        return U.elem({(e(i, i),): 1 for i in range(n)})
    out = U.zero()
    for i in range(n):
        for j in range(n):
            out = out + U.word([e(i, j), e(j, i)])
    return out


def build_S(n: int, cand: CentralCandidate | None = None) -> CentralCandidate:
    """S = Y^ad(T); kappa is fixed separately by :func:`determine_kappa`."""
    cand = cand or build_T(n)
    g = cand.T.U.g
    cand.S = y_adjoint(y_generators(g), cand.T)
    return cand


def build_S_z(n: int, z: UEAElem, cand: CentralCandidate | None = None) -> CentralCandidate:
    if not is_central_in_g0(z):
        raise ValueError("z is not central in U(g_0)")
    cand = cand or build_T(n)
    g = cand.T.U.g
    cand.z = z
    cand.S_z = y_adjoint(y_generators(g), multiply(z, cand.T))
    return cand


def highest_weight_scalar(u: UEAElem, mu: Sequence):
    """The scalar c with u v_mu = c v_mu, or None if u v_mu is not a multiple of v_mu."""
    M = VermaModule(len(mu), mu)
    out = M.act(u, M.highest_vector())
    if set(out.terms) - {()}:
        return None
    return out.coefficient(())


def ratio_to_theta(scalar: WeightPoly) -> Fraction | None:
    """kappa with scalar == kappa * Theta exactly, else None."""
    n = scalar.nvars
    theta = theta_poly(n)
    lead, lc = theta.sorted_terms()[0]
    kappa = scalar.terms.get(lead, Fraction(0))
    kappa = kappa / lc
    return kappa if poly_equal(scalar, theta * kappa) else None


def random_weights(n: int, count: int, seed: int, typical: bool = True) -> List[Tuple[Fraction, ...]]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        mu = tuple(Fraction(rng.randint(-40, 40), rng.randint(1, 7)) for _ in range(n))
        if not typical or is_typical(mu):
            out.append(mu)
    return out


def determine_kappa(cand: CentralCandidate, samples: int = 20, seed: int = 0,
                    symbolic: bool | None = None) -> Fraction:
    """Fix kappa with S v_mu = kappa Theta(mu) v_mu; raises if not proportional."""
    n = cand.n
    if symbolic is None:
        symbolic = n == 2
    if symbolic:
        c = highest_weight_scalar(cand.S, symbolic_weight(n))
        kappa = None if c is None else ratio_to_theta(c)
        if kappa is None or kappa == 0:
            raise ArithmeticError("S v is not a nonzero multiple of Theta(mu) v")
    else:
        theta = theta_poly(n)
        kappa = None
        for mu in random_weights(n, samples, seed):
            c = highest_weight_scalar(cand.S, mu)
            if c is None:
                raise ArithmeticError(f"S v_mu is not a multiple of v_mu at mu = {mu}")
            r = Fraction(c) / theta(*mu)
            if kappa is None:
                kappa = r
            elif r != kappa:
                raise ArithmeticError(f"ratio not constant: {r} != {kappa} at mu = {mu}")
        if not kappa:
            raise ArithmeticError("kappa = 0")
    cand.kappa = kappa
    return kappa


def sl_invariance_defects(T: UEAElem) -> List[UEAElem]:
    """ad_x(T) for x in a basis of sl(n); all zero iff T is ad g'_0-invariant."""
    return [adjoint(x, T) for x in sl_basis(T.U.n)]


def yx_zero_part(n: int) -> UEAElem:
    """(Y X)_0 with X the ordered product of the g_1 root vectors eps_i + eps_j."""
    U = enveloping(n)
    return h0_project(multiply(big_Y(U), big_X(U)))


def yx_zero_part_check(n: int, mu: Sequence | None = None) -> CheckReport:
    """(YX)_0 != 0 and (YX)_0 (Y v) = Delta(mu) (Y v)."""
    mu = symbolic_weight(n) if mu is None else tuple(mu)
    U = enveloping(n)
    z = yx_zero_part(n)
    M = VermaModule(n, mu)
    yv = M.act(big_Y(U), M.highest_vector())
    lhs = M.act(z, yv)
    rhs = yv.scale(delta_poly(n).subs(dict(enumerate(mu))) if _is_symbolic(mu)
                   else delta_poly(n)(*mu))
    report = CheckReport(f"(YX)_0 acting on Yv, n = {n}")
    report.add("(YX)_0 != 0", not z.is_zero(), f"{len(z)} PBW terms")
    report.add("(YX)_0 Yv = Delta(mu) Yv", lhs == rhs, lhs.render())
    return report


def _is_symbolic(mu) -> bool:
    return any(isinstance(x, WeightPoly) for x in mu)


def _sample_vectors(M: VermaModule, U: UEA) -> list:
    g = M.g
    v = M.highest_vector()
    out = [v, M.act(big_Y(U), v)]
    for k in sorted(g.n0_minus)[:2] + list(g.gm1)[:2]:
        out.append(M.act_word([k], v))
    return out


def central_report(n: int, samples: int = 20, seed: int = 0) -> Tuple[CheckReport, CentralCandidate]:
    """Build phi, B, T, S and S_z for the Gelfand invariants and check the
    properties that can be tested through Verma module actions."""
    _check_n(n)
    report = CheckReport(f"central element construction, n = {n}")
    phi = build_phi(n)
    report.add("phi: rank equals complement size", phi.rank == len(phi.complement),
               f"rank {phi.rank}, kernel {len(phi.kernel)}")
    form = invariant_form_B(n, phi.d)
    cand = build_T(n, phi, form)
    U = cand.T.U
    g = U.g
    d = phi.d
    report.add("(Y T)_0 != 0", not h0_project(multiply(big_Y(U), cand.T)).is_zero())
    report.add("ad sl(n) (T) = 0", all(x.is_zero() for x in sl_invariance_defects(cand.T)))
    z0T = adjoint(g.z0(), cand.T)
    report.add("[z0, T] = 2d T", z0T == cand.T * (2 * d), f"d = {d}")
    mu_num = random_weights(n, 1, seed)[0]
    M = VermaModule(n, mu_num)
    vecs = _sample_vectors(M, U)
    killed = all(M.act(multiply(U.gen(x), cand.T), w).is_zero()
                 and M.act(multiply(cand.T, U.gen(x)), w).is_zero()
                 for x in g.g1 for w in vecs)
    report.add("g_1 T and T g_1 act by 0 on sample vectors", killed)
    build_S(n, cand)
    S = cand.S
    zero_w = (0,) * n
    report.add("S has weight 0", all(U.mono_weight(m) == zero_w for m in S.terms))
    report.add("S is even", S.parity() == 0)
    report.add("deg S <= 2d", S.degree() <= 2 * d, f"deg {S.degree()}")
    kappa = determine_kappa(cand, samples=samples, seed=seed)
    report.add("S v = kappa Theta(mu) v", True, f"kappa = {kappa}")
    atyp = tuple(Fraction(0) for _ in range(n))
    report.add("S v = 0 at mu = 0", highest_weight_scalar(S, atyp) == 0)
    for k in (1, 2):
        z = gelfand_invariant(n, k)
        hz = hc_project(z)
        build_S_z(n, z, cand)
        ok = _s_z_identity(cand, hz, samples, seed)
        report.add(f"S_z v = h(z) kappa Theta v, z = Gelfand invariant {k}", ok, f"h(z) = {hz}")
    return report, cand


def _s_z_identity(cand: CentralCandidate, hz: WeightPoly, samples: int, seed: int) -> bool:
    n = cand.n
    theta = theta_poly(n)
    if n == 2:
        c = highest_weight_scalar(cand.S_z, symbolic_weight(n))
        return c is not None and poly_equal(c, hz * theta * cand.kappa)
    for mu in random_weights(n, samples, seed + 1):
        c = highest_weight_scalar(cand.S_z, mu)
        if c != hz(*mu) * theta(*mu) * cand.kappa:
            return False
    return True


def scalar_properties(cand: CentralCandidate, samples: int = 6, seed: int = 0) -> CheckReport:
    """kappa-free checks on mu -> (S v_mu coefficient): vanishing at 0,
    W-dot invariance at sampled mu, and degree <= 2d (symbolic, n = 2 only)."""
    n = cand.n
    d = n * (n - 1) // 2
    report = CheckReport(f"scalar of S on highest vectors, n = {n}")
    report.add("vanishes at mu = 0", highest_weight_scalar(cand.S, (Fraction(0),) * n) == 0)
    perms = list(itertools.permutations(range(n)))
    ok = True
    for mu in random_weights(n, samples, seed + 7, typical=False):
        base = highest_weight_scalar(cand.S, mu)
        for w in perms:
            if highest_weight_scalar(cand.S, dot_action(w, mu)) != base:
                ok = False
    report.add("dot-invariant under S_n", ok)
    if n == 2:
        c = highest_weight_scalar(cand.S, symbolic_weight(n))
        report.add("degree <= 2d", c is not None and c.degree() <= 2 * d, f"{c}")
    return report
