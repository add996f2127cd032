from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from periplectic.rootdata import delta_poly, theta_poly
from periplectic.symcore import (GrassmannRing, WeightPoly, as_scalar, grassmann_mul, poly_equal,
                                 poly_eval, render_poly)

mu1, mu2 = WeightPoly.gens(2)


def test_as_scalar_canonical():
    x = as_scalar(Fraction(6, -4))
    assert as_scalar("-3/2") == x
    assert x == Fraction(-3, 2) and x.denominator > 0
    with pytest.raises(TypeError):
        as_scalar(0.5)


def test_poly_eval_examples():
    assert poly_eval(delta_poly(2), [3, 1]) == 2
    assert poly_eval(WeightPoly({}, 2), [5, 7]) == 0
    assert poly_eval(theta_poly(2), [1, 0]) == -3


def test_poly_eval_arity_mismatch():
    with pytest.raises(ValueError):
        poly_eval(delta_poly(2), [1, 2, 3])


def test_poly_equal_examples():
    assert poly_equal(mu1 - mu2, delta_poly(2))
    p = mu1 * mu2 + 3
    assert poly_equal(p, p + 0)
    lhs = (mu1 - mu2) * (mu2 - mu1 - 2)
    rhs = -mu1 ** 2 + 2 * mu1 * mu2 - mu2 ** 2 - 2 * mu1 + 2 * mu2
    assert poly_equal(lhs, rhs)
    assert not poly_equal(lhs, rhs + 1)


def test_render_deterministic():
    p = 3 * mu2 ** 2 - mu1 + Fraction(1, 2)
    assert render_poly(p) == "3*mu2^2 - mu1 + 1/2"
    assert render_poly(WeightPoly({}, 2)) == "0"


def test_subs_and_call():
    p = mu1 ** 2 - mu2
    q = p.subs({0: mu2 + 1})
    assert poly_equal(q, mu2 ** 2 + mu2 + 1)
    assert p(2, 3) == 1


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
mono = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(mono, coeff, max_size=4).map(lambda d: WeightPoly(d, 3))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_weightpoly_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == WeightPoly({}, 3)


@settings(max_examples=60, deadline=None)
@given(polys, st.lists(coeff, min_size=3, max_size=3))
def test_eval_is_ring_hom(a, pt):
    b = a * a + a
    assert b(*pt) == a(*pt) ** 2 + a(*pt)


# -- Grassmann ----------------------------------------------------------------

R = GrassmannRing(["x", "y"], ["t1", "t2", "t3"])
x, y = R.gen("x"), R.gen("y")
t1, t2, t3 = R.gen("t1"), R.gen("t2"), R.gen("t3")


def test_grassmann_examples():
    assert grassmann_mul(t1, t2) == -grassmann_mul(t2, t1)
    assert (t1 * t2).terms == {((0, 0), (0, 1)): 1}
    assert (t2 * t1).terms == {((0, 0), (0, 1)): -1}
    assert (t1 * t1).is_zero()
    assert (x + t1) * (x - t1) == x * x


def test_grassmann_universe_mismatch():
    other = GrassmannRing(["x"], ["t1"])
    with pytest.raises(ValueError):
        grassmann_mul(t1, other.gen("t1"))


def test_left_derivative_sign():
    p = t1 * t2 * x
    assert p.diff("t2") == -(t1 * x)
    assert p.diff("t1") == t2 * x
    assert p.diff("x") == t1 * t2


gens = [x, y, t1, t2, t3]
gpolys = st.lists(st.tuples(st.sampled_from(range(5)), st.sampled_from(range(5)), coeff),
                  max_size=4).map(lambda ts: sum((gens[i] * gens[j] * c for i, j, c in ts), R.zero()))
gpolys_lin = st.lists(st.tuples(st.sampled_from(range(5)), coeff), max_size=4).map(
    lambda ts: sum((gens[i] * c for i, c in ts), R.zero()))


@settings(max_examples=60, deadline=None)
@given(gpolys, gpolys, gpolys_lin)
def test_grassmann_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (b + c) * a == b * a + c * a


@settings(max_examples=60, deadline=None)
@given(gpolys_lin, gpolys_lin)
def test_supercommutativity(a, b):
    ae, ao = a.parity_parts()
    be, bo = b.parity_parts()
    assert ae * be == be * ae
    assert ae * bo == bo * ae
    assert ao * bo == -(bo * ao)
    assert (ao * ao).is_zero()


def test_odd_generators_anticommute():
    for a in (t1, t2, t3):
        for b in (t1, t2, t3):
            assert (a * b + b * a).is_zero()
