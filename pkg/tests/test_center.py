import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from periplectic.center import (InvariantForm, build_phi, build_S, build_S_z, build_T, central_report,
                                determine_kappa, gelfand_invariant, highest_weight_scalar,
                                invariant_form_B, is_central_in_g0, random_weights, scalar_properties,
                                yx_zero_part, yx_zero_part_check)
from periplectic.rootdata import symbolic_weight, theta_poly
from periplectic.symcore import poly_equal
from periplectic.uea import adjoint, enveloping, hc_project

F = Fraction
GOLDEN = json.loads((Path(__file__).parent / "golden" / "center.json").read_text())


@pytest.fixture(scope="module")
def cand2():
    c = build_S(2)
    determine_kappa(c)
    return c


@pytest.fixture(scope="module")
def cand3():
    c = build_S(3)
    determine_kappa(c, samples=20, seed=0)
    return c


def test_phi_n2_images():
    phi = build_phi(2)
    U = enveloping(2)
    g = U.g
    images = dict(zip(phi.source, phi.images))
    assert images[(g.element("B12"),)] == U.gen("E11") - U.gen("E22")
    assert images[(g.element("B11"),)] == U.gen("E12")
    assert images[(g.element("B22"),)] == -U.gen("E21")
    assert phi.rank == 3 and phi.kernel == []


def test_phi_n3_rank():
    phi = build_phi(3)
    assert phi.rank == 20 == len(phi.complement)


def test_form_examples():
    U = enveloping(2)
    B = invariant_form_B(2)
    assert B(U.gen("E12"), U.gen("E21")) == 1
    assert B(U.one(), U.gen("E11")) == 0
    assert B(U.one(), U.one()) == 1


def _random_g0_elem(U, rng, d):
    g = U.g
    out = U.zero()
    for _ in range(3):
        k = rng.randint(0, d)
        out = out + U.word([rng.choice(g.g0) for _ in range(k)], rng.randint(-3, 3))
    return out


@pytest.mark.parametrize("n,count", [(2, 50), (3, 10)])
def test_form_invariant_and_symmetric(n, count):
    rng = random.Random(n)
    U = enveloping(n)
    d = n * (n - 1) // 2
    B = InvariantForm(n, d)
    assert B.check_nondegenerate()
    for _ in range(count):
        x = rng.choice(U.g.g0)
        u, w = _random_g0_elem(U, rng, d), _random_g0_elem(U, rng, d)
        assert B(adjoint(x, u), w) + B(u, adjoint(x, w)) == 0
        assert B(u, w) == B(w, u)


def test_yx_zero_part():
    U = enveloping(2)
    assert yx_zero_part(2) == U.gen("E11") - U.gen("E22")
    for n in (2, 3):
        assert yx_zero_part_check(n).passed


def test_T_properties_n2(cand2):
    T = cand2.T
    U = T.U
    for x in U.g.g0:
        if x in U.g.cartan:
            continue
        assert adjoint(x, T).is_zero()
    # z0 = diag(1_n, -1_n) acts on g_1 by 2
    assert adjoint(U.g.z0(), T) == T * 2
    assert T.render() == GOLDEN["n2"]["T"]


def test_S_golden_n2(cand2):
    assert cand2.S.render() == GOLDEN["n2"]["S"]
    assert str(cand2.kappa) == GOLDEN["kappa"]["2"]


def test_S_symbolic_n2(cand2):
    c = highest_weight_scalar(cand2.S, symbolic_weight(2))
    assert poly_equal(c, theta_poly(2) * cand2.kappa)
    assert highest_weight_scalar(cand2.S, (F(1), F(0))) == cand2.kappa * -3
    assert highest_weight_scalar(cand2.S, (F(0), F(0))) == 0


def test_S_numeric_n3(cand3):
    assert str(cand3.kappa) == GOLDEN["kappa"]["3"]
    theta = theta_poly(3)
    for mu in random_weights(3, 20, seed=42):
        assert highest_weight_scalar(cand3.S, mu) == cand3.kappa * theta(*mu)


def test_S_shape(cand2, cand3):
    for c, d in ((cand2, 1), (cand3, 3)):
        assert c.S.weights() == {(0,) * c.n}
        assert c.S.parity() == 0
        assert c.S.degree() <= 2 * d


def test_scalar_properties(cand2, cand3):
    assert scalar_properties(cand2).passed
    assert scalar_properties(cand3, samples=3).passed


def test_gelfand_invariants():
    z1, z2 = gelfand_invariant(2, 1), gelfand_invariant(2, 2)
    assert is_central_in_g0(z1) and is_central_in_g0(z2)
    assert adjoint("E12", z2).is_zero()
    m1, m2 = symbolic_weight(2)
    assert poly_equal(hc_project(z1), m1 + m2)
    with pytest.raises(ValueError):
        gelfand_invariant(2, 3)


def test_S_z_identities_n2(cand2):
    U = enveloping(2)
    theta = theta_poly(2)
    c = build_S_z(2, U.one(), build_T(2))
    assert c.S_z == cand2.S
    for k in (1, 2):
        z = gelfand_invariant(2, k)
        c = build_S_z(2, z, build_T(2))
        scalar = highest_weight_scalar(c.S_z, symbolic_weight(2))
        assert poly_equal(scalar, hc_project(z) * theta * cand2.kappa)


def test_S_z_second_invariant_numeric_n2(cand2):
    # oracle: z acts on v_mu by a scalar computed directly in the module
    z = gelfand_invariant(2, 2)
    c = build_S_z(2, z, build_T(2))
    for mu in random_weights(2, 20, seed=9):
        hz = highest_weight_scalar(z, mu)
        assert highest_weight_scalar(c.S_z, mu) == hz * highest_weight_scalar(cand2.S, mu)


def test_S_z_rejects_noncentral():
    U = enveloping(2)
    with pytest.raises(ValueError):
        build_S_z(2, U.gen("E12"))


def test_central_report_n2():
    report, cand = central_report(2)
    assert report.passed, report.render()


def test_cost_guard():
    with pytest.raises(ValueError):
        build_phi(4)
