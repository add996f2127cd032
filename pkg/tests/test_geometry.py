from fractions import Fraction

import pytest

from periplectic.geometry import (GStarPoint, VPoint, cdc, check_Q_equations_n2, differential_rank,
                                  generic_y, identity_on_g0_star, is_regular, nonregular_matrices,
                                  q_equation_jacobian_rank, r_map, random_regular_matrices,
                                  singular_locus_scan, stabilizer_dims, superdimension_Q)
from periplectic.symcore import GrassmannRing

F = Fraction


def test_stabilizer_examples():
    assert stabilizer_dims([[1, 0], [0, 2]]) == (2, 0)
    assert stabilizer_dims([[1, 0], [0, 1]]) == (3, 1)
    for n in (2, 3, 4):
        zero = [[0] * n for _ in range(n)]
        assert stabilizer_dims(zero) == (n * (n + 1) // 2, n * (n - 1) // 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_stabilizer_regular_and_lower_bound(n):
    for q in random_regular_matrices(n, 100, seed=n):
        assert stabilizer_dims(q) == (n, 0)
    for q in nonregular_matrices(n, seed=n):
        assert not is_regular(q)
        a, b = stabilizer_dims(q)
        assert a > n and b > 0


def test_jordan_block_is_regular():
    q = [[2, 1, 0], [0, 2, 1], [0, 0, 2]]
    assert is_regular(q)
    assert stabilizer_dims(q) == (3, 0)


def test_r_map_special_cases():
    n = 2
    v = VPoint.symbolic(n)
    ring = v.ring
    zero = [[ring.zero()] * n for _ in range(n)]
    img = r_map(VPoint(zero, [list(r) for r in v.d], v.y, ring))
    assert img.q == v.y and img.s == v.d
    assert all(x.is_zero() for row in img.u for x in row)
    img = r_map(VPoint(v.c, [list(r) for r in zero], v.y, ring))
    yt = [list(r) for r in zip(*v.y)]
    for i in range(n):
        for j in range(n):
            cy = sum((v.c[i][k] * v.y[k][j] for k in range(n)), ring.zero())
            ytc = sum((yt[i][k] * v.c[k][j] for k in range(n)), ring.zero())
            assert img.u[i][j] == cy - ytc


@pytest.mark.parametrize("n", [2, 3])
def test_r_map_shape(n):
    img = r_map(VPoint.symbolic(n))  # shape checks run in GStarPoint
    assert isinstance(img, GStarPoint)


def test_gstar_shape_violation():
    R = GrassmannRing([], ["t"])
    t = R.gen("t")
    z = R.zero()
    with pytest.raises(ValueError):
        GStarPoint([[z, z], [z, z]], [[z, t], [t, z]], [[z, z], [z, z]])


def test_identity_on_g0_star():
    assert identity_on_g0_star(3, [[1, 2, 3], [4, 5, 6], [7, 8, 10]])


def test_cdc_vanishes_n2():
    v = VPoint.symbolic(2)
    assert all(x.is_zero() for row in cdc(v) for x in row)


def test_q_equations_printed_report():
    report = check_Q_equations_n2()
    status = {label: ok for label, ok, _ in report.lines}
    assert status["cdc = 0"]
    assert status["q12 u11 + q21 u22 = 0"]
    assert status["u11 u22 = 0"] and status["u12 u11 = 0"] and status["u12 u22 = 0"]
    # the printed second and third equations do not vanish on the image of r
    assert not status["2 q21 u12 + (q11 - q22) u22 = 0"]
    assert not status["2 q12 u12 + (q22 - q11) u11 = 0"]


def test_q_equations_corrected():
    report = check_Q_equations_n2(variant="corrected")
    assert report.passed, report.render()


def test_singular_locus():
    assert singular_locus_scan().passed
    assert q_equation_jacobian_rank([[1, 0], [0, 1]]) == 0
    assert q_equation_jacobian_rank([[1, 0], [0, 2]]) == 2


@pytest.mark.parametrize("n", [2, 3])
def test_superdimension(n):
    assert superdimension_Q(n) == (n * n, n * n - n)
    zero = [[0] * n for _ in range(n)]
    assert differential_rank(n, zero) == (n * n, n * (n - 1) // 2)


def test_generic_y_is_regular():
    for seed in range(5):
        assert is_regular(generic_y(3, seed))
