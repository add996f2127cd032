"""Acceptance suite: one PASS/FAIL line per criterion, zero tolerance.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the lines, or
directly with ``python3 tests/test_acceptance.py``.
"""

import itertools
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

GOLDEN = json.loads((Path(__file__).parent / "golden" / "center.json").read_text())


def crit_xy_delta():
    from periplectic.verma import xy_delta_check
    out = []
    for n in (2, 3, 4):
        t = time.perf_counter()
        ok = xy_delta_check(n).passed
        out.append((ok, f"n={n} {time.perf_counter() - t:.1f}s"))
    return all(o for o, _ in out), ", ".join(d for _, d in out)


def crit_yx_zero_part():
    from periplectic.center import yx_zero_part_check
    reports = [yx_zero_part_check(n) for n in (2, 3)]
    return all(r.passed for r in reports), "n=2,3 symbolic"


def crit_S_theta():
    from periplectic.center import build_S, determine_kappa, highest_weight_scalar, random_weights
    from periplectic.rootdata import symbolic_weight, theta_poly
    from periplectic.symcore import poly_equal

    c2 = build_S(2)
    k2 = determine_kappa(c2)
    s2 = highest_weight_scalar(c2.S, symbolic_weight(2))
    ok2 = k2 != 0 and str(k2) == GOLDEN["kappa"]["2"] and poly_equal(s2, theta_poly(2) * k2)
    c3 = build_S(3)
    theta = theta_poly(3)
    ratios = set()
    for mu in random_weights(3, 20, seed=2024):
        s = highest_weight_scalar(c3.S, mu)
        ratios.add(None if s is None else Fraction(s) / theta(*mu))
    ok3 = len(ratios) == 1 and str(next(iter(ratios))) == GOLDEN["kappa"]["3"]
    return ok2 and ok3, f"kappa(2)={k2}, kappa(3)={sorted(map(str, ratios))}"


def crit_S_z():
    from periplectic.center import (build_S, build_S_z, build_T, determine_kappa, gelfand_invariant,
                                    highest_weight_scalar)
    from periplectic.rootdata import symbolic_weight
    from periplectic.symcore import poly_equal
    from periplectic.uea import hc_project

    cand = build_S(2, build_T(2))
    kappa = determine_kappa(cand)
    s = highest_weight_scalar(cand.S, symbolic_weight(2))
    ok = True
    for k in (1, 2):
        z = gelfand_invariant(2, k)
        c = build_S_z(2, z, build_T(2))
        sz = highest_weight_scalar(c.S_z, symbolic_weight(2))
        ok = ok and sz is not None and poly_equal(sz, hc_project(z) * s)
    return ok, f"z = Gelfand invariants 1, 2; kappa={kappa}"


def crit_theta_structure():
    from periplectic.rootdata import dot_substitute, rho0, theta_poly
    from periplectic.symcore import WeightPoly, poly_equal

    ok = True
    for n in (2, 3, 4):
        th = theta_poly(n)
        ok = ok and all(poly_equal(dot_substitute(th, w), th) for w in itertools.permutations(range(n)))
        rho = rho0(n)
        for i in range(n):
            for j in range(n):
                if i != j:
                    sub = {i: WeightPoly.var(j, n) + 1 - rho[i] + rho[j]}
                    ok = ok and th.subs(sub).is_zero()
    return ok, "n=2,3,4"


def crit_singular_vectors():
    from periplectic.verma import singular_vector_check
    return all(singular_vector_check(n).passed for n in (2, 3)), "n=2,3 symbolic"


def crit_characters():
    from periplectic.chars import char_M, char_M_bruteforce, char_P

    t = time.perf_counter()
    ok = True
    for n in (2, 3):
        mu = (Fraction(5), Fraction(1), Fraction(0))[:n]
        ok = ok and char_M(n, mu, 6) == char_M_bruteforce(n, mu, 6)
        induced, filtered, count = char_P(n, mu, 6)
        ok = ok and induced == filtered and count == 2 ** (n * (n + 1) // 2)
    dt = time.perf_counter() - t
    return ok and dt < 60, f"{dt:.2f}s"


def crit_stabilizers():
    from periplectic.geometry import nonregular_matrices, random_regular_matrices, stabilizer_dims

    ok = True
    for n in (2, 3, 4):
        ok = ok and all(stabilizer_dims(q) == (n, 0) for q in random_regular_matrices(n, 100, seed=n))
        for q in nonregular_matrices(n, seed=n):
            a, b = stabilizer_dims(q)
            ok = ok and a > n and b > 0
    return ok, "100 regular + 5 non-regular per n"


def crit_q_equations():
    from periplectic.geometry import check_Q_equations_n2

    t = time.perf_counter()
    report = check_Q_equations_n2(variant="printed")
    dt = time.perf_counter() - t
    failed = [label for label, ok, _ in report.lines if not ok]
    return report.passed and dt < 1, f"{dt:.3f}s; nonzero residuals: {failed or 'none'}"


def crit_superdimension():
    from periplectic.geometry import superdimension_Q
    d2, d3 = superdimension_Q(2, seed=0), superdimension_Q(3, seed=0)
    return (d2, d3) == ((4, 2), (9, 6)), f"n=2 {d2}, n=3 {d3}"


def crit_infrastructure():
    from periplectic.cli import RunConfig, run
    from periplectic.superalg import superalgebra
    from periplectic.uea import UEA

    ok = True
    for n in (2, 3):
        g = superalgebra(n)
        P = g.parity
        for a, b, c in itertools.product(range(g.dim), repeat=3):
            lhs = g.bracket_combo({a: 1}, g.bracket(b, c))
            r1 = g.bracket_combo(g.bracket(a, b), {c: 1})
            r2 = g.bracket_combo({b: 1}, g.bracket(a, c))
            s = -1 if P[a] and P[b] else 1
            if any(lhs.get(k, 0) != r1.get(k, 0) + s * r2.get(k, 0) for k in set(lhs) | set(r1) | set(r2)):
                ok = False
        U = UEA(g)
        rng = random.Random(31 + n)
        for _ in range(1000):
            w = tuple(rng.randrange(g.dim) for _ in range(rng.randint(1, 4)))
            if U.normal_form_word(list(w)) != U.straighten_random({w: 1}, rng):
                ok = False
    outs = [run(RunConfig("char", n=2, mu="5,1", seed=7, format="structured"))[1] for _ in range(2)]
    outs += [run(RunConfig("central", n=2, seed=7, format="structured"))[1] for _ in range(2)]
    ok = ok and outs[0] == outs[1] and outs[2] == outs[3]
    return ok, "super-Jacobi, confluence x1000, determinism"


CRITERIA = [
    (1, "XYv = Delta(mu) v, n = 2, 3, 4", crit_xy_delta),
    (2, "(YX)_0 != 0 and (YX)_0 Yv = Delta Yv", crit_yx_zero_part),
    (3, "S v = kappa Theta(mu) v", crit_S_theta),
    (4, "S_z v = h(z) S-scalar v", crit_S_z),
    (5, "Theta dot-invariance and hyperplane vanishing", crit_theta_structure),
    (6, "singular vectors at mu_(n-1) = mu_n", crit_singular_vectors),
    (7, "character product and P filtration identities", crit_characters),
    (8, "stabilizer dimensions", crit_stabilizers),
    (9, "n = 2 equations of Q (as printed) on the image of r", crit_q_equations),
    (10, "superdimension of Q", crit_superdimension),
    (11, "infrastructure properties", crit_infrastructure),
]


def _line(num, title, ok, detail):
    return f"CRITERION {num:2d} {'PASS' if ok else 'FAIL'}: {title} [{detail}]"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn):
    ok, detail = fn()
    print("\n" + _line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    status = 0
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        print(_line(num, title, ok, detail), flush=True)
        status |= not ok
    sys.exit(status)
