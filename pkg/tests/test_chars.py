import json
import random
from fractions import Fraction

import pytest

from periplectic.chars import (char_M, char_M0, char_M_bruteforce, char_P,
                               depth_of, filtration_check, odd_negative_roots,
                               _times_binomial)

F = Fraction


def test_depth_functional():
    assert depth_of((1, -1)) == 1
    assert depth_of((1, 0, -1)) == 2
    assert depth_of((1, 1)) == 2
    assert depth_of((0, 1, 1)) == 2
    assert depth_of((1, 1, 0)) == 4
    with pytest.raises(ValueError):
        depth_of((1, 0))


def test_char_M0_examples():
    m = char_M0(2, (0, 0), 5)
    assert m.mult((0, 0)) == 1
    for k in range(6):
        assert m.mult((-k, k)) == 1
    m3 = char_M0(3, (0, 0, 0), 4)
    assert m3.mult((-1, 0, 1)) == 2
    assert m3.mult((0, 0, 0)) == 1


def test_char_M_n2_depth2():
    m = char_M(2, (0, 0), 2)
    assert m.mult((-1, -1)) == 1
    assert m.mult((-2, 2)) == 1
    assert len(odd_negative_roots(3)) == 3


@pytest.mark.parametrize("n", [2, 3])
def test_product_matches_bruteforce(n):
    rng = random.Random(n)
    for _ in range(3):
        mu = tuple(F(rng.randint(-5, 5)) for _ in range(n))
        assert char_M(n, mu, 6) == char_M_bruteforce(n, mu, 6)


@pytest.mark.parametrize("n,terms", [(2, 8), (3, 64)])
def test_char_P_identity(n, terms):
    mu = (F(5), F(1), F(0))[:n]
    induced, filtered, count = char_P(n, mu, 6)
    assert count == terms
    assert induced == filtered
    assert induced.mult(induced.top) == 1
    assert filtration_check(n, mu, 6)


def test_char_P_gamma_empty_term():
    # the gamma = 0 term contributes mult 1 at mu; mu sits deep below the top
    n, mu = 2, (F(5), F(1))
    induced, _, _ = char_P(n, mu, 20)
    assert induced.mult(mu) >= 1


def test_nonnegative_and_monotone():
    base = char_M0(3, (0, 0, 0), 6)
    for r in odd_negative_roots(3):
        new = _times_binomial(base.mults, r, 6)
        for d, m in base.mults.items():
            assert new[d] >= m
        assert all(m > 0 for m in new.values())


def test_serialization_sorted():
    s = char_M(2, (F(1, 2), F(0)), 3)
    doc = json.loads(s.to_text())
    assert doc["top"] == ["1/2", "0"]
    weights = [w for w, _ in doc["terms"]]
    assert weights[0] == ["1/2", "0"]
    assert s.to_text() == char_M(2, (F(1, 2), F(0)), 3).to_text()
