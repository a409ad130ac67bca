import numpy as np
import pytest

from paley.characters import (
    aggregates,
    char_value,
    check_aggregate_identities,
    gauss,
    jacobi,
    jacobi_power_class,
)
from paley.cyclo import CycNum
from paley.field import build_field


@pytest.fixture(scope="module")
def f13():
    return build_field(13)


def test_trivial_character(f13):
    assert char_value(f13, 0, 5).to_integer() == 1
    assert char_value(f13, 0, 0).is_zero()
    assert char_value(f13, 7, 0).is_zero()


def test_char_multiplicative(f13):
    rng = np.random.default_rng(0)
    for _ in range(50):
        t = int(rng.integers(0, 12))
        a, b = (int(x) for x in rng.integers(1, 13, 2))
        lhs = char_value(f13, t, f13.mul(a, b))
        assert lhs == char_value(f13, t, a) * char_value(f13, t, b)


def test_char_order_k_at_minus_one():
    # chi_k(-1) = -1 whenever q = k+1 (mod 2k)
    for pr, k in (((7, 1), 2), ((13, 1), 4), ((5, 3), 4), ((31, 1), 6), ((41, 1), 8)):
        f = build_field(*pr)
        assert char_value(f, f.n // k, f.neg(1)).to_integer() == -1


def test_jacobi_basic_props(f13):
    n = f13.n
    assert jacobi(f13, 0, 0).to_integer() == 11  # J(eps, eps) = q - 2
    for t in range(1, n):
        assert jacobi(f13, 0, t).to_integer() == -1
        assert jacobi(f13, t, 0).to_integer() == -1
        assert jacobi(f13, t, (-t) % n).to_integer() == -((-1) ** t)


def test_jacobi_transfer_and_product(f13):
    n = f13.n
    rng = np.random.default_rng(1)
    for _ in range(60):
        t1, t2 = (int(x) for x in rng.integers(0, n, 2))
        assert jacobi(f13, t1, t2) == jacobi(f13, t1, (-t1 - t2) % n) * ((-1) ** t1)
    for _ in range(60):
        t1, t2 = (int(x) for x in rng.integers(1, n, 2))
        if (t1 + t2) % n == 0:
            continue
        prod = jacobi(f13, t1, t2) * jacobi(f13, (-t1) % n, (-t2) % n)
        assert prod.to_integer() == 13


def test_orthogonality_relation():
    # (1/k) sum_t chi_k^t(b) = [b is a k-th power]
    for pr, k in (((13, 1), 4), ((31, 1), 6)):
        f = build_field(*pr)
        step = f.n // k
        for b in range(1, f.q):
            s = CycNum(f.n)
            for t in range(k):
                s = s + char_value(f, step * t, b)
            assert s.to_integer() == (k if f.log[b] % k == 0 else 0)


def test_jacobi_power_class_embeds(f13):
    step = f13.n // 4
    for s in range(4):
        for t in range(4):
            small = jacobi_power_class(f13, 4, s, t)
            assert small.embed(f13.n) == jacobi(f13, s * step, t * step)


def test_order4_sum_paper_value(f13):
    c4 = f13.n // 4
    total = jacobi(f13, c4, c4) + jacobi(f13, 3 * c4, 3 * c4)
    assert total.to_integer() == 6  # -2x with x = -3


def test_aggregates_k2_vanish():
    agg = aggregates(build_field(7), 2)
    assert agg.r == agg.r_minus == agg.s == agg.s_minus == 0
    assert agg.j0 == 7 - 4 + 1 + agg.r  # identity (a) holds trivially here


def test_aggregates_order4_values():
    assert aggregates(build_field(13), 4).r == -6  # 2x, x = -3
    agg125 = aggregates(build_field(5, 3), 4)
    assert agg125.r == -22  # 2x, x = -11
    assert agg125.s == 4 * 121 - 6 * 125  # -266


@pytest.mark.parametrize("pr,k", [((13, 1), 4), ((31, 1), 6), ((29, 1), 4), ((41, 1), 8)])
def test_aggregate_identities(pr, k):
    rep = check_aggregate_identities(build_field(*pr), k)
    assert rep.passed, str(rep)


def test_aggregates_galois_invariant():
    # replacing chi_k by another character of exact order k with primitive
    # chi_k(omega) must leave the integer aggregates unchanged
    f = build_field(31)
    k = 6
    base = aggregates(f, k)
    step = f.n // k
    for j in (5,):  # gcd(j, 6) = 1, chi = chi_k^j has order 6
        grid = [
            [jacobi_power_class(f, k, (s * j) % k, (t * j) % k) for t in range(k)]
            for s in range(k)
        ]
        alt = aggregates(f, k, grid=grid)
        assert alt == base


def test_gauss_sums(f13):
    assert abs(gauss(f13, 0) - (-1)) < 1e-9
    for t in range(1, f13.n):
        assert abs(abs(gauss(f13, t)) - np.sqrt(13)) < 1e-9
    f125 = build_field(5, 3)
    rng = np.random.default_rng(2)
    for t in rng.integers(1, f125.n, 5):
        assert abs(abs(gauss(f125, int(t))) - np.sqrt(125)) < 1e-6


def test_gauss_jacobi_relation(f13):
    n = f13.n
    rng = np.random.default_rng(3)
    for _ in range(30):
        t1, t2 = (int(x) for x in rng.integers(1, n, 2))
        if (t1 + t2) % n == 0:
            continue
        lhs = jacobi(f13, t1, t2).to_complex()
        rhs = gauss(f13, t1) * gauss(f13, t2) / gauss(f13, (t1 + t2) % n)
        assert abs(lhs - rhs) < 1e-6
