import itertools

import numpy as np
import pytest

from paley.field import build_field
from paley.hyper import (
    ScaledValue,
    binom,
    char_sign,
    f2f1_charsum,
    f2f1_definitional,
    f3f2_charsum,
    f3f2_definitional,
    identity_suite,
    signed_f3f2,
    tuple_value_table,
)


@pytest.fixture(scope="module")
def f13():
    return build_field(13)


def test_binom_values(f13):
    assert binom(f13, 0, 0).num.to_integer() == 11  # (q-2)/q
    for t in range(1, f13.n):
        assert binom(f13, t, t).num.to_integer() == -1


def test_binom_conjugation(f13):
    n = f13.n
    rng = np.random.default_rng(0)
    for _ in range(20):
        a, b = (int(x) for x in rng.integers(0, n, 2))
        conj = binom(f13, a, b).num.conjugate()
        assert conj == binom(f13, (-a) % n, (-b) % n).num


def test_scaled_value_arithmetic(f13):
    v = binom(f13, 3, 5)
    w = binom(f13, 2, 1)
    assert (v + w) - w == v
    assert v * 13 / 13 == v
    assert (v - v).num.is_zero()
    assert v * w == w * v


def test_char_sign(f13):
    for t in range(f13.n):
        assert char_sign(f13, t) == (-1) ** t


def test_charsum_vs_definitional_exhaustive_q7():
    f7 = build_field(7)
    step = f7.n // 2
    for tup in itertools.product(range(2), repeat=5):
        args = [step * x for x in tup]
        assert f3f2_charsum(f7, *args, 1) == f3f2_definitional(f7, *args, 1)


@pytest.mark.parametrize("p,k,trials", [(13, 4, 20), (31, 6, 12)])
def test_charsum_vs_definitional_random(p, k, trials):
    f = build_field(p)
    rng = np.random.default_rng(p)
    for _ in range(trials):
        ts = [int(x) for x in rng.integers(0, f.n, 5)]
        lam = int(rng.integers(0, f.q))
        assert f3f2_charsum(f, *ts, lam) == f3f2_definitional(f, *ts, lam)
        assert f2f1_charsum(f, *ts[:3], lam) == f2f1_definitional(f, *ts[:3], lam)


def test_2f1_reduction_at_one(f13):
    n = f13.n
    rng = np.random.default_rng(1)
    for _ in range(40):
        a, b, c = (int(x) for x in rng.integers(0, n, 3))
        assert f2f1_charsum(f13, a, b, c, 1) == binom(f13, b, (c - a) % n) * char_sign(
            f13, a
        )


def test_lambda_zero_vanishes(f13):
    rng = np.random.default_rng(2)
    for _ in range(10):
        ts = [int(x) for x in rng.integers(0, f13.n, 5)]
        assert f3f2_charsum(f13, *ts, 0).num.is_zero()
        assert f2f1_charsum(f13, *ts[:3], 0).num.is_zero()
        assert signed_f3f2(f13, 4, tuple(int(x) for x in rng.integers(0, 4, 5)), 0).num.is_zero()


def test_paper_point_values():
    # q^2 3F2(chi4, phi, phi; eps, eps | 1) = -142 at q = 125
    f125 = build_field(5, 3)
    n = f125.n
    v = f3f2_charsum(f125, n // 4, n // 2, n // 2, 0, 0, 1)
    assert v.num.to_integer() == -142
    assert tuple_value_table(f125, 4).raw_value((1, 2, 2, 0, 0)).to_integer() == -142
    # q^2 3F2(phi,phi,phi;eps,eps|1) = 0 for q = 3 (mod 4), = 4x^2-2q for q = 1 (mod 4)
    for p in (7, 11, 19):
        f = build_field(p)
        assert f3f2_charsum(f, *( [f.n // 2] * 3 ), 0, 0, 1).num.to_integer() == 0
    f13 = build_field(13)
    assert f3f2_charsum(f13, 6, 6, 6, 0, 0, 1).num.to_integer() == 10  # 4*9 - 26


def test_signed_f3f2_sign_and_value(f13):
    # (0,..,0) carries sign +1
    plain = f3f2_charsum(f13, 0, 0, 0, 0, 0, 1)
    signed = signed_f3f2(f13, 4, (0, 0, 0, 0, 0), 1)
    assert signed.num.embed(f13.n) == plain.num
    # odd t3+t5 flips the sign
    step = f13.n // 4
    signed2 = signed_f3f2(f13, 4, (1, 2, 1, 0, 0), 1)
    plain2 = f3f2_charsum(f13, step, 2 * step, step, 0, 0, 1)
    assert (signed2.num.embed(f13.n) + plain2.num).is_zero()


@pytest.mark.parametrize(
    "pr,k", [((7, 1), 2), ((13, 1), 4), ((5, 3), 4), ((31, 1), 6)]
)
def test_tuple_table_matches_direct(pr, k):
    f = build_field(*pr)
    table = tuple_value_table(f, k)
    rng = np.random.default_rng(f.q)
    tuples = list(itertools.product(range(k), repeat=5))
    picks = (
        tuples
        if len(tuples) <= 64
        else [tuple(int(x) for x in rng.integers(0, k, 5)) for _ in range(25)]
    )
    for t in picks:
        assert table.signed_value(t) == signed_f3f2(f, k, t, 1).num
    # row sums count the valid (a, b) grid pairs
    assert int(table.coeffs[0].sum()) == (f.q - 2) * (f.q - 3)


def test_tuple_table_signed_total(f13):
    table = tuple_value_table(f13, 4)
    acc = None
    for t in itertools.product(range(4), repeat=5):
        v = table.signed_value(t)
        acc = v if acc is None else acc + v
    assert (acc - table.signed_total()).is_zero()


def test_tuple_table_galois_consistency(f13):
    # conjugating every parameter by a unit j multiplies values through
    # the Galois action zeta_k -> zeta_k^j
    table = tuple_value_table(f13, 4)
    rng = np.random.default_rng(5)
    for _ in range(10):
        t = tuple(int(x) for x in rng.integers(0, 4, 5))
        tj = tuple((3 * x) % 4 for x in t)
        assert table.raw_value(tj) == table.raw_value(t).galois(3)


@pytest.mark.parametrize("pr,k", [((13, 1), 4), ((29, 1), 4), ((31, 1), 6), ((43, 1), 6)])
def test_identity_suite(pr, k):
    rep = identity_suite(build_field(*pr), k, trials=50)
    assert rep.passed, str(rep)


def test_scaled_value_exact_integer(f13):
    v = ScaledValue(f3f2_charsum(f13, 6, 6, 6, 0, 0, 1).num, 1)
    assert v.exact_integer() == 10
    with pytest.raises(ArithmeticError):
        (v / 4).exact_integer()
