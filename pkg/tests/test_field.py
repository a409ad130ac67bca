import numpy as np
import pytest

from paley.field import (
    Field,
    build_field,
    coset,
    factor_prime_power,
    is_prime,
    residue_class,
    smallest_primitive_root,
    valid_modulus,
)


def test_build_field_prime_examples():
    assert build_field(7).omega == 3  # 3 generates Z_7^*, 2 does not
    assert build_field(3).omega == 2
    f = build_field(5, 3)
    assert f.q == 125 and f.n == 124


def test_reject_bad_parameters():
    with pytest.raises(ValueError):
        Field(6)
    with pytest.raises(ValueError):
        Field(2, 25)  # over the cap
    with pytest.raises(ValueError):
        Field(5, 0)
    with pytest.raises(ValueError):
        Field(7, omega=2)  # order 3, not primitive


def test_exp_log_bijection():
    for f in (build_field(13), build_field(3, 3), build_field(7, 2)):
        vals = sorted(int(v) for v in f.exp)
        assert vals == list(range(1, f.q))
        assert f.log[0] == -1
        assert f.exp[0] == 1


@pytest.mark.parametrize("p,r", [(13, 1), (5, 3), (3, 4), (19, 1)])
def test_field_axioms_random(p, r):
    f = build_field(p, r)
    rng = np.random.default_rng(p * r)
    for _ in range(100):
        a, b, c = (int(x) for x in rng.integers(0, f.q, 3))
        assert f.add(a, b) == f.add(b, a)
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("p,r", [(13, 1), (5, 3), (11, 2)])
def test_log_multiplicativity_and_frobenius(p, r):
    f = build_field(p, r)
    rng = np.random.default_rng(0)
    for _ in range(100):
        a, b = (int(x) for x in rng.integers(1, f.q, 2))
        assert (f.log[a] + f.log[b]) % f.n == f.log[f.mul(a, b)]
        ab = f.add(a, b)
        assert f.pow(ab, p) == f.add(f.pow(a, p), f.pow(b, p))


@pytest.mark.parametrize("p,r", [(13, 1), (5, 3)])
def test_zech_addition_matches_values(p, r):
    f = build_field(p, r)
    rng = np.random.default_rng(1)
    for _ in range(200):
        a, b = (int(x) for x in rng.integers(0, f.q, 2))
        la = f.log[a] if a else -1
        lb = f.log[b] if b else -1
        s = f.add_log(la, lb)
        assert f.exp_of(s) == f.add(a, b)


def test_residue_class_squares_mod_7():
    f = build_field(7)
    squares = {a for a in range(1, 7) if residue_class(f, 2, a) == 0}
    assert squares == {1, 2, 4}
    assert residue_class(f, 2, 0) == -1


def test_residue_class_q3():
    f = build_field(3)
    assert [int(v) for v in coset(f, 2, 0)] == [1]


def test_residue_class_of_minus_one():
    # q = k+1 (mod 2k) puts -1 in the middle coset, never a k-th power
    for q, k, pr in ((7, 2, (7, 1)), (13, 4, (13, 1)), (125, 4, (5, 3)), (31, 6, (31, 1))):
        f = build_field(*pr)
        assert residue_class(f, k, f.neg(1)) == k // 2


def test_residue_class_multiplicative():
    f = build_field(31)
    rng = np.random.default_rng(2)
    for _ in range(100):
        a, b = (int(x) for x in rng.integers(1, 31, 2))
        assert (
            residue_class(f, 6, f.mul(a, b))
            == (residue_class(f, 6, a) + residue_class(f, 6, b)) % 6
        )


def test_cosets_partition():
    f = build_field(13)
    assert sorted(int(v) for v in coset(f, 2, 1)) == sorted(
        set(range(1, 13)) - {int(v) for v in coset(f, 2, 0)}
    )
    union = set()
    for i in range(4):
        c = coset(f, 4, i)
        assert c.size == 3
        union |= {int(v) for v in c}
    assert union == set(range(1, 13))
    with pytest.raises(ValueError):
        coset(f, 4, 4)
    with pytest.raises(ValueError):
        coset(f, 5, 0)


def test_negated_coset_shifts_by_half():
    for q, k, pr in ((13, 4, (13, 1)), (31, 6, (31, 1)), (125, 4, (5, 3))):
        f = build_field(*pr)
        for i in range(k):
            neg = sorted(int(f.neg(int(v))) for v in coset(f, k, i))
            assert neg == [int(v) for v in coset(f, k, (i + k // 2) % k)]


def test_valid_modulus():
    assert valid_modulus(7, 2)
    assert valid_modulus(125, 4)
    assert not valid_modulus(9, 2)
    assert not valid_modulus(13, 3)  # odd k
    assert not valid_modulus(21, 4)  # not a prime power
    assert not valid_modulus(17, 4)  # 17 = 1 mod 8


def test_prime_helpers():
    assert is_prime(2) and is_prime(9973) and not is_prime(1) and not is_prime(9991)
    assert factor_prime_power(343) == (7, 3)
    assert factor_prime_power(12) is None
    assert smallest_primitive_root(13) == 2


def test_alternative_modulus_gives_isomorphic_field():
    f = build_field(3, 3)
    # pick the next primitive polynomial after the canonical one
    alt = None
    p, r = 3, 3
    for idx in range(3**3):
        digits = []
        m = idx
        for _ in range(r):
            digits.append(m % p)
            m //= p
        digits.reverse()
        if digits[0] == 0 or tuple(digits) == f.modulus[:r]:
            continue
        try:
            alt = Field(p, r, modulus=tuple(digits) + (1,))
            break
        except ValueError:
            continue
    assert alt is not None and alt.modulus != f.modulus
    # isomorphism invariants
    assert sorted(alt.zech.tolist()).count(-1) == 1
    for k in (2,):
        from paley.ramsey import subgraph_edge_counts

        assert subgraph_edge_counts(f, 2) == subgraph_edge_counts(alt, 2)


def test_trace_table():
    f = build_field(5, 3)
    tr = f.trace_table
    assert tr.min() >= 0 and tr.max() < 5
    # Tr is additive: Tr(a+b) = Tr(a) + Tr(b) mod p
    rng = np.random.default_rng(3)
    def trace_of(v):
        return 0 if v == 0 else int(tr[f.log[v]])
    for _ in range(50):
        a, b = (int(x) for x in rng.integers(0, 125, 2))
        assert trace_of(f.add(a, b)) == (trace_of(a) + trace_of(b)) % 5
