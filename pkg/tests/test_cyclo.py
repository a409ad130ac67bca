import numpy as np
import pytest

from paley.cyclo import CycNum, NotRational, cyclotomic_poly, from_counts, root


def test_cyclotomic_polys_known():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    # first index with a coefficient outside {-1, 0, 1}
    assert min(cyclotomic_poly(105)) == -2


@pytest.mark.parametrize("n", [1, 2, 3, 8, 9, 30, 36, 100, 105])
def test_cyclotomic_poly_vanishes_at_primitive_roots(n):
    phi = cyclotomic_poly(n)
    prim = [j for j in range(1, n + 1) if np.gcd(j, n) == 1] if n > 1 else [1]
    roots = np.exp(2j * np.pi * np.array(prim) / n)
    assert np.allclose(np.polyval(list(reversed(phi)), roots), 0, atol=1e-8)


def test_root_reductions():
    assert root(2, 1) == -1
    assert (root(4, 1) + root(4, 3)).is_zero()
    assert sum((root(7, j) for j in range(7)), CycNum(7)).is_zero()


def test_to_integer():
    assert CycNum.integer(6, 5).to_integer() == 5
    assert (3 * root(6, 0) + root(6, 1) + root(6, 5)).to_integer() == 4
    with pytest.raises(NotRational):
        root(4, 1).to_integer()


def test_to_complex():
    assert abs(root(4, 1).to_complex() - 1j) < 1e-12
    v = 3 * root(6, 0) + root(6, 1) + root(6, 5)
    assert abs(v.to_complex() - v.to_integer()) < 1e-9


def test_ring_homomorphism_to_complex():
    rng = np.random.default_rng(0)
    for _ in range(20):
        n = int(rng.integers(2, 30))
        a = from_counts(n, rng.integers(-5, 6, n))
        b = from_counts(n, rng.integers(-5, 6, n))
        assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-8
        assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9
        assert abs(a.conjugate().to_complex() - np.conj(a.to_complex())) < 1e-9


def test_equality_reduces():
    # zeta_6 - zeta_6^2 = 1: different vectors, equal after reduction
    assert root(6, 1) - root(6, 2) == 1
    assert root(12, 2) - root(12, 4) == 1
    assert not (root(6, 1) == root(6, 2))


def test_galois_and_embed():
    v = 2 * root(8, 1) + root(8, 3) - 5
    g = v.galois(3)
    assert abs(g.to_complex() - (2 * np.exp(2j * np.pi * 3 / 8) + np.exp(2j * np.pi * 9 / 8) - 5)) < 1e-9
    with pytest.raises(ValueError):
        v.galois(2)
    e = v.embed(24)
    assert abs(e.to_complex() - v.to_complex()) < 1e-9
    with pytest.raises(ValueError):
        v.embed(20)


def test_galois_stability_of_integers():
    # rational integers are fixed by every Galois map
    v = CycNum.integer(12, -7)
    for j in (1, 5, 7, 11):
        assert v.galois(j).to_integer() == -7


def test_shift_is_root_multiplication():
    v = from_counts(10, range(10))
    assert v.shift(3) == v * root(10, 3)


def test_scalar_ops_and_order_mismatch():
    v = root(6, 2)
    assert (v * 3 - v - v - v).is_zero()
    assert (0 * v).is_zero()
    with pytest.raises(ValueError):
        v + root(5, 1)
