"""Exact cyclotomic integers in group-ring form.

A value of order n is stored as an integer vector (c_0, .., c_{n-1})
meaning sum c_j * zeta^j with zeta = exp(2*pi*i/n), subject only to
zeta^n = 1. The representation is not canonical: equality and
integrality checks reduce modulo the n-th cyclotomic polynomial first.
Coefficients are Python ints, so nothing here can overflow.
"""

from functools import lru_cache

import numpy as np


class NotRational(ArithmeticError):
    """Raised when a value expected to be a rational integer is not."""


def _mobius(m):
    mu = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            mu = -mu
        d += 1 if d == 2 else 2
    if m > 1:
        mu = -mu
    return mu


def _mul_sparse(a, d):
    # a(x) * (x^d - 1)
    out = [0] * (len(a) + d)
    for j, c in enumerate(a):
        out[j + d] += c
        out[j] -= c
    return out


def _div_sparse(a, d):
    # exact division a(x) / (x^d - 1); a_j = b_{j-d} - b_j
    m = len(a) - 1 - d
    b = [0] * (m + 1)
    for j in range(len(a) - 1, d - 1, -1):
        bj = b[j] if j <= m else 0
        b[j - d] = a[j] + bj
    for j in range(d):
        bj = b[j] if j <= m else 0
        if a[j] + bj != 0:
            raise ArithmeticError("inexact cyclotomic division")  # bug guard
    return b


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    ups, downs = [], []
    for d in range(1, n + 1):
        if n % d == 0:
            mu = _mobius(n // d)
            if mu == 1:
                ups.append(d)
            elif mu == -1:
                downs.append(d)
    poly = [1]
    for d in ups:
        poly = _mul_sparse(poly, d)
    for d in downs:
        poly = _div_sparse(poly, d)
    return tuple(poly)


def _reduce_mod_cyclotomic(coeffs, n):
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rem = list(coeffs)
    for j in range(len(rem) - 1, deg - 1, -1):
        c = rem[j]
        if c:
            rem[j] = 0
            for i in range(deg):
                rem[j - deg + i] -= c * phi[i]
    return rem[:deg]


class CycNum:
    """Immutable exact element of Z[zeta_n]."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        if n < 1:
            raise ValueError("order must be >= 1")
        self.n = n
        if coeffs is None:
            self.coeffs = (0,) * n
        else:
            coeffs = tuple(int(c) for c in coeffs)
            if len(coeffs) != n:
                raise ValueError(f"need {n} coefficients, got {len(coeffs)}")
            self.coeffs = coeffs

    @classmethod
    def integer(cls, n, c):
        return cls(n, (int(c),) + (0,) * (n - 1))

    def _like(self, coeffs):
        out = object.__new__(CycNum)
        out.n = self.n
        out.coeffs = tuple(coeffs)
        return out

    def __add__(self, other):
        if isinstance(other, (int, np.integer)):
            other = CycNum.integer(self.n, int(other))
        if self.n != other.n:
            raise ValueError("mixed root orders")
        return self._like(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-a for a in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, np.integer)):
            other = CycNum.integer(self.n, int(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            other = int(other)
            return self._like(a * other for a in self.coeffs)
        if self.n != other.n:
            raise ValueError("mixed root orders")
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return self._like(out)

    __rmul__ = __mul__

    def shift(self, j):
        """Multiply by zeta^j (coefficient rotation)."""
        j %= self.n
        return self._like(self.coeffs[-j:] + self.coeffs[:-j] if j else self.coeffs)

    def galois(self, j):
        """Apply zeta -> zeta^j; requires gcd(j, n) = 1."""
        n = self.n
        if np.gcd(j, n) != 1:
            raise ValueError("galois exponent must be coprime to the order")
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[(i * j) % n] += c
        return self._like(out)

    def conjugate(self):
        return self.galois(-1 % self.n) if self.n > 1 else self

    def embed(self, m):
        """Rewrite in Z[zeta_m] for a multiple m of the order."""
        if m % self.n:
            raise ValueError("target order must be a multiple")
        step = m // self.n
        out = [0] * m
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        res = object.__new__(CycNum)
        res.n = m
        res.coeffs = tuple(out)
        return res

    def reduced(self):
        """Coefficients modulo the n-th cyclotomic polynomial."""
        return tuple(_reduce_mod_cyclotomic(self.coeffs, self.n))

    def is_zero(self):
        if not any(self.coeffs):
            return True
        return not any(self.reduced())

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = CycNum.integer(self.n, int(other))
        if not isinstance(other, CycNum) or self.n != other.n:
            return NotImplemented
        return (self - other).is_zero()

    def to_integer(self):
        """The value as a rational integer, or NotRational."""
        red = self.reduced()
        if any(red[1:]):
            raise NotRational(f"not a rational integer: reduced {red[:8]}...")
        return red[0] if red else 0

    def to_complex(self):
        ang = 2j * np.pi * np.arange(self.n) / self.n
        return complex(np.sum(np.exp(ang) * np.array(self.coeffs, dtype=np.complex128)))

    def __repr__(self):
        nz = [(j, c) for j, c in enumerate(self.coeffs) if c]
        return f"CycNum(n={self.n}, {nz[:6]}{'...' if len(nz) > 6 else ''})"


def root(n, j):
    """zeta_n^j as a CycNum."""
    out = [0] * n
    out[j % n] = 1
    return CycNum(n, out)


def from_counts(n, counts):
    """CycNum from a histogram of root exponents (numpy array ok)."""
    return CycNum(n, [int(c) for c in counts])
