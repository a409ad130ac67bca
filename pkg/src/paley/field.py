"""Finite fields F_q, q = p^r, with discrete-log and Zech tables.

Elements travel in two interchangeable forms:

* packed value: an int in [0, q) whose base-p digits are the coefficients
  of the polynomial representative (plain residue for r = 1); 0 is the
  zero element and 1 the multiplicative identity.
* exponent: m meaning omega**m, with -1 as the zero sentinel. Addition in
  exponent form goes through the Zech table.

Construction is deterministic: for r = 1 omega is the smallest primitive
root of p; for r > 1 the modulus is the first primitive monic polynomial
of degree r in lexicographic order, constant coefficient compared first,
and omega is its root x.
"""

from functools import lru_cache

import numpy as np

from . import _kernels

DEFAULT_CAP = 1 << 20

ZERO_LOG = -1


def is_prime(m):
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_factors(m):
    """Distinct prime divisors of m >= 1."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def factor_prime_power(q):
    """(p, r) with q = p^r, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in prime_factors(q):
        r = 0
        m = q
        while m % p == 0:
            m //= p
            r += 1
        return (p, r) if m == 1 else None
    return None


def is_prime_power(q):
    return factor_prime_power(q) is not None


def valid_modulus(q, k):
    """True iff k is even >= 2, q is a prime power and q = k+1 mod 2k,
    the condition making the k-th power digraph well defined."""
    if k < 2 or k % 2 != 0:
        return False
    if q % (2 * k) != k + 1:
        return False
    return is_prime_power(q)


def smallest_primitive_root(p):
    fac = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in fac):
            return g
    raise RuntimeError(f"no primitive root mod {p}")  # unreachable for prime p


class Field:
    """Immutable F_q table set; safe to share between threads."""

    def __init__(self, p, r=1, *, modulus=None, omega=None, cap=DEFAULT_CAP):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if r < 1:
            raise ValueError(f"r = {r} must be >= 1")
        q = p**r
        if q > cap:
            raise ValueError(f"q = {q} exceeds the cap {cap}")
        self.p = p
        self.r = r
        self.q = q
        self.n = q - 1

        if r == 1:
            if omega is None:
                omega = smallest_primitive_root(p)
            else:
                fac = prime_factors(p - 1)
                if any(pow(omega, (p - 1) // f, p) == 1 for f in fac):
                    raise ValueError(f"{omega} is not a primitive root mod {p}")
            self.modulus = ((-omega) % p, 1)
            self.exp = _kernels.prime_exp_table(p, omega, self.n)
        else:
            if omega is not None:
                raise ValueError("omega override only applies to prime fields")
            if modulus is not None:
                modc = np.asarray(modulus[:r], dtype=np.int64)
                if len(modulus) != r + 1 or modulus[r] != 1:
                    raise ValueError("modulus must be monic of degree r")
                exp, ok = _kernels.ext_exp_table(p, r, modc, q)
                if not ok:
                    raise ValueError("modulus is not primitive")
                self.modulus = tuple(int(c) % p for c in modulus[:r]) + (1,)
                self.exp = exp
            else:
                self.modulus, self.exp = self._search_modulus(p, r, q)
        self.omega = int(self.exp[1]) if self.n > 1 else 1

        log = np.full(q, ZERO_LOG, dtype=np.int64)
        log[self.exp] = np.arange(self.n, dtype=np.int64)
        self.log = log

        # zech[m] = log(1 + omega^m); em1[m] = log(omega^m - 1); -1 when zero
        v = self.exp
        d0 = v % p
        self.zech = log[v - d0 + (d0 + 1) % p]
        self.em1 = log[v - d0 + (d0 - 1) % p]
        self._trace = None
        self._pw = p ** np.arange(r, dtype=np.int64)

    @staticmethod
    def _search_modulus(p, r, q):
        # lexicographic on (c0, .., c_{r-1}); c0 = 0 can never be primitive
        for idx in range(p**r):
            digits = []
            m = idx
            for _ in range(r):
                digits.append(m % p)
                m //= p
            digits.reverse()  # idx counts with c0 as the most significant digit
            if digits[0] == 0:
                continue
            modc = np.asarray(digits, dtype=np.int64)
            exp, ok = _kernels.ext_exp_table(p, r, modc, q)
            if ok:
                return tuple(int(c) for c in digits) + (1,), exp
        raise RuntimeError(f"no primitive polynomial of degree {r} over Z_{p}")

    # -- representation plumbing ------------------------------------------

    def digits(self, v):
        """Base-p digit array of packed values (vectorized)."""
        v = np.asarray(v, dtype=np.int64)
        return (v[..., None] // self._pw) % self.p

    def pack(self, d):
        return (np.asarray(d, dtype=np.int64) * self._pw).sum(axis=-1)

    def log_of(self, a):
        return int(self.log[a])

    def exp_of(self, m):
        return int(self.exp[m % self.n]) if m != ZERO_LOG else 0

    def elements(self):
        """All packed values, zero first."""
        return np.arange(self.q, dtype=np.int64)

    # -- arithmetic on packed values --------------------------------------

    def add(self, a, b):
        if self.r == 1:
            return (a + b) % self.p
        return int(self.pack((self.digits(a) + self.digits(b)) % self.p))

    def neg(self, a):
        if self.r == 1:
            return (-a) % self.p
        return int(self.pack((-self.digits(a)) % self.p))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % self.n])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self.exp[(-self.log[a]) % self.n])

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 0 if e else 1
        return int(self.exp[(self.log[a] * e) % self.n])

    def add_values(self, a, b):
        """Vectorized addition of packed-value arrays."""
        if self.r == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        return self.pack((self.digits(a) + self.digits(b)) % self.p)

    def sub_values(self, a, b):
        if self.r == 1:
            return (np.asarray(a) - np.asarray(b)) % self.p
        return self.pack((self.digits(a) - self.digits(b)) % self.p)

    # -- arithmetic on exponents (Zech path) ------------------------------

    def add_log(self, la, lb):
        """Addition in exponent form; ZERO_LOG marks the zero element."""
        if la == ZERO_LOG:
            return lb
        if lb == ZERO_LOG:
            return la
        z = self.zech[(lb - la) % self.n]
        if z == ZERO_LOG:
            return ZERO_LOG
        return (la + z) % self.n

    def neg_log(self, la):
        if la == ZERO_LOG:
            return ZERO_LOG
        return (la + self.n // 2) % self.n if self.p != 2 else la

    # -- derived tables ----------------------------------------------------

    @property
    def trace_table(self):
        """trace[m] = Tr(omega^m) as an element of Z_p (absolute trace)."""
        if self._trace is None:
            m = np.arange(self.n, dtype=np.int64)
            acc = self.exp[m]
            ml = m
            for _ in range(self.r - 1):
                ml = (ml * self.p) % self.n
                acc = self.add_values(acc, self.exp[ml])
            if np.any(acc >= self.p):
                raise RuntimeError("trace left the prime subfield")  # bug guard
            self._trace = acc
        return self._trace

    def class_table(self, k):
        """Packed value -> residue class log(v) mod k, -1 for v = 0."""
        if self.n % k:
            raise ValueError(f"k = {k} does not divide q-1 = {self.n}")
        t = self.log % k
        t[0] = -1
        return t

    def __repr__(self):
        return f"Field(p={self.p}, r={self.r})"


@lru_cache(maxsize=None)
def build_field(p, r=1):
    """Deterministic field construction (cached; Field is immutable)."""
    return Field(p, r)


def residue_class(f, k, a):
    """Class index log(a) mod k of a packed value, or -1 for a = 0;
    class 0 means a is a nonzero k-th power."""
    if f.n % k:
        raise ValueError(f"k = {k} does not divide q-1 = {f.n}")
    if a == 0:
        return -1
    return int(f.log[a]) % k


def coset(f, k, i):
    """omega^i * S_k as a sorted array of packed values."""
    if f.n % k:
        raise ValueError(f"k = {k} does not divide q-1 = {f.n}")
    if not 0 <= i < k:
        raise ValueError(f"coset index {i} out of range [0, {k})")
    vals = f.exp[(i + k * np.arange(f.n // k, dtype=np.int64)) % f.n]
    return np.sort(vals)
