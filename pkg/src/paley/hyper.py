"""Finite field hypergeometric sums in Greene's normalization.

Values are exact cyclotomic integers divided by a known power of q (and
q-1 for the definitional form), carried as ScaledValue. Two independent
code paths exist for every function: the single/double character sum
(the reference), and the definitional sum over all multiplicative
characters with cached Jacobi sums. The identity suite asserts the
printed reduction and transformation formulas exactly.

Parameter-tuple evaluation at lambda = 1 is the hot path driving the
order-four subtournament formulas: the double sum collapses onto a count
tensor over five residue classes, and one mod-k histogram transform then
yields q^2 times every hypergeometric value for all k^5 parameter tuples
at once.
"""

from functools import lru_cache

import numpy as np

from . import _kernels
from .characters import jacobi
from .cyclo import CycNum, from_counts
from .report import Report


class ScaledValue:
    """Exact num / den with a cyclotomic-integer numerator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if den <= 0:
            raise ValueError("denominator must be positive")
        self.num = num
        self.den = int(den)

    @staticmethod
    def _aligned(a, b):
        na, nb = a.num.n, b.num.n
        if na == nb:
            return a.num, b.num
        if nb % na == 0:
            return a.num.embed(nb), b.num
        if na % nb == 0:
            return a.num, b.num.embed(na)
        m = na * nb // int(np.gcd(na, nb))
        return a.num.embed(m), b.num.embed(m)

    def __add__(self, other):
        if isinstance(other, (int, np.integer)):
            other = ScaledValue(CycNum.integer(self.num.n, int(other)), 1)
        a, b = self._aligned(self, other)
        return ScaledValue(a * other.den + b * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return ScaledValue(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, np.integer)):
            other = ScaledValue(CycNum.integer(self.num.n, int(other)), 1)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return ScaledValue(self.num * int(other), self.den)
        a, b = self._aligned(self, other)
        return ScaledValue(a * b, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ScaledValue(self.num, self.den * int(other))

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = ScaledValue(CycNum.integer(self.num.n, int(other)), 1)
        if not isinstance(other, ScaledValue):
            return NotImplemented
        a, b = self._aligned(self, other)
        return (a * other.den - b * self.den).is_zero()

    def exact_integer(self):
        """The value as a plain integer; raises if it is not one."""
        z = self.num.to_integer()
        if z % self.den:
            raise ArithmeticError(f"{z}/{self.den} is not an integer")
        return z // self.den

    def to_complex(self):
        return self.num.to_complex() / self.den

    def __repr__(self):
        return f"ScaledValue(den={self.den}, num={self.num!r})"


def char_sign(f, t):
    """chi_t(-1) as +-1."""
    if f.p == 2:
        return 1
    return 1 if (t * (f.n // 2)) % f.n == 0 else -1


def _jcache(f):
    cache = getattr(f, "_jacobi_cache", None)
    if cache is None:
        cache = {}
        f._jacobi_cache = cache
    return cache


def _jac(f, s, t):
    key = (s % f.n, t % f.n)
    cache = _jcache(f)
    got = cache.get(key)
    if got is None:
        got = jacobi(f, key[0], key[1])
        cache[key] = got
    return got


def binom(f, ta, tb):
    """Greene's binomial symbol: chi_tb(-1)/q * J(chi_ta, conj(chi_tb))."""
    return ScaledValue(_jac(f, ta, -tb) * char_sign(f, tb), f.q)


def f2f1_charsum(f, ta, tb, tc, lam):
    """2F1(A,B;C|lambda) as its single character sum; denominator q.

    The grid runs over b = omega^j with j != 0: the terms at b = 0 and
    b = 1 vanish through the first and second factor. The value at
    lambda = 0 is exactly zero (every term of the defining sum carries
    chi(0) = 0); the grid expression represents lambda != 0 only."""
    n = f.n
    if lam == 0:
        return ScaledValue(CycNum(n), f.q)
    h = 0 if f.p == 2 else n // 2
    j = np.arange(1, n, dtype=np.int64)
    l1b = f.zech[(j + h) % n] if f.p != 2 else f.zech[j]
    ll = int(f.log[lam])
    keep = j != ll  # b = lambda kills the third factor
    e = (ta - tc) * j + (tc - tb) * l1b + (-ta) * ((ll + f.em1[(j - ll) % n]) % n)
    counts = np.bincount(e[keep] % n, minlength=n)
    return ScaledValue(from_counts(n, counts), f.q)


def f3f2_charsum(f, ta, tb, tc, td, te, lam):
    """3F2(A,B,C;D,E|lambda) as its double character sum; denominator q^2.

    Grid over a = omega^i, b = omega^j with i, j != 0: terms at
    a in {0, 1}, b in {0, 1} and a = lambda*b all vanish. As with the
    2F1 form, the lambda = 0 value is zero by definition."""
    n = f.n
    if lam == 0:
        return ScaledValue(CycNum(n), f.q * f.q)
    h = 0 if f.p == 2 else n // 2
    i = np.arange(1, n, dtype=np.int64)[:, None]
    j = np.arange(1, n, dtype=np.int64)[None, :]
    l1a = f.zech[(i + h) % n] if f.p != 2 else f.zech[i % n]
    e = (ta - te) * i + (te - tc) * l1a + tb * j + (td - tb) * f.em1[j]
    ll = int(f.log[lam])
    ljb = (ll + j) % n  # log(lambda * b)
    keep = np.broadcast_to(i != ljb, (n - 1, n - 1))
    lab = (ljb + f.em1[(i - ljb) % n]) % n  # a - lambda*b = lambda*b*(omega^{i-l} - 1)
    e = np.broadcast_to(e + (-ta) * lab, (n - 1, n - 1))
    counts = np.bincount(e[keep] % n, minlength=n)
    return ScaledValue(from_counts(n, counts), f.q * f.q)


def _binom_num(f, x, y):
    return _jac(f, x, -y) * char_sign(f, y)


def f2f1_definitional(f, ta, tb, tc, lam):
    """Greene's 2F1 as the sum over all characters; denominator q(q-1)."""
    n = f.n
    num = CycNum(n)
    if lam != 0:
        ll = int(f.log[lam])
        for j in range(n):
            term = _binom_num(f, ta + j, j) * _binom_num(f, tb + j, tc + j)
            num = num + term.shift(j * ll)
    return ScaledValue(num, f.q * (f.q - 1))


def f3f2_definitional(f, ta, tb, tc, td, te, lam):
    """Greene's 3F2 as the sum over all characters; denominator q^2(q-1)."""
    n = f.n
    num = CycNum(n)
    if lam != 0:
        ll = int(f.log[lam])
        for j in range(n):
            term = (
                _binom_num(f, ta + j, j)
                * _binom_num(f, tb + j, td + j)
                * _binom_num(f, tc + j, te + j)
            )
            num = num + term.shift(j * ll)
    return ScaledValue(num, f.q * f.q * (f.q - 1))


# ---------------------------------------------------------------------------
# power-character tuples: chi_k^{t1..t5}, values in Z[zeta_k]


def signed_f3f2(f, k, t, lam=1):
    """(-1)^{t3+t5} 3F2(chi_k^t1, chi_k^t2, chi_k^t3; chi_k^t4, chi_k^t5 | lam)
    with an order-k numerator; denominator q^2."""
    if f.n % k:
        raise ValueError(f"k = {k} does not divide q-1 = {f.n}")
    t1, t2, t3, t4, t5 = (x % k for x in t)
    n = f.n
    if lam == 0:
        return ScaledValue(CycNum(k), f.q * f.q)
    h = 0 if f.p == 2 else n // 2
    counts = np.zeros(k, dtype=np.int64)
    ll = int(f.log[lam])
    block = max(1, (1 << 21) // n)
    for start in range(1, n, block):
        i = np.arange(start, min(start + block, n), dtype=np.int64)[:, None]
        j = np.arange(1, n, dtype=np.int64)[None, :]
        rows = i.shape[0]
        c1a = (f.zech[(i + h) % n] if f.p != 2 else f.zech[i % n]) % k
        e = (t1 - t5) * i + (t5 - t3) * c1a + t2 * j + (t4 - t2) * (f.em1[j] % k)
        ljb = (ll + j) % n
        keep = np.broadcast_to(i != ljb, (rows, n - 1))
        cab = (ljb + f.em1[(i - ljb) % n]) % k
        e = np.broadcast_to((e - t1 * cab) % k, (rows, n - 1))
        counts += np.bincount(e[keep], minlength=k)
    sgn = (k // 2) * (t3 + t5)
    return ScaledValue(from_counts(k, counts).shift(sgn), f.q * f.q)


class TupleValueTable:
    """q^2 * 3F2(chi_k^{t}|1) for every t in (Z_k)^5, exact.

    Row order is lexicographic in (t1..t5); coefficients are with respect
    to zeta_k before the (-1)^{t3+t5} sign convention is applied.
    """

    def __init__(self, f, k):
        if f.n % k:
            raise ValueError(f"k = {k} does not divide q-1 = {f.n}")
        if f.p == 2:
            raise ValueError("power-residue digraph machinery needs odd q")
        if k > 12:
            raise ValueError("tuple tables are capped at k = 12")
        self.f = f
        self.k = k
        n = f.n
        c1a = f.zech[(np.arange(n, dtype=np.int64) + n // 2) % n] % k
        W = _kernels.w_tensor(f.em1, c1a, n, k, n // 2)
        self.coeffs = _kernels.transform5(W, k)
        total = int(self.coeffs[0].sum())
        if total != (f.q - 2) * (f.q - 3):
            raise RuntimeError("pair count mismatch in tuple table")  # bug guard

    def _flat(self, t):
        k = self.k
        idx = 0
        for x in t:
            idx = idx * k + (x % k)
        return idx

    def raw_value(self, t):
        """q^2 * 3F2 at the tuple, unsigned, as an order-k CycNum."""
        return from_counts(self.k, self.coeffs[self._flat(t)])

    def signed_value(self, t):
        """q^2 * (-1)^{t3+t5} 3F2 at the tuple."""
        shift = (self.k // 2) * (t[2] + t[4])
        return self.raw_value(t).shift(shift)

    def signed_total(self):
        """Sum of q^2 * signed values over every tuple in (Z_k)^5."""
        k = self.k
        t3 = (np.arange(k**5) // k) % k
        t5 = np.arange(k**5) % k
        par = (t3 + t5) % 2
        even = self.coeffs[par == 0].sum(axis=0)
        odd = self.coeffs[par == 1].sum(axis=0)
        return from_counts(k, even) + from_counts(k, np.roll(odd, k // 2))

    def signed_sum(self, tuples):
        """Sum of q^2 * signed values over an iterable of tuples."""
        k = self.k
        acc = np.zeros(k, dtype=object)
        for t in tuples:
            row = self.coeffs[self._flat(t)]
            shift = ((k // 2) * (t[2] + t[4])) % k
            acc += np.roll(row, shift)
        return CycNum(k, list(acc))


@lru_cache(maxsize=64)
def tuple_value_table(f, k):
    return TupleValueTable(f, k)


# ---------------------------------------------------------------------------
# identity suite


def _rand_exps(rng, n, m):
    return [int(x) for x in rng.integers(0, n, m)]


def identity_suite(f, k, trials=50, seed=1):
    """Exercise the printed reduction and transformation formulas on
    random character parameters at lambda = 1; exact equality."""
    rng = np.random.default_rng(seed)
    n = f.n
    q = f.q
    rep = Report(f"hypergeometric identities q={q} k={k}")
    F3 = lambda a, b, c, d, e: f3f2_charsum(f, a, b, c, d, e, 1)
    F2 = lambda a, b, c: f2f1_charsum(f, a, b, c, 1)
    B = lambda a, b: binom(f, a, b)
    m1 = lambda t: char_sign(f, t)

    cases = {
        "reduction t1=0": lambda A, Bb, C, D, E: (
            F3(0, Bb, C, D, E),
            -F2(Bb - D, C - D, E - D) / q + B(Bb, D) * B(C, E),
        ),
        "reduction t2=0": lambda A, Bb, C, D, E: (
            F3(A, 0, C, D, E),
            B(D, A) * F2(A - D, C - D, E - D) * m1(A) - B(C, E) * m1(D) / q,
        ),
        "reduction t4=t1": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, A, E),
            B(Bb, A) * F2(Bb, C, E) - B(C - A, E - A) * m1(A) / q,
        ),
        "reduction t4=t2": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, Bb, E),
            -F2(A, C, E) / q + B(A - Bb, -Bb) * B(C - Bb, E - Bb),
        ),
        "reduction t5=t2": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, Bb),
            B(C - D, Bb - D) * F2(A, C, D) - B(A - Bb, -Bb) * m1(Bb + D) / q,
        ),
        "reduction t5=t1+t2+t3-t4": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, A + Bb + C - D),
            B(C, D - A) * B(Bb, D - C) * m1(Bb + C) - B(D - Bb, A) * m1(Bb + D) / q,
        ),
        "2F1 reduction at 1": lambda A, Bb, C, D, E: (
            F2(A, Bb, C),
            B(Bb, C - A) * m1(A),
        ),
        "pair swap": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, E),
            F3(A, C, Bb, E, D),
        ),
        "transform shift by D": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, E),
            F3(Bb - D, A - D, C - D, -D, E - D),
        ),
        "transform pivot A": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, E),
            F3(A, A - D, A - E, A - Bb, A - C) * m1(A + Bb + C + D + E),
        ),
        "transform pivot B": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, E),
            F3(Bb - D, Bb, Bb - E, Bb - A, Bb - C) * m1(A + Bb + C + D + E),
        ),
        "transform third upper": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, E),
            F3(A, Bb, E - C, A + Bb - D, E) * m1(A + E),
        ),
        "transform second upper": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, E),
            F3(A, D - Bb, C, D, A + C - E) * m1(A + D),
        ),
        "transform first upper": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, E),
            F3(D - A, Bb, C, D, Bb + C - E) * m1(Bb),
        ),
        "transform both upper": lambda A, Bb, C, D, E: (
            F3(A, Bb, C, D, E),
            F3(D - A, D - Bb, C, D, D + E - A - Bb) * m1(A + Bb),
        ),
    }

    step = f.n // k
    for name, fn in cases.items():
        ok = True
        detail = ""
        for trial in range(trials):
            if trial % 2:
                params = _rand_exps(rng, n, 5)
            else:
                params = [step * x for x in _rand_exps(rng, k, 5)]
            lhs, rhs = fn(*params)
            if not lhs == rhs:
                ok = False
                detail = f"params={params}"
                break
        rep.add(name, ok, detail)
    return rep
