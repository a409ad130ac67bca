"""Multiplicative characters of F_q*, Jacobi and Gauss sums, and the
aggregate Jacobi-sum sums feeding the subtournament counts.

A character is identified by its index t modulo q-1: chi_t(omega^m) =
zeta_{q-1}^{t m}, extended by chi_t(0) = 0 for every t (including the
trivial character). The canonical character of order k is chi_{(q-1)/k},
so its value at omega is exactly zeta_k.
"""

from dataclasses import dataclass

import numpy as np

from .cyclo import CycNum, from_counts
from .report import Report


def char_value(f, t, a):
    """chi_t evaluated at the packed value a, as an exact CycNum."""
    if a == 0:
        return CycNum(f.n)
    counts = np.zeros(f.n, dtype=np.int64)
    counts[(t * int(f.log[a])) % f.n] = 1
    return from_counts(f.n, counts)


def _log_pairs(f):
    """(i, log(1 - omega^i)) for i in [1, q-1); the a = 0, 1 terms of a
    Jacobi sum vanish because every character kills 0."""
    i = np.arange(1, f.n, dtype=np.int64)
    if f.p == 2:
        l1a = f.zech[i]
    else:
        l1a = f.zech[(i + f.n // 2) % f.n]
    return i, l1a


def jacobi(f, t1, t2):
    """J(chi_t1, chi_t2) = sum_a chi_t1(a) chi_t2(1-a), exact in Z[zeta_{q-1}]."""
    i, l1a = _log_pairs(f)
    counts = np.bincount((t1 * i + t2 * l1a) % f.n, minlength=f.n)
    return from_counts(f.n, counts)


def jacobi_power_class(f, k, s, t):
    """J(chi_k^s, chi_k^t) in the order-k representation Z[zeta_k].

    Valid because all values of chi_k^s are k-th roots of unity; this is
    the workhorse for the aggregate sums at large q."""
    if f.n % k:
        raise ValueError(f"k = {k} does not divide q-1 = {f.n}")
    i, l1a = _log_pairs(f)
    counts = np.bincount((s * (i % k) + t * (l1a % k)) % k, minlength=k)
    return from_counts(k, counts)


def gauss(f, t, psi=None):
    """Gauss sum g(chi_t) in complex doubles (fast path only).

    psi defaults to the canonical additive character exp(2 pi i Tr(.)/p),
    given as its values indexed by element exponent."""
    if psi is None:
        psi = np.exp(2j * np.pi * f.trace_table / f.p)
    chi = np.exp(2j * np.pi * (t * np.arange(f.n, dtype=np.int64) % f.n) / f.n)
    return complex(np.sum(chi * psi))


@dataclass(frozen=True)
class JacobiAggregates:
    """The eight integer-valued Jacobi-sum aggregates for a pair (q, k)."""

    r: int
    r_minus: int
    s: int
    s_minus: int
    j0: int
    j0_minus: int
    jj0: int
    jj0_minus: int


def _jacobi_grid(f, k):
    return [[jacobi_power_class(f, k, s, t) for t in range(k)] for s in range(k)]


def aggregates(f, k, grid=None):
    """All eight aggregate sums, computed from their defining index
    ranges and reduced to rational integers."""
    if grid is None:
        grid = _jacobi_grid(f, k)
    zero = CycNum(k)

    r = zero
    r_minus = zero
    for s in range(1, k):
        for t in range(1, k):
            if (s + t) % k == 0:
                continue
            r = r + grid[s][t]
            r_minus = r_minus + grid[s][t] * ((-1) ** (s + t))

    s_sum = zero
    s_minus = zero
    for s in range(1, k):
        for t in range(1, k):
            if (s + t) % k == 0:
                continue
            left = grid[s][t]
            left_signed = left * ((-1) ** (s + t))
            for v in range(1, k):
                if (v + t) % k == 0 or (v - s) % k == 0:
                    continue
                right = grid[(-s) % k][v]
                s_sum = s_sum + left * right
                s_minus = s_minus + left_signed * right

    j0 = zero
    j0_minus = zero
    for s in range(k):
        for t in range(k):
            j0 = j0 + grid[s][t]
            j0_minus = j0_minus + grid[s][t] * ((-1) ** (s + t))

    jj0 = zero
    jj0_minus = zero
    for s in range(k):
        for t in range(k):
            left = grid[s][t]
            left_signed = left * ((-1) ** (s + t))
            for v in range(k):
                right = grid[(-s) % k][v]
                jj0 = jj0 + left * right
                jj0_minus = jj0_minus + left_signed * right

    return JacobiAggregates(
        r=r.to_integer(),
        r_minus=r_minus.to_integer(),
        s=s_sum.to_integer(),
        s_minus=s_minus.to_integer(),
        j0=j0.to_integer(),
        j0_minus=j0_minus.to_integer(),
        jj0=jj0.to_integer(),
        jj0_minus=jj0_minus.to_integer(),
    )


def check_aggregate_identities(f, k):
    """Verify the seven bookkeeping identities tying the full-range
    aggregate sums to their restricted-range counterparts."""
    q = f.q
    grid = _jacobi_grid(f, k)
    agg = aggregates(f, k, grid=grid)
    rep = Report(f"aggregate identities q={q} k={k}")

    rep.add("j0 = r + q - 2k + 1", agg.j0 == agg.r + q - 2 * k + 1, f"{agg.j0}")
    rep.add("j0m = rm + q + 1", agg.j0_minus == agg.r_minus + q + 1, f"{agg.j0_minus}")
    rep.add(
        "jj0 = s - 4r + q^2 + q(k^2-5k) + k^2 + 4k - 3",
        agg.jj0 == agg.s - 4 * agg.r + q * q + q * (k * k - 5 * k) + k * k + 4 * k - 3,
        f"{agg.jj0}",
    )
    rep.add(
        "jj0m = sm - rm - 3r + q^2 - 2kq + 3(k-1)",
        agg.jj0_minus
        == agg.s_minus - agg.r_minus - 3 * agg.r + q * q - 2 * k * q + 3 * (k - 1),
        f"{agg.jj0_minus}",
    )

    lhs_e = CycNum(k)
    for s in range(k):
        for t in range(k):
            lhs_e = lhs_e + grid[s][t] * ((-1) ** s)
    rep.add("sum (-1)^s J = j0", lhs_e.to_integer() == agg.j0)

    lhs_f = CycNum(k)
    lhs_g = CycNum(k)
    for s in range(k):
        for t in range(k):
            for v in range(k):
                term = grid[s][t] * grid[(-s) % k][v] * ((-1) ** (t + v))
                lhs_f = lhs_f + term
                if s and t and v and (s + t) % k and (v + t) % k and (v - s) % k:
                    lhs_g = lhs_g + term
    rep.add(
        "sum (-1)^{t+v} JJ = jj0 + k^2(q-1)",
        lhs_f.to_integer() == agg.jj0 + k * k * (q - 1),
    )
    rep.add(
        "restricted (-1)^{t+v} JJ = s + qk(k-2)",
        lhs_g.to_integer() == agg.s + q * k * (k - 2),
    )
    return rep
