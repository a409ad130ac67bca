"""Hot numeric kernels, in numba and pure-numpy variants.

Every public function here dispatches on the selected backend (see
``_backend``). The numba variants are plain nested loops; the numpy
variants reach the same results with vectorized array passes. Both are
exercised against each other in the test suite.

Integer ranges: all kernels work on int64 data. Counts accumulated here
are bounded by q^2 <= 2**40 per cell (field size is capped well below
that), so int64 never overflows.
"""

import numpy as np

from ._backend import USE_NUMBA, njit

# ---------------------------------------------------------------------------
# field table construction


@njit(cache=True)
def _prime_exp_table_nb(p, g, n):
    exp = np.empty(n, dtype=np.int64)
    x = 1
    for m in range(n):
        exp[m] = x
        x = (x * g) % p
    return exp


def _prime_exp_table_np(p, g, n):
    # doubling passes: exp[m + B] = exp[m] * exp[B] mod p
    exp = np.empty(n, dtype=np.int64)
    exp[0] = 1
    filled = 1
    if n > 1:
        exp[1] = g % p
        filled = 2
    while filled < n:
        take = min(filled, n - filled)
        exp[filled : filled + take] = exp[:take] * exp[filled - 1] * g % p
        filled += take
    return exp


def prime_exp_table(p, g, n):
    """Powers g**m mod p for m in [0, n)."""
    if USE_NUMBA:
        return _prime_exp_table_nb(p, g, n)
    return _prime_exp_table_np(p, g, n)


@njit(cache=True)
def _ext_exp_table_nb(p, r, modc, q):
    # Multiply-by-x walk in Z_p[x]/(f), digits packed base p. Returns the
    # exponent->value table plus 1 if x is a generator, else 0.
    n = q - 1
    exp = np.zeros(n, dtype=np.int64)
    d = np.zeros(r, dtype=np.int64)
    pw = np.empty(r, dtype=np.int64)
    w = 1
    for i in range(r):
        pw[i] = w
        w *= p
    d[0] = 1
    for m in range(n):
        v = 0
        for i in range(r):
            v += d[i] * pw[i]
        if v == 1 and m > 0:
            return exp, 0
        exp[m] = v
        top = d[r - 1]
        for i in range(r - 1, 0, -1):
            d[i] = (d[i - 1] - top * modc[i]) % p
        d[0] = (-top * modc[0]) % p
    v = 0
    for i in range(r):
        v += d[i] * pw[i]
    if v != 1:
        return exp, 0
    return exp, 1


def _ext_exp_table_py(p, r, modc, q):
    n = q - 1
    exp = np.zeros(n, dtype=np.int64)
    d = [0] * r
    d[0] = 1
    pw = [p**i for i in range(r)]
    for m in range(n):
        v = sum(di * w for di, w in zip(d, pw))
        if v == 1 and m > 0:
            return exp, 0
        exp[m] = v
        top = d[r - 1]
        for i in range(r - 1, 0, -1):
            d[i] = (d[i - 1] - top * modc[i]) % p
        d[0] = (-top * modc[0]) % p
    v = sum(di * w for di, w in zip(d, pw))
    if v != 1:
        return exp, 0
    return exp, 1


def ext_exp_table(p, r, modc, q):
    """Exponent table for F_{p^r} = Z_p[x]/(f), f monic with low
    coefficients ``modc``; second return value is 1 iff x generates."""
    modc = np.asarray(modc, dtype=np.int64)
    if USE_NUMBA:
        return _ext_exp_table_nb(p, r, modc, q)
    return _ext_exp_table_py(p, int(r), modc, q)


# ---------------------------------------------------------------------------
# transitive subtournament counting (adjacency matrices, uint8)


@njit(cache=True)
def _count_k3_nb(adj):
    q = adj.shape[0]
    total = 0
    for a in range(q):
        for b in range(q):
            if adj[a, b]:
                for c in range(q):
                    if adj[a, c] and adj[b, c]:
                        total += 1
    return total


def _count_k3_np(adj):
    a = adj.astype(np.float64)
    common = a @ a.T
    return int(np.rint((a * common).sum()))


def count_k3(adj):
    """Number of 3-subsets inducing a transitive tournament."""
    if USE_NUMBA:
        return _count_k3_nb(adj)
    return _count_k3_np(adj)


@njit(cache=True)
def _count_k4_nb(adj):
    q = adj.shape[0]
    total = 0
    nb = np.empty(q, dtype=np.int64)
    for a in range(q):
        s = 0
        for b in range(q):
            if adj[a, b]:
                nb[s] = b
                s += 1
        for i in range(s):
            b = nb[i]
            for j in range(s):
                c = nb[j]
                if adj[b, c]:
                    for l in range(s):
                        d = nb[l]
                        if adj[b, d] and adj[c, d]:
                            total += 1
    return total


def _count_k4_np(adj):
    a = adj.astype(np.float64)
    total = 0.0
    for src in range(adj.shape[0]):
        idx = np.nonzero(adj[src])[0]
        if idx.size < 3:
            continue
        sub = a[np.ix_(idx, idx)]
        total += (sub * (sub @ sub.T)).sum()
    return int(np.rint(total))


def count_k4(adj):
    """Number of 4-subsets inducing a transitive tournament."""
    if USE_NUMBA:
        return _count_k4_nb(adj)
    return _count_k4_np(adj)


# ---------------------------------------------------------------------------
# edge scans on the power-residue subgraphs
#
# Vertices of the subgraph induced on the k-th power residues are
# omega**(k*delta); the edge relation depends only on delta2 - delta1
# modulo (q-1)/k, so membership tests run on a boolean table of that size.


@njit(cache=True)
def _conn_pairs_nb(conn, member, m, stop_early):
    cnt = 0
    for i in range(conn.size):
        d1 = conn[i]
        for j in range(conn.size):
            if member[(conn[j] - d1) % m]:
                if stop_early:
                    return 1
                cnt += 1
    return cnt


def _conn_pairs_np(conn, member, m, stop_early):
    cnt = 0
    for d1 in conn:
        hits = int(member[(conn - d1) % m].sum())
        if hits and stop_early:
            return 1
        cnt += hits
    return cnt


def conn_pairs(conn, member, m, stop_early=False):
    """Count pairs (d1, d2) of connection-set elements with d2-d1 again in
    the connection set; with ``stop_early`` returns 1 at the first hit."""
    conn = np.ascontiguousarray(conn, dtype=np.int64)
    if USE_NUMBA:
        return int(_conn_pairs_nb(conn, member, m, stop_early))
    return int(_conn_pairs_np(conn, member, m, stop_early))


# ---------------------------------------------------------------------------
# class-count tensor for the double character sum at lambda = 1
#
# For a = omega**i, b = omega**j (a, b not in {0, 1}, a != b) the five
# residue classes entering the sum are reindexed to
#   u1 = cls(a) - cls(a-b),  u2 = cls(b) - cls(b-1),  u3 = -cls(1-a),
#   u4 = cls(b-1),           u5 = cls(1-a) - cls(a)      (all mod k)
# and W[u1..u5] counts the pairs hitting each combination.


@njit(cache=True)
def _w_tensor_nb(em1, c1a, n, k, h):
    W = np.zeros(k**5, dtype=np.int64)
    k2 = k * k
    k3 = k2 * k
    k4 = k3 * k
    for i in range(1, n):
        ca = i % k
        c1 = c1a[i]
        u3 = (-c1) % k
        u5 = (c1 - ca) % k
        base = u3 * k2 + u5
        for j in range(1, n):
            if j == i:
                continue
            cab = (i + em1[(j - i) % n] + h) % k
            cb1 = em1[j] % k
            u1 = (ca - cab) % k
            u2 = (j - cb1) % k
            W[u1 * k4 + u2 * k3 + base + cb1 * k] += 1
    return W


def _w_tensor_np(em1, c1a, n, k, h):
    W = np.zeros(k**5, dtype=np.int64)
    j = np.arange(1, n, dtype=np.int64)
    cb1 = em1[1:] % k
    u2k3 = ((j - cb1) % k) * k**3 + cb1 * k
    for i in range(1, n):
        ca = i % k
        c1 = int(c1a[i])
        base = ((-c1) % k) * k * k + (c1 - ca) % k
        cab = (i + em1[(j - i) % n] + h) % k
        flat = ((ca - cab) % k) * k**4 + u2k3 + base
        W += np.bincount(flat[j != i], minlength=k**5)
    return W


def w_tensor(em1, c1a, n, k, h):
    """Count tensor over the five residue classes of the double sum."""
    if USE_NUMBA:
        return _w_tensor_nb(em1, c1a, n, k, h)
    return _w_tensor_np(em1, c1a, n, k, h)


# ---------------------------------------------------------------------------
# mod-k linear-functional histogram
#
# Input W over u in (Z_k)^5; output V[t, j] = sum of W[u] over u with
# <t, u> = j (mod k), for every t in (Z_k)^5. Evaluated one coordinate at
# a time; each stage costs k^7 additions and k^6 memory.


@njit(cache=True)
def _transform5_nb(W, k):
    size = k**6
    cur = np.zeros(size, dtype=np.int64)
    cur[: k**5] = W  # layout (T=1, j, u_i, rest)
    nxt = np.zeros(size, dtype=np.int64)
    T = 1
    R = k**4
    for _stage in range(5):
        nxt[:] = 0
        for t in range(T):
            for ti in range(k):
                for j in range(k):
                    orow = ((t * k + ti) * k + j) * R
                    for ui in range(k):
                        irow = ((t * k + (j - ti * ui) % k) * k + ui) * R
                        for rr in range(R):
                            nxt[orow + rr] += cur[irow + rr]
        cur, nxt = nxt, cur
        T *= k
        R //= k
    return cur.reshape(k**5, k)


def _transform5_np(W, k):
    T, R = 1, k**4
    cur = np.zeros((1, k, k, R), dtype=np.int64)
    cur[0, 0] = W.reshape(k, R)
    for _stage in range(5):
        nxt = np.zeros((T, k, k, R), dtype=np.int64)  # (T, t_i, j, rest)
        for ti in range(k):
            for ui in range(k):
                nxt[:, ti] += np.roll(cur[:, :, ui, :], (ti * ui) % k, axis=1)
        T *= k
        if R > 1:
            R //= k
            cur = nxt.reshape(T, k, k, R)
        else:
            cur = nxt.reshape(T, k, 1, 1)
    return cur.reshape(k**5, k)


def transform5(W, k):
    """All inner-product histograms of W: result[t, j] = sum over u of
    W[u] with t.u = j mod k (t flattened lexicographically)."""
    W = np.ascontiguousarray(W, dtype=np.int64)
    if USE_NUMBA:
        return _transform5_nb(W, k)
    return _transform5_np(W, k)
