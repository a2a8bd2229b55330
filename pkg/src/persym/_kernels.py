"""Compiled inner loops.

Every kernel works on one contiguous range of a scan and returns a local
histogram, so callers can split a scan arbitrarily and merge by addition.
All kernels release the GIL.
"""

import numpy as np
from numba import njit

_jit = njit(cache=True, nogil=True)

TABLE_MAX_K = 20


@_jit
def _reduce(x, basis, width):
    # basis[b] is zero or a vector whose lowest set bit is b
    for b in range(width):
        if (x >> b) & 1 and basis[b] != 0:
            x ^= basis[b]
    return x


@_jit
def _insert(x, basis, width):
    x = _reduce(x, basis, width)
    if x == 0:
        return 0
    b = 0
    while not (x >> b) & 1:
        b += 1
    basis[b] = x
    return 1


@_jit
def persym_rank_hist(n, k, start, stop):
    """Rank histogram of the n-times persymmetric matrices for seeds in [start, stop).

    Block 1 (the lowest k+1 seed bits) varies fastest.  The spans of blocks
    n..j are kept per level and only the levels whose block changed are
    rebuilt; block 1's two rows are then classified against a reduction
    table of the span of blocks n..2.
    """
    w = k + 1
    wm = (1 << w) - 1
    cm = (1 << k) - 1
    hist = np.zeros(k + 1, np.int64)
    # bases[j] spans blocks j+1..n (1-based); bases[n] is empty
    bases = np.zeros((n + 1, k), np.int64)
    ranks = np.zeros(n + 1, np.int64)
    # a lookup table of reduced rows pays off only while 2^k stays small
    use_table = k <= TABLE_MAX_K
    red = np.zeros(1 << k if use_table else 1, np.int64)
    prev_prefix = -1
    s = start
    while s < stop:
        prefix = s >> w
        lo = s & wm
        hi = min(wm + 1, lo + (stop - s))
        if prefix != prev_prefix:
            if prev_prefix < 0:
                top = n - 1
            else:
                diff = prefix ^ prev_prefix
                hb = 0
                while diff >> (hb + 1):
                    hb += 1
                top = hb // w + 1
            for j in range(top, 0, -1):
                bases[j, :] = bases[j + 1, :]
                r = ranks[j + 1]
                blk = (prefix >> ((j - 1) * w)) & wm
                r += _insert(blk & cm, bases[j], k)
                r += _insert(blk >> 1, bases[j], k)
                ranks[j] = r
            if use_table:
                for v in range(1 << k):
                    red[v] = _reduce(v, bases[1], k)
            prev_prefix = prefix
        r = ranks[1]
        for last in range(lo, hi):
            if use_table:
                a = red[last & cm]
                b = red[last >> 1]
            else:
                a = _reduce(last & cm, bases[1], k)
                b = _reduce(last >> 1, bases[1], k)
            if a == 0 and b == 0:
                extra = 0
            elif a == 0 or b == 0 or a == b:
                extra = 1
            else:
                extra = 2
            hist[r + extra] += 1
        s += hi - lo
    return hist


@_jit
def persym_ranks(n, k, seeds):
    """Rank of each seed, eliminating every row independently (no sharing)."""
    w = k + 1
    wm = (1 << w) - 1
    cm = (1 << k) - 1
    out = np.zeros(seeds.shape[0], np.int64)
    basis = np.zeros(k, np.int64)
    for idx in range(seeds.shape[0]):
        s = seeds[idx]
        basis[:] = 0
        r = 0
        for j in range(n):
            blk = (s >> (j * w)) & wm
            r += _insert(blk & cm, basis, k)
            r += _insert(blk >> 1, basis, k)
        out[idx] = r
    return out


@_jit
def _constraint_rows(urow, k, q, rows, offset):
    # urow packs U^(1..q) of one equation, 2 bits each: bit 2i = constant,
    # bit 2i+1 = T coefficient. Variable i*k+d is the T^d coefficient of Y_i.
    for e in range(k + 1):
        word = 0
        for i in range(q):
            a = (urow >> (2 * i)) & 1
            b = (urow >> (2 * i + 1)) & 1
            if a and e < k:
                word ^= 1 << (i * k + e)
            if b and e >= 1:
                word ^= 1 << (i * k + e - 1)
        rows[offset + e] = word


@_jit
def rq_u_scan_hist(n, k, q, start, stop):
    """Histogram of constraint-matrix ranks over U-assignments in [start, stop)."""
    width = k * q
    rm = (1 << (2 * q)) - 1
    hist = np.zeros(width + 1, np.int64)
    basis = np.zeros(width, np.int64)
    rows = np.zeros(n * (k + 1), np.int64)
    for u in range(start, stop):
        for j in range(n):
            _constraint_rows((u >> (2 * q * j)) & rm, k, q, rows, j * (k + 1))
        basis[:] = 0
        r = 0
        for t in range(rows.shape[0]):
            r += _insert(rows[t], basis, width)
            if r == width:
                break
        hist[r] += 1
    return hist


@_jit
def rq_y_scan_hist(k, q, start, stop):
    """For Y-tuples in [start, stop), histogram of N(Y) = #{U rows with sum Y_i U^(i) = 0}."""
    ym = (1 << k) - 1
    nrows = 1 << (2 * q)
    hist = np.zeros(nrows + 1, np.int64)
    ys = np.zeros(q, np.int64)
    for y in range(start, stop):
        for i in range(q):
            ys[i] = (y >> (i * k)) & ym
        cnt = 0
        for urow in range(nrows):
            acc = 0
            for i in range(q):
                if (urow >> (2 * i)) & 1:
                    acc ^= ys[i]
                if (urow >> (2 * i + 1)) & 1:
                    acc ^= ys[i] << 1
            if acc == 0:
                cnt += 1
        hist[cnt] += 1
    return hist


@_jit
def census_hist(n, dependent, start, stop):
    """Rank histogram (over F2(T)) of n x 2 degree-<=1 matrices in [start, stop).

    ``dependent[r1, r2]`` is 1 when the 2x2 minor of rows r1, r2 vanishes.
    """
    hist = np.zeros(3, np.int64)
    for m in range(start, stop):
        if m == 0:
            hist[0] += 1
            continue
        j = 0
        while (m >> (4 * j)) & 15 == 0:
            j += 1
        pivot = (m >> (4 * j)) & 15
        rk = 1
        for t in range(j + 1, n):
            if dependent[pivot, (m >> (4 * t)) & 15] == 0:
                rk = 2
                break
        hist[rk] += 1
    return hist


@_jit
def f_k_values(n, k, seeds):
    """Exponential sum f_k for each seed, by the factored sum over Y and U_j."""
    w = k + 1
    wm = (1 << w) - 1
    out = np.zeros(seeds.shape[0], np.int64)
    for idx in range(seeds.shape[0]):
        s = seeds[idx]
        total = 0
        for y in range(1 << k):
            prod = 1
            for j in range(n):
                tail = (s >> (j * w)) & wm
                inner = 0
                for u in range(4):
                    p = 0
                    if u & 1:
                        p ^= y
                    if u & 2:
                        p ^= y << 1
                    # E(t*Y*U) is the parity of the T^-1 coefficient
                    x = p & tail
                    par = 0
                    while x:
                        par ^= 1
                        x &= x - 1
                    inner += 1 - 2 * par
                prod *= inner
                if prod == 0:
                    break
            total += prod
        out[idx] = total
    return out
