"""Numba-compiled kernels: SA-IS suffix array, Kasai LCP, LCP-interval sweeps.

These are the only hot loops in the package; everything else stays in plain
Python. All kernels are cache-compiled, so the JIT cost is paid once per
environment. Arrays use int64 throughout to keep the recursive SA-IS calls
type-stable.
"""

import numpy as np
from numba import njit

S_TYPE = 1
L_TYPE = 0


@njit(cache=True)
def _induce_l(s, sa, bucket_sizes, t):
    sigma = bucket_sizes.shape[0]
    heads = np.empty(sigma, np.int64)
    off = 1
    for c in range(sigma):
        heads[c] = off
        off += bucket_sizes[c]
    for p in range(sa.shape[0]):
        j = sa[p] - 1
        if sa[p] == -1 or j < 0:
            continue
        if t[j] != L_TYPE:
            continue
        c = s[j]
        sa[heads[c]] = j
        heads[c] += 1


@njit(cache=True)
def _induce_s(s, sa, bucket_sizes, t):
    sigma = bucket_sizes.shape[0]
    tails = np.empty(sigma, np.int64)
    off = 1
    for c in range(sigma):
        off += bucket_sizes[c]
        tails[c] = off - 1
    for p in range(sa.shape[0] - 1, -1, -1):
        j = sa[p] - 1
        if j < 0:
            continue
        if t[j] != S_TYPE:
            continue
        c = s[j]
        sa[tails[c]] = j
        tails[c] -= 1


@njit(cache=True)
def _lms_eq(s, t, a, b):
    n = s.shape[0]
    if a == n or b == n:
        return False
    i = 0
    while True:
        a_lms = (a + i > 0) and t[a + i] == S_TYPE and t[a + i - 1] == L_TYPE
        b_lms = (b + i > 0) and t[b + i] == S_TYPE and t[b + i - 1] == L_TYPE
        if i > 0 and a_lms and b_lms:
            return True
        if a_lms != b_lms:
            return False
        if s[a + i] != s[b + i]:
            return False
        i += 1


@njit(cache=True)
def _sais(s, sigma):
    """Suffix array by induced sorting; returns n+1 entries, the virtual
    empty suffix first."""
    n = s.shape[0]
    t = np.empty(n + 1, np.uint8)
    t[n] = S_TYPE
    if n > 0:
        t[n - 1] = L_TYPE
        for i in range(n - 2, -1, -1):
            if s[i] > s[i + 1]:
                t[i] = L_TYPE
            elif s[i] == s[i + 1] and t[i + 1] == L_TYPE:
                t[i] = L_TYPE
            else:
                t[i] = S_TYPE

    bucket_sizes = np.zeros(sigma, np.int64)
    for i in range(n):
        bucket_sizes[s[i]] += 1

    sa = np.full(n + 1, -1, np.int64)
    if n == 0:
        sa[0] = 0
        return sa

    tails = np.empty(sigma, np.int64)
    off = 1
    for c in range(sigma):
        off += bucket_sizes[c]
        tails[c] = off - 1
    for i in range(1, n):
        if t[i] == S_TYPE and t[i - 1] == L_TYPE:
            c = s[i]
            sa[tails[c]] = i
            tails[c] -= 1
    sa[0] = n

    _induce_l(s, sa, bucket_sizes, t)
    _induce_s(s, sa, bucket_sizes, t)

    names = np.full(n + 1, -1, np.int64)
    cur = 0
    last = sa[0]
    names[sa[0]] = cur
    for p in range(1, n + 1):
        i = sa[p]
        if not (i > 0 and t[i] == S_TYPE and t[i - 1] == L_TYPE):
            continue
        if not _lms_eq(s, t, last, i):
            cur += 1
        last = i
        names[i] = cur

    m = 0
    for i in range(n + 1):
        if names[i] != -1:
            m += 1
    summary = np.empty(m, np.int64)
    offsets = np.empty(m, np.int64)
    j = 0
    for i in range(n + 1):
        if names[i] != -1:
            summary[j] = names[i]
            offsets[j] = i
            j += 1
    summary_sigma = cur + 1

    if summary_sigma == m:
        ssa = np.full(m + 1, -1, np.int64)
        ssa[0] = m
        for x in range(m):
            ssa[summary[x] + 1] = x
    else:
        ssa = _sais(summary, summary_sigma)

    sa[:] = -1
    off = 1
    for c in range(sigma):
        off += bucket_sizes[c]
        tails[c] = off - 1
    for p in range(m, 1, -1):
        i = offsets[ssa[p]]
        c = s[i]
        sa[tails[c]] = i
        tails[c] -= 1
    sa[0] = n

    _induce_l(s, sa, bucket_sizes, t)
    _induce_s(s, sa, bucket_sizes, t)
    return sa


@njit(cache=True)
def _kasai(s, sa):
    """Rank array and LCP array; lcp[p] = |lcp(suffix sa[p-1], suffix sa[p])|."""
    n = s.shape[0]
    rank = np.empty(n, np.int64)
    for p in range(n):
        rank[sa[p]] = p
    lcp = np.zeros(n, np.int64)
    k = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            k = 0
            continue
        j = sa[r - 1]
        while i + k < n and j + k < n and s[i + k] == s[j + k]:
            k += 1
        lcp[r] = k
        if k > 0:
            k -= 1
    return rank, lcp


@njit(cache=True)
def _popcount4(m0, m1, m2, m3):
    cnt = 0
    for x in (m0, m1, m2, m3):
        while x:
            x &= x - np.uint64(1)
            cnt += 1
    return cnt


@njit(cache=True)
def _measure_sweep(s, sa, lcp, rank0, out_d, out_lo, out_hi, collect):
    """Bottom-up sweep over all LCP intervals of depth >= 1.

    An interval is counted as a maximal repeat when it is suffix-closed or
    right-branching, and prefix-anchored or left-branching. Returns
    (mr, er, el) summed over nonempty maximal repeats, plus the number of
    intervals that failed right-maximality (must be 0: every genuine LCP
    interval has at least two children). With collect=True the (depth, lo,
    hi) triples of maximal intervals are also written to the out arrays.
    """
    n = s.shape[0]
    cap = n + 2
    st_depth = np.zeros(cap, np.int64)
    st_lo = np.zeros(cap, np.int64)
    st_children = np.zeros(cap, np.int64)
    st_mask = np.zeros((cap, 4), np.uint64)
    top = 0

    mr = 0
    er = 0
    el = 0
    bad = 0
    found = 0

    pend_mask = np.zeros(4, np.uint64)

    for i in range(1, n + 1):
        for q in range(4):
            pend_mask[q] = np.uint64(0)
        pend_lo = i - 1
        j = sa[i - 1]
        if j > 0:
            c = s[j - 1]
            pend_mask[c >> 6] |= np.uint64(1) << np.uint64(c & 63)

        l = lcp[i] if i < n else -1
        while top >= 0 and l < st_depth[top]:
            for q in range(4):
                st_mask[top, q] |= pend_mask[q]
            st_children[top] += 1
            d = st_depth[top]
            lo = st_lo[top]
            hi = i - 1
            if d >= 1:
                has_suffix = sa[lo] == n - d
                r_s = st_children[top] - (1 if has_suffix else 0)
                has_prefix = lo <= rank0 <= hi
                lcount = _popcount4(
                    st_mask[top, 0], st_mask[top, 1], st_mask[top, 2], st_mask[top, 3]
                )
                right_ok = has_suffix or r_s >= 2
                left_ok = has_prefix or lcount >= 2
                if not right_ok:
                    bad += 1
                if right_ok and left_ok:
                    mr += 1
                    er += r_s
                    el += lcount
                    if collect:
                        out_d[found] = d
                        out_lo[found] = lo
                        out_hi[found] = hi
                        found += 1
            for q in range(4):
                pend_mask[q] = st_mask[top, q]
            pend_lo = st_lo[top]
            top -= 1
        if top < 0:
            continue
        if l > st_depth[top]:
            top += 1
            st_depth[top] = l
            st_lo[top] = pend_lo
            st_children[top] = 1
            for q in range(4):
                st_mask[top, q] = pend_mask[q]
        else:
            for q in range(4):
                st_mask[top, q] |= pend_mask[q]
            st_children[top] += 1

    return mr, er, el, bad, found
