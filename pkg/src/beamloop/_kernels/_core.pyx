# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels (see _pure.py for the contracts)."""

import numpy as np

DEF NEG = -1e300


def partition_stats(double[::1] psi, double[::1] edges,
                    double[::1] gain, double[::1] width):
    cdef Py_ssize_t n = psi.shape[0]
    cdef Py_ssize_t m = edges.shape[0]
    cdef Py_ssize_t i, lo, hi, mid, idx
    cdef double sg = 0.0, sg2 = 0.0, sw = 0.0, x, g
    for i in range(n):
        x = psi[i]
        lo = 0
        hi = m
        while lo < hi:
            mid = (lo + hi) >> 1
            if edges[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        if lo == 0:
            idx = m - 1
        else:
            idx = lo - 1
        g = gain[idx]
        sg += g
        sg2 += g * g
        sw += width[idx]
    return sg, sg2, sw


cdef void _search(int depth, int prev, int first_col, int max_cols, int n_sym,
                  int b, int total, int[::1] count, int[::1] first,
                  int[::1] last, int[::1] trans, int[:, ::1] tcid,
                  int[:, ::1] tbit, int[::1] val_count, long[::1] state):
    # state holds [current unique count, best columns, best unique columns]
    cdef int cid, bit, i, c, ok, k, lo, bad
    cdef int old_last[32]
    cdef int inc[32]
    if depth >= 1:
        ok = 1
        if depth > 1 and prev == first_col:
            ok = 0
        if ok:
            for cid in range(total):
                if count[cid] != 0:
                    k = trans[cid]
                    if first[cid] != last[cid]:
                        k += 1
                    if k > 2:
                        ok = 0
                        break
        if ok:
            if depth > state[1]:
                state[1] = depth
            if state[0] > state[2]:
                state[2] = state[0]
    if depth == max_cols:
        return
    lo = first_col if depth > 0 else 0
    for c in range(lo, n_sym):
        if depth > 0 and c == prev:
            continue
        bad = 0
        for i in range(b):
            cid = tcid[c, i]
            bit = tbit[c, i]
            if count[cid] == 0:
                old_last[i] = bit
                inc[i] = 0
                first[cid] = bit
                last[cid] = bit
            else:
                old_last[i] = last[cid]
                if last[cid] != bit:
                    inc[i] = 1
                    trans[cid] += 1
                    if trans[cid] > 2:
                        bad = 1
                else:
                    inc[i] = 0
                last[cid] = bit
            count[cid] += 1
        if bad == 0:
            val_count[c] += 1
            if val_count[c] == 1:
                state[0] += 1
            _search(depth + 1, c, c if depth == 0 else first_col, max_cols,
                    n_sym, b, total, count, first, last, trans, tcid, tbit,
                    val_count, state)
            val_count[c] -= 1
            if val_count[c] == 0:
                state[0] -= 1
        for i in range(b - 1, -1, -1):
            cid = tcid[c, i]
            count[cid] -= 1
            last[cid] = old_last[i]
            if inc[i]:
                trans[cid] -= 1


def search_max_cardinality(int b, int d, int max_cols):
    if b > 32:
        raise ValueError("search supports b up to 32")
    cdef int n_sym = 1 << b
    cdef int total = 0
    cdef int i, c, plen
    offs = []
    for i in range(1, b + 1):
        offs.append(total)
        total += 1 << max(i - d, 0)
    tcid_np = np.zeros((n_sym, b), dtype=np.intc)
    tbit_np = np.zeros((n_sym, b), dtype=np.intc)
    for c in range(n_sym):
        for i in range(1, b + 1):
            plen = max(i - d, 0)
            tcid_np[c, i - 1] = offs[i - 1] + ((c >> (b - plen)) if plen else 0)
            tbit_np[c, i - 1] = (c >> (b - i)) & 1
    count = np.zeros(total, dtype=np.intc)
    first = np.zeros(total, dtype=np.intc)
    last = np.zeros(total, dtype=np.intc)
    trans = np.zeros(total, dtype=np.intc)
    val_count = np.zeros(n_sym, dtype=np.intc)
    state = np.zeros(3, dtype=np.int_)
    _search(0, -1, -1, max_cols, n_sym, b, total, count, first, last, trans,
            tcid_np, tbit_np, val_count, state)
    return int(state[1]), int(state[2])


cdef _dp_pass(int k0, int m, int R, double[:, ::1] V, double[::1] C,
              double[::1] f, double[::1] fn, int[:, ::1] par, bint trace):
    cdef int t, s, layer, bs, bt
    cdef double best, v, best_total
    for t in range(R + 1):
        f[t] = NEG
    for t in range(k0 + 1, R + 1):
        f[t] = V[k0, t]
    for layer in range(m - 2):
        for t in range(R + 1):
            fn[t] = NEG
        for t in range(k0 + layer + 2, R + 1):
            best = NEG
            bs = -1
            for s in range(k0 + layer + 1, t):
                v = f[s] + V[s, t]
                if v > best:
                    best = v
                    bs = s
            fn[t] = best
            if trace:
                par[layer, t] = bs
        f[:] = fn
    best_total = NEG
    bt = -1
    for t in range(k0 + m - 1, R + 1):
        v = f[t] + R * (1.0 - C[t] + C[k0]) / (R - t + k0)
        if v > best_total:
            best_total = v
            bt = t
    return best_total, bt


def partition_grid_dp(double[::1] C, int m):
    cdef int R = C.shape[0] - 1
    if m < 2 or m > R:
        raise ValueError(f"m={m} out of range for grid of {R} points")
    ks = np.arange(R + 1)
    span = ks[None, :] - ks[:, None]
    Cn = np.asarray(C)
    with np.errstate(divide="ignore", invalid="ignore"):
        V_np = np.where(span > 0, R * (Cn[None, :] - Cn[:, None]) / span, NEG)
    cdef double[:, ::1] V = np.ascontiguousarray(V_np)
    f = np.empty(R + 1)
    fn = np.empty(R + 1)
    par = np.zeros((max(m - 2, 1), R + 1), dtype=np.intc)
    cdef double best_val = NEG
    cdef int best_k0 = -1, k0
    cdef double val
    for k0 in range(1, R - m + 2):
        val, _ = _dp_pass(k0, m, R, V, C, f, fn, par, False)
        if val > best_val:
            best_val = val
            best_k0 = k0
    val, t_best = _dp_pass(best_k0, m, R, V, C, f, fn, par, True)
    idx = [t_best]
    for layer in range(m - 3, -1, -1):
        idx.append(int(par[layer, idx[-1]]))
    idx.append(best_k0)
    idx.reverse()
    return best_val, np.asarray(idx, dtype=np.int64)
