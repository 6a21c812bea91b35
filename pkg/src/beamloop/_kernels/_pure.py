"""Pure-Python/numpy fallback implementations of the hot kernels."""

from __future__ import annotations

import numpy as np


def partition_stats(psi, edges, gain, width):
    """Accumulate gain statistics for sampled angles.

    ``edges`` are the interval start angles sorted ascending; interval j
    covers ``(edges[j], edges[j+1]]`` with the last interval wrapping back
    to ``edges[0]``.  ``gain[j]`` and ``width[j]`` are the values credited
    to a sample landing in interval j.  Returns
    ``(sum_gain, sum_gain_sq, sum_width)``.
    """
    psi = np.asarray(psi, float)
    edges = np.asarray(edges, float)
    idx = (np.searchsorted(edges, psi, side="left") - 1) % len(edges)
    g = np.asarray(gain, float)[idx]
    w = np.asarray(width, float)[idx]
    return float(g.sum()), float((g * g).sum()), float(w.sum())


def search_max_cardinality(b, d, max_cols):
    """Exhaustive maxima of (columns, unique columns) over valid loops.

    Depth-first search over cyclic column sequences of length up to
    ``max_cols``, pruning on adjacent repeats and on the per-prefix bit
    transition counts (a cyclic binary loop is unimodal iff it has at most
    two transitions).
    """
    n_sym = 1 << b
    class_off = []
    total = 0
    for i in range(1, b + 1):
        class_off.append(total)
        total += 1 << max(i - d, 0)

    # (class id, bit) pairs touched by each column value
    touch = []
    for c in range(n_sym):
        ids = []
        for i in range(1, b + 1):
            plen = max(i - d, 0)
            cid = class_off[i - 1] + (c >> (b - plen) if plen else 0)
            ids.append((cid, (c >> (b - i)) & 1))
        touch.append(tuple(ids))

    count = [0] * total
    first = [0] * total
    last = [0] * total
    trans = [0] * total
    undo: list[list] = []

    def push(c):
        rec = []
        bad = False
        for cid, bit in touch[c]:
            if count[cid] == 0:
                rec.append((cid, bit, False))
                first[cid] = bit
                last[cid] = bit
            else:
                inc = last[cid] != bit
                rec.append((cid, last[cid], inc))
                if inc:
                    trans[cid] += 1
                    if trans[cid] > 2:
                        bad = True
                last[cid] = bit
            count[cid] += 1
        undo.append(rec)
        if bad:
            pop()
            return False
        return True

    def pop():
        for cid, old_last, inc in reversed(undo.pop()):
            count[cid] -= 1
            last[cid] = old_last
            if inc:
                trans[cid] -= 1

    def closes_valid(seq):
        if len(seq) > 1 and seq[-1] == seq[0]:
            return False
        for cid in range(total):
            if count[cid] and trans[cid] + (first[cid] != last[cid]) > 2:
                return False
        return True

    seq: list[int] = []
    val_count = [0] * n_sym
    state = {"unique": 0, "best_cols": 0, "best_unique": 0}

    def dfs():
        n = len(seq)
        if n >= 1 and closes_valid(seq):
            if n > state["best_cols"]:
                state["best_cols"] = n
            if state["unique"] > state["best_unique"]:
                state["best_unique"] = state["unique"]
        if n == max_cols:
            return
        lo = seq[0] if seq else 0  # rotation dedup: first column is minimal
        prev = seq[-1] if seq else -1
        for c in range(lo, n_sym):
            if c == prev:
                continue
            if push(c):
                seq.append(c)
                if val_count[c] == 0:
                    state["unique"] += 1
                val_count[c] += 1
                dfs()
                val_count[c] -= 1
                if val_count[c] == 0:
                    state["unique"] -= 1
                seq.pop()
                pop()

    dfs()
    return state["best_cols"], state["best_unique"]


def partition_grid_dp(C, m):
    """Exact best circular m-partition on a grid, by dynamic programming.

    ``C[k]`` is the prior CDF at angle ``2*pi*k/R`` for ``k = 0..R``.
    Endpoints are grid indices ``k_0 < ... < k_{m-1}`` in ``1..R``; the
    value of an arc from index ``s`` to ``t`` is ``R * (C[t] - C[s]) /
    (t - s)``, i.e. the beamforming-gain contribution of that interval.
    Returns ``(best_value, endpoint_indices)``.
    """
    C = np.asarray(C, float)
    R = len(C) - 1
    if m < 2 or m > R:
        raise ValueError(f"m={m} out of range for grid of {R} points")

    ks = np.arange(R + 1)
    span = ks[None, :] - ks[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        V = np.where(span > 0, R * (C[None, :] - C[:, None]) / span, -np.inf)

    def solve(k0, trace):
        f = np.full(R + 1, -np.inf)
        f[k0 + 1 :] = V[k0, k0 + 1 :]
        parents = []
        for _ in range(m - 2):
            stacked = f[:, None] + V
            if trace:
                parents.append(np.argmax(stacked, axis=0))
            f = np.max(stacked, axis=0)
        wrap = np.full(R + 1, -np.inf)
        t = np.arange(k0 + m - 1, R + 1)
        wrap[t] = R * (1.0 - C[t] + C[k0]) / (R - t + k0)
        totals = f + wrap
        t_best = int(np.argmax(totals))
        return float(totals[t_best]), t_best, parents

    best_val, best_k0 = -np.inf, -1
    for k0 in range(1, R - m + 2):
        val, _, _ = solve(k0, trace=False)
        if val > best_val:
            best_val, best_k0 = val, k0

    _, t_best, parents = solve(best_k0, trace=True)
    idx = [t_best]
    for par in reversed(parents):
        idx.append(int(par[idx[-1]]))
    idx.append(best_k0)
    idx.reverse()
    return best_val, np.asarray(idx, dtype=np.int64)
