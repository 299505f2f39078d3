"""Compiled search kernels over bitmask adjacency (n <= 62).

Valuations are int8 rows with entries in {-1, 0, 1}. Every row returned is
sign-canonical (lowest-indexed nonzero entry is +1) and not all zero.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def neighbor_lists(n, adj):
    """CSR neighbor arrays (indptr, indices) and degrees from bitmasks."""
    deg = np.zeros(n, np.int64)
    for i in range(n):
        m = adj[i]
        while m:
            m &= m - 1
            deg[i] += 1
    ptr = np.zeros(n + 1, np.int64)
    for i in range(n):
        ptr[i + 1] = ptr[i] + deg[i]
    idx = np.empty(ptr[n], np.int64)
    for i in range(n):
        k = ptr[i]
        for j in range(n):
            if (adj[i] >> j) & 1:
                idx[k] = j
                k += 1
    return ptr, idx, deg


@njit(cache=True)
def _grow(buf, count):
    if count < buf.shape[0]:
        return buf
    out = np.zeros((2 * buf.shape[0], buf.shape[1]), buf.dtype)
    out[:count] = buf[:count]
    return out


@njit(cache=True)
def verify_row(n, ptr, idx, deg, v):
    """lam >= 1 certified by v, or 0 if v is not a ternary eigenvector."""
    lam = 0
    found = False
    for i in range(n):
        if v[i] != 0:
            s = 0
            for k in range(ptr[i], ptr[i + 1]):
                s += v[idx[k]]
            lam = deg[i] - s * v[i]
            found = True
            break
    if not found or lam < 1:
        return 0
    for i in range(n):
        s = 0
        for k in range(ptr[i], ptr[i + 1]):
            s += v[idx[k]]
        if deg[i] * v[i] - s != lam * v[i]:
            return 0
    return lam


@njit(cache=True)
def _odometer_hits(n, f, ptr, idx, deg, v, nsum, hits, hlam):
    """Eigenvectors with first nonzero entry at f; positions written to hits."""
    count = 0
    while True:
        lam = deg[f] - nsum[f]
        if lam >= 1:
            ok = True
            # the fastest-changing coordinates fail most often
            for i in range(n - 1, -1, -1):
                if deg[i] * v[i] - nsum[i] != lam * v[i]:
                    ok = False
                    break
            if ok:
                if count == hits.shape[0]:
                    return -1
                for i in range(n):
                    hits[count, i] = v[i]
                hlam[count] = lam
                count += 1
        # odometer over positions f+1..n-1, last position fastest
        pos = n - 1
        while pos > f and v[pos] == 1:
            v[pos] = -1
            for k in range(ptr[pos], ptr[pos + 1]):
                nsum[idx[k]] -= 2
            pos -= 1
        if pos == f:
            return count
        v[pos] += 1
        for k in range(ptr[pos], ptr[pos + 1]):
            nsum[idx[k]] += 1


@njit(cache=True)
def brute_force_kernel(n, adj):
    """Enumerate every canonical ternary vector and keep the eigenvectors.

    For each position f of the first nonzero entry (fixed to +1) the later
    entries run through all 3^(n-1-f) patterns; neighbor sums are updated
    incrementally. Returns (lams, rows).
    """
    ptr, idx, deg = neighbor_lists(n, adj)
    v = np.zeros(n, np.int64)
    nsum = np.zeros(n, np.int64)
    cap = 64
    while True:
        hits = np.zeros((cap, max(n, 1)), np.int8)
        hlam = np.zeros(cap, np.int64)
        count = 0
        overflow = False
        for f in range(n):
            v[:] = 0
            nsum[:] = 0
            v[f] = 1
            for k in range(ptr[f], ptr[f + 1]):
                nsum[idx[k]] += 1
            for i in range(f + 1, n):
                v[i] = -1
                for k in range(ptr[i], ptr[i + 1]):
                    nsum[idx[k]] -= 1
            got = _odometer_hits(n, f, ptr, idx, deg, v, nsum, hits[count:], hlam[count:])
            if got < 0:
                overflow = True
                break
            count += got
        if not overflow:
            return hlam[:count], hits[:count]
        cap *= 4


@njit(cache=True)
def search_order(n, adj, ptr, idx, deg):
    """BFS order started from a maximum-degree vertex, component by component."""
    order = np.empty(n, np.int64)
    seen = np.zeros(n, np.bool_)
    cnt = 0
    head = 0
    while cnt < n:
        best = -1
        for i in range(n):
            if not seen[i] and (best < 0 or deg[i] > deg[best]):
                best = i
        seen[best] = True
        order[cnt] = best
        cnt += 1
        while head < cnt:
            u = order[head]
            head += 1
            for k in range(ptr[u], ptr[u + 1]):
                w = idx[k]
                if not seen[w]:
                    seen[w] = True
                    order[cnt] = w
                    cnt += 1
    return order


@njit(cache=True)
def _feasible(y, lam, val, nsum, unassigned, deg):
    # exact interval test: remaining neighbors add a value in [-U, U]
    gap = (deg[y] - lam) * val[y] - nsum[y]
    return -unassigned[y] <= gap <= unassigned[y]


@njit(cache=True)
def csp_kernel(n, adj, lam, prune):
    """All canonical ternary eigenvectors for one lam by backtracking.

    Constraint per vertex: (d_i - lam) v_i = sum of neighbor values. With
    ``prune`` every assigned vertex is kept within reach of its target and
    every unassigned vertex must keep at least one value within reach; without
    it the equations are only checked on complete assignments.
    Returns (rows, nodes, prunes).
    """
    ptr, idx, deg = neighbor_lists(n, adj)
    order = search_order(n, adj, ptr, idx, deg)
    val = np.zeros(n, np.int64)
    nsum = np.zeros(n, np.int64)
    unassigned = deg.copy()
    choice = np.full(n, -1, np.int64)
    is_set = np.zeros(n, np.bool_)
    first_nz = np.full(n + 1, -1, np.int64)  # level of first nonzero among levels < t
    rows = np.zeros((16, max(n, 1)), np.int8)
    count = 0
    nodes = 0
    prunes = 0
    if n == 0:
        return rows[:0], nodes, prunes
    t = 0
    while t >= 0:
        x = order[t]
        if choice[t] >= 0:
            # undo previous value at this level
            old = val[x]
            for k in range(ptr[x], ptr[x + 1]):
                w = idx[k]
                nsum[w] -= old
                unassigned[w] += 1
            val[x] = 0
            is_set[x] = False
        choice[t] += 1
        # symmetry breaking: before any nonzero, only 0 and +1 are tried
        limit = 3 if first_nz[t] >= 0 else 2
        if choice[t] >= limit:
            choice[t] = -1
            t -= 1
            continue
        v = (0, 1, -1)[choice[t]]
        val[x] = v
        is_set[x] = True
        for k in range(ptr[x], ptr[x + 1]):
            w = idx[k]
            nsum[w] += v
            unassigned[w] -= 1
        nodes += 1
        ok = True
        if prune:
            if not _feasible(x, lam, val, nsum, unassigned, deg):
                ok = False
            for k in range(ptr[x], ptr[x + 1]):
                if not ok:
                    break
                w = idx[k]
                if is_set[w]:
                    if not _feasible(w, lam, val, nsum, unassigned, deg):
                        ok = False
                else:
                    any_ok = False
                    for cand in (-1, 0, 1):
                        gap = (deg[w] - lam) * cand - nsum[w]
                        if -unassigned[w] <= gap <= unassigned[w]:
                            any_ok = True
                            break
                    if not any_ok:
                        ok = False
        if not ok:
            prunes += 1
            continue
        if t == n - 1:
            if first_nz[t] < 0 and v == 0:
                continue
            good = True
            for i in range(n):
                if (deg[i] - lam) * val[i] != nsum[i]:
                    good = False
                    break
            if good:
                rows = _grow(rows, count)
                sign = 0
                for i in range(n):
                    if val[i] != 0:
                        sign = val[i]
                        break
                for i in range(n):
                    rows[count, i] = val[i] * sign
                count += 1
            continue
        first_nz[t + 1] = first_nz[t] if (first_nz[t] >= 0 or v == 0) else t
        t += 1
    return rows[:count], nodes, prunes
