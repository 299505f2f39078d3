"""Compiled exhaustive sweeps over labeled graphs.

Each sweep generates graphs itself, runs the brute-force oracle and the
solver under test on every graph, and compares the two certificate sets as
sorted integer codes ``lam * 3**n + base3(v + 1)``. Family membership is
decided by an independent block decomposition, not by the solver's DFS.
"""

import numpy as np
from numba import njit

from . import _dp
from ._kernels import brute_force_kernel, csp_kernel

# counter slots returned by the sweeps
GRAPHS, MISMATCH, LAMBDA_OUT, TREES, UNICYCLIC, BICYCLIC, CACTI, EXTRA = range(8)
NSLOTS = 8


@njit(cache=True)
def edge_pairs(n):
    E = n * (n - 1) // 2
    eu = np.empty(E, np.int64)
    ev = np.empty(E, np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            eu[k] = i
            ev[k] = j
            k += 1
    return eu, ev


@njit(cache=True)
def connected(n, adj):
    if n == 0:
        return False
    seen = np.int64(1)
    frontier = np.int64(1)
    while frontier:
        new = np.int64(0)
        f = frontier
        while f:
            low = f & -f
            v = 0
            while (low >> v) != 1:
                v += 1
            new |= adj[v]
            f ^= low
        frontier = new & ~seen
        seen |= new
    return seen == (np.int64(1) << n) - 1


@njit(cache=True)
def cactus_blocks(n, adj):
    """True iff every biconnected block is a single edge or a chordless cycle.

    Iterative Tarjan with an edge stack; blocks with e edges and v vertices
    must satisfy e == 1 or e == v.
    """
    disc = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    parent = np.full(n, -1, np.int64)
    ptr = np.zeros(n, np.int64)
    vstack = np.empty(n, np.int64)
    eu = np.empty(n * n, np.int64)
    ev = np.empty(n * n, np.int64)
    mark = np.full(n, -1, np.int64)
    stamp = 0
    esp = 0
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = t
        low[root] = t
        t += 1
        sp = 1
        vstack[0] = root
        while sp > 0:
            u = vstack[sp - 1]
            while ptr[u] < n and not (adj[u] >> ptr[u]) & 1:
                ptr[u] += 1
            if ptr[u] < n:
                w = ptr[u]
                ptr[u] += 1
                if disc[w] < 0:
                    parent[w] = u
                    disc[w] = t
                    low[w] = t
                    t += 1
                    eu[esp] = u
                    ev[esp] = w
                    esp += 1
                    vstack[sp] = w
                    sp += 1
                elif w != parent[u] and disc[w] < disc[u]:
                    if disc[w] < low[u]:
                        low[u] = disc[w]
                    eu[esp] = u
                    ev[esp] = w
                    esp += 1
                continue
            sp -= 1
            p = parent[u]
            if p < 0:
                continue
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                ecount = 0
                vcount = 0
                stamp += 1
                while True:
                    esp -= 1
                    a = eu[esp]
                    b = ev[esp]
                    ecount += 1
                    if mark[a] != stamp:
                        mark[a] = stamp
                        vcount += 1
                    if mark[b] != stamp:
                        mark[b] = stamp
                        vcount += 1
                    if a == p and b == u:
                        break
                if ecount > 1 and ecount != vcount:
                    return False
    return True


@njit(cache=True)
def _codes(n, lams, rows):
    out = np.empty(rows.shape[0], np.int64)
    for r in range(rows.shape[0]):
        c = np.int64(0)
        w = np.int64(1)
        for i in range(n):
            c += (rows[r, i] + 1) * w
            w *= 3
        out[r] = lams[r] * w + c
    return np.sort(out)


@njit(cache=True)
def _same(a, b):
    if a.shape[0] != b.shape[0]:
        return False
    for i in range(a.shape[0]):
        if a[i] != b[i]:
            return False
    return True


@njit(cache=True)
def _oracle_codes(n, adj):
    lams, rows = brute_force_kernel(n, adj)
    return _codes(n, lams, rows)


@njit(cache=True)
def _solver_codes(n, adj, lam_hi):
    """Solver certificates for lam = 1..lam_hi, plus the number found above 2."""
    plan = _dp.prepare(n, adj)
    parts = []
    total = 0
    high = 0
    for lam in range(1, lam_hi + 1):
        rows = _dp.enumerate_solutions(n, plan[1], plan[2], plan[3], plan[4], plan[5], plan[6], plan[7],
                                       lam, -1)
        parts.append(rows)
        total += rows.shape[0]
        if lam > 2:
            high += rows.shape[0]
    lams = np.empty(total, np.int64)
    allrows = np.empty((total, max(n, 1)), np.int8)
    k = 0
    for lam in range(1, lam_hi + 1):
        rows = parts[lam - 1]
        for r in range(rows.shape[0]):
            lams[k] = lam
            allrows[k] = rows[r]
            k += 1
    return _codes(n, lams, allrows), high


@njit(cache=True)
def _search_codes(n, adj):
    parts = []
    total = 0
    for lam in range(1, n + 1):
        rows, nodes, prunes = csp_kernel(n, adj, lam, True)
        parts.append(rows)
        total += rows.shape[0]
    lams = np.empty(total, np.int64)
    allrows = np.empty((total, max(n, 1)), np.int8)
    k = 0
    for lam in range(1, n + 1):
        rows = parts[lam - 1]
        for r in range(rows.shape[0]):
            lams[k] = lam
            allrows[k] = rows[r]
            k += 1
    return _codes(n, lams, allrows)


@njit(cache=True)
def _adj_from_mask(n, eu, ev, mask):
    adj = np.zeros(n, np.int64)
    for k in range(eu.shape[0]):
        if (mask >> k) & 1:
            adj[eu[k]] |= np.int64(1) << ev[k]
            adj[ev[k]] |= np.int64(1) << eu[k]
    return adj


@njit(cache=True)
def sweep_search(n, lo, hi, connected_only):
    """full_spectrum vs brute force on edge masks lo..hi-1 of K_n.

    Returns (counters, first mismatching mask or -1).
    """
    eu, ev = edge_pairs(n)
    cnt = np.zeros(NSLOTS, np.int64)
    bad = np.int64(-1)
    for mask in range(lo, hi):
        adj = _adj_from_mask(n, eu, ev, mask)
        if connected_only and not connected(n, adj):
            continue
        cnt[GRAPHS] += 1
        if not _same(_oracle_codes(n, adj), _search_codes(n, adj)):
            cnt[MISMATCH] += 1
            if bad < 0:
                bad = mask
    return cnt, bad


@njit(cache=True)
def _counts_agree(n, adj, lams, rows):
    """Solver counts per lambda equal the oracle's, and every oracle row is
    a solver solution. Together these give set equality without enumerating."""
    plan = _dp.prepare(n, adj)
    dom = np.full(n, _dp.FULL, np.int64)
    for lam in range(1, 5):
        k = 0
        for r in range(lams.shape[0]):
            if lams[r] == lam:
                k += 1
        c = _dp.count_nontrivial(n, plan[1], plan[2], plan[3], plan[4], plan[5], plan[6], plan[7],
                                 lam, dom)
        if c != 2 * k:
            return False
    for r in range(lams.shape[0]):
        if lams[r] > 4:
            continue
        for i in range(n):
            dom[i] = np.int64(1) << (rows[r, i] + 1)
        c = _dp.count_all(n, plan[1], plan[2], plan[3], plan[4], plan[5], plan[6], plan[7],
                          lams[r], dom)
        if c != 1:
            return False
    return True


@njit(cache=True)
def _check_family_member(n, adj, m, cnt, full):
    """Compare solver and oracle on one connected graph; update counters.

    ``full`` compares enumerated certificate sets; otherwise per-lambda
    counts plus membership of every oracle row. Returns False on a mismatch.
    """
    tree = m == n - 1
    cnt[GRAPHS] += 1
    if tree:
        cnt[TREES] += 1
    if m == n:
        cnt[UNICYCLIC] += 1
    if m == n + 1:
        cnt[BICYCLIC] += 1
    if cactus_blocks(n, adj):
        cnt[CACTI] += 1
    lams, rows = brute_force_kernel(n, adj)
    high = 0
    for lam in lams:
        if lam < 1 or lam > 4:
            cnt[LAMBDA_OUT] += 1
        if lam > 2:
            high += 1
    if full:
        solver, shigh = _solver_codes(n, adj, 4)
        ok = _same(_codes(n, lams, rows), solver)
        high += shigh
    else:
        ok = _counts_agree(n, adj, lams, rows)
    if tree and high:
        # trees must have nothing above lambda = 2
        ok = False
    if not ok:
        cnt[MISMATCH] += 1
    return ok


@njit(cache=True)
def sweep_family(n, m, need_cactus, cnt, full):
    """Every connected labeled graph on n vertices with m edges (cacti only
    when ``need_cactus``). Returns the first mismatching edge mask or -1."""
    eu, ev = edge_pairs(n)
    E = eu.shape[0]
    bad = np.int64(-1)
    if m > E or m < n - 1:
        return bad
    idx = np.arange(m)
    while True:
        adj = np.zeros(n, np.int64)
        mask = np.int64(0)
        for t in range(m):
            k = idx[t]
            adj[eu[k]] |= np.int64(1) << ev[k]
            adj[ev[k]] |= np.int64(1) << eu[k]
            mask |= np.int64(1) << k
        if connected(n, adj) and (not need_cactus or cactus_blocks(n, adj)):
            if not _check_family_member(n, adj, m, cnt, full) and bad < 0:
                bad = mask
        # next combination
        t = m - 1
        while t >= 0 and idx[t] == E - m + t:
            t -= 1
        if t < 0:
            break
        idx[t] += 1
        for s in range(t + 1, m):
            idx[s] = idx[s - 1] + 1
    return bad


@njit(cache=True)
def prufer_tree(n, code):
    """Adjacency bitmasks of the labeled tree with the given Prufer sequence."""
    adj = np.zeros(n, np.int64)
    if n == 2:
        adj[0] = 2
        adj[1] = 1
        return adj
    degree = np.ones(n, np.int64)
    for x in code:
        degree[x] += 1
    for x in code:
        for leaf in range(n):
            if degree[leaf] == 1:
                adj[leaf] |= np.int64(1) << x
                adj[x] |= np.int64(1) << leaf
                degree[leaf] -= 1
                degree[x] -= 1
                break
    u = -1
    for v in range(n):
        if degree[v] == 1:
            if u < 0:
                u = v
            else:
                adj[u] |= np.int64(1) << v
                adj[v] |= np.int64(1) << u
    return adj


@njit(cache=True)
def sweep_prufer(n, indices, cnt, full):
    """Trees decoded from Prufer indices (base-n digits); first bad index or -1."""
    bad = np.int64(-1)
    code = np.zeros(max(n - 2, 0), np.int64)
    for idx in indices:
        r = idx
        for t in range(n - 2):
            code[t] = r % n
            r //= n
        adj = prufer_tree(n, code)
        if not _check_family_member(n, adj, n - 1, cnt, full) and bad < 0:
            bad = idx
    return bad


@njit(cache=True)
def connected_masks(n, lo, hi):
    """Edge masks in lo..hi-1 of K_n whose graphs are connected."""
    eu, ev = edge_pairs(n)
    out = np.empty(hi - lo, np.int64)
    k = 0
    for mask in range(lo, hi):
        if connected(n, _adj_from_mask(n, eu, ev, mask)):
            out[k] = mask
            k += 1
    return out[:k]
