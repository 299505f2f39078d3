"""Compiled block-tree dynamic program for ternary eigenvectors.

The solver counts assignments v in {-1,0,1}^n satisfying, for one fixed lam,

    (d_i - lam) v_i = sum_{j ~ i} v_j        for every vertex i,

on a connected graph whose blocks are edges and cycles (a cactus). Rooting
the DFS tree at vertex 0, each vertex x gets a table W[x, v_x, s]: the number
of labelings of everything hanging below x through its child blocks with all
those vertices satisfied, where s is the sum over x's neighbors in those
blocks. A bridge child is a 3x3 lookup; a cycle child is a transfer over the
cycle with state (first value, previous value, current value).

Graphs that are not cacti are reduced by deleting DFS back edges until they
are, and the deleted edges' endpoints are conditioned on: every combination
of their values is fixed and the fixed values enter as constant offsets. One
deleted edge suffices for any bicyclic graph, so the cost stays polynomial on
trees, unicyclic, bicyclic and cactus graphs.

Domains are 3-bit masks per vertex: bit k allows value k - 1.
"""

import numpy as np
from numba import njit

CAP = np.int64(1) << np.int64(62)
FULL = 7


@njit(cache=True)
def _smul(a, b):
    if a == 0 or b == 0:
        return np.int64(0)
    if a > CAP // b:
        return CAP
    return a * b


@njit(cache=True)
def _sadd(a, b):
    s = a + b
    if s > CAP:
        return CAP
    return s


@njit(cache=True)
def _dfs(n, adj):
    """One DFS from vertex 0.

    Returns (status, order, parent, cyc_of, tops, bottoms, ncyc, bu, bw):
    status 0 = cactus, 1 = tree edge shared by two cycles (bu, bw is the back
    edge that exposed it), 2 = disconnected.
    """
    parent = np.full(n, -1, np.int64)
    depth = np.full(n, -1, np.int64)
    order = np.empty(n, np.int64)
    cyc_of = np.full(n, -1, np.int64)
    tops = np.empty(n, np.int64)
    bottoms = np.empty(n, np.int64)
    ptr = np.zeros(n, np.int64)
    stack = np.empty(n, np.int64)
    ncyc = 0
    depth[0] = 0
    order[0] = 0
    cnt = 1
    stack[0] = 0
    sp = 1
    while sp > 0:
        u = stack[sp - 1]
        while ptr[u] < n and not (adj[u] >> ptr[u]) & 1:
            ptr[u] += 1
        if ptr[u] >= n:
            sp -= 1
            continue
        w = ptr[u]
        ptr[u] += 1
        if depth[w] < 0:
            parent[w] = u
            depth[w] = depth[u] + 1
            order[cnt] = w
            cnt += 1
            stack[sp] = w
            sp += 1
        elif w != parent[u] and depth[w] < depth[u]:
            x = u
            while x != w:
                if cyc_of[x] >= 0:
                    return 1, order, parent, cyc_of, tops, bottoms, ncyc, u, w
                cyc_of[x] = ncyc
                x = parent[x]
            tops[ncyc] = w
            bottoms[ncyc] = u
            ncyc += 1
    if cnt < n:
        return 2, order, parent, cyc_of, tops, bottoms, ncyc, -1, -1
    return 0, order, parent, cyc_of, tops, bottoms, ncyc, -1, -1


@njit(cache=True)
def prepare(n, adj):
    """Block structure of a connected graph.

    Returns (status, order, blk_ptr, blk_kind, mem_ptr, members, cut, deg):
    blocks are grouped by their top vertex (blk_ptr is CSR over vertices),
    kind 0 = bridge (one member), kind 1 = cycle (members in cyclic order
    after the top); ``cut`` lists the conditioned (deleted) edges as rows.
    status 0 = ok, 2 = disconnected or empty.
    """
    deg = np.zeros(n, np.int64)
    for i in range(n):
        m = adj[i]
        while m:
            m &= m - 1
            deg[i] += 1
    work = adj.copy()
    cut = np.empty((n * n, 2), np.int64)
    ncut = 0
    empty = np.zeros(0, np.int64)
    if n == 0:
        return 2, empty, empty, empty, empty, empty, cut[:0], deg
    while True:
        status, order, parent, cyc_of, tops, bottoms, ncyc, bu, bw = _dfs(n, work)
        if status == 1:
            work[bu] &= ~(np.int64(1) << bw)
            work[bw] &= ~(np.int64(1) << bu)
            cut[ncut, 0] = bu
            cut[ncut, 1] = bw
            ncut += 1
            continue
        break
    if status == 2:
        return 2, order, empty, empty, empty, empty, cut[:ncut], deg
    nblk = 0
    for v in range(1, n):
        if cyc_of[v] < 0:
            nblk += 1
    nblk += ncyc
    blk_top = np.empty(nblk, np.int64)
    blk_kind = np.empty(nblk, np.int64)
    blk_len = np.empty(nblk, np.int64)
    blk_first = np.empty(nblk, np.int64)
    b = 0
    for v in range(1, n):
        if cyc_of[v] < 0:
            blk_top[b] = parent[v]
            blk_kind[b] = 0
            blk_len[b] = 1
            blk_first[b] = v
            b += 1
    for c in range(ncyc):
        blk_top[b] = tops[c]
        blk_kind[b] = 1
        length = 0
        x = bottoms[c]
        while x != tops[c]:
            length += 1
            x = parent[x]
        blk_len[b] = length
        blk_first[b] = bottoms[c]
        b += 1
    # group by top vertex
    blk_ptr = np.zeros(n + 1, np.int64)
    for i in range(nblk):
        blk_ptr[blk_top[i] + 1] += 1
    for v in range(n):
        blk_ptr[v + 1] += blk_ptr[v]
    fill = blk_ptr[:n].copy()
    perm = np.empty(nblk, np.int64)
    for i in range(nblk):
        perm[fill[blk_top[i]]] = i
        fill[blk_top[i]] += 1
    kinds = np.empty(nblk, np.int64)
    mem_ptr = np.zeros(nblk + 1, np.int64)
    for k in range(nblk):
        i = perm[k]
        kinds[k] = blk_kind[i]
        mem_ptr[k + 1] = mem_ptr[k] + blk_len[i]
    members = np.empty(mem_ptr[nblk], np.int64)
    for k in range(nblk):
        i = perm[k]
        if blk_kind[i] == 0:
            members[mem_ptr[k]] = blk_first[i]
        else:
            # walk bottom -> top, store top-adjacent vertex first
            x = blk_first[i]
            pos = mem_ptr[k + 1] - 1
            while x != blk_top[i]:
                members[pos] = x
                pos -= 1
                x = parent[x]
    return 0, order, blk_ptr, kinds, mem_ptr, members, cut[:ncut], deg


@njit(cache=True)
def _count_cactus(n, order, blk_ptr, kinds, mem_ptr, members, coef, off, dom, R):
    # neighbor sums lie in [-R, R] with R the maximum degree
    size = 2 * R + 1
    W = np.zeros((n, 3, size), np.int64)
    acc = np.zeros((3, size), np.int64)
    nxt = np.zeros((3, size), np.int64)
    D = np.zeros((3, size), np.int64)
    T = np.zeros((3, 3, 3), np.int64)
    T2 = np.zeros((3, 3, 3), np.int64)
    for t in range(n - 1, -1, -1):
        x = order[t]
        acc[:, :] = 0
        for kx in range(3):
            if (dom[x] >> kx) & 1:
                acc[kx, R] = 1
        for b in range(blk_ptr[x], blk_ptr[x + 1]):
            D[:, :] = 0
            m0 = mem_ptr[b]
            L = mem_ptr[b + 1] - m0
            if kinds[b] == 0:
                y = members[m0]
                for kx in range(3):
                    if not (dom[x] >> kx) & 1:
                        continue
                    for ky in range(3):
                        if not (dom[y] >> ky) & 1:
                            continue
                        need = coef[y] * (ky - 1) - off[y] - (kx - 1)
                        if -R <= need <= R:
                            c = W[y, ky, need + R]
                            if c:
                                D[kx, ky - 1 + R] = _sadd(D[kx, ky - 1 + R], c)
            else:
                first = members[m0]
                last = members[m0 + L - 1]
                for kx in range(3):
                    if not (dom[x] >> kx) & 1:
                        continue
                    T[:, :, :] = 0
                    for k1 in range(3):
                        if (dom[first] >> k1) & 1:
                            T[k1, kx, k1] = 1
                    for i in range(L - 1):
                        ci = members[m0 + i]
                        cn = members[m0 + i + 1]
                        T2[:, :, :] = 0
                        for k1 in range(3):
                            for ka in range(3):
                                for kb in range(3):
                                    cur = T[k1, ka, kb]
                                    if cur == 0:
                                        continue
                                    for kc in range(3):
                                        if not (dom[cn] >> kc) & 1:
                                            continue
                                        need = coef[ci] * (kb - 1) - off[ci] - (ka - 1) - (kc - 1)
                                        if -R <= need <= R:
                                            w = W[ci, kb, need + R]
                                            if w:
                                                T2[k1, kb, kc] = _sadd(T2[k1, kb, kc], _smul(cur, w))
                        T[:, :, :] = T2
                    for k1 in range(3):
                        for ka in range(3):
                            for kb in range(3):
                                cur = T[k1, ka, kb]
                                if cur == 0:
                                    continue
                                need = coef[last] * (kb - 1) - off[last] - (ka - 1) - (kx - 1)
                                if -R <= need <= R:
                                    w = W[last, kb, need + R]
                                    if w:
                                        s = k1 - 1 + kb - 1 + R
                                        D[kx, s] = _sadd(D[kx, s], _smul(cur, w))
            nxt[:, :] = 0
            for kx in range(3):
                for s in range(size):
                    a = acc[kx, s]
                    if a == 0:
                        continue
                    # a child block adds at most two neighbors of x
                    for u in range(max(0, R - 2), min(size, R + 3)):
                        d = D[kx, u]
                        if d == 0:
                            continue
                        j = s + u - R
                        if 0 <= j < size:
                            nxt[kx, j] = _sadd(nxt[kx, j], _smul(a, d))
            acc[:, :] = nxt
        W[x, :, :] = acc
    r = order[0]
    total = np.int64(0)
    for kr in range(3):
        if (dom[r] >> kr) & 1:
            need = coef[r] * (kr - 1) - off[r]
            if -R <= need <= R:
                total = _sadd(total, W[r, kr, need + R])
    return total


@njit(cache=True)
def count_all(n, order, blk_ptr, kinds, mem_ptr, members, cut, deg, lam, dom):
    """Number of assignments within ``dom`` (all-zero included, saturating)."""
    coef = deg - lam
    R = max(deg.max(), 1) if n else 1
    ncut = cut.shape[0]
    pts = np.empty(2 * ncut, np.int64)
    npts = 0
    for e in range(ncut):
        for side in range(2):
            v = cut[e, side]
            seen = False
            for q in range(npts):
                if pts[q] == v:
                    seen = True
            if not seen:
                pts[npts] = v
                npts += 1
    if npts == 0:
        return _count_cactus(n, order, blk_ptr, kinds, mem_ptr, members, coef,
                             np.zeros(n, np.int64), dom, R)
    # with sign-closed domains, conditioning on -values mirrors +values
    symmetric = True
    for i in range(n):
        if dom[i] != FULL and dom[i] != 2 and dom[i] != 5:
            symmetric = False
    vals = np.zeros(n, np.int64)
    digit = np.zeros(npts, np.int64)
    dom2 = dom.copy()
    off = np.zeros(n, np.int64)
    total = np.int64(0)
    while True:
        ok = True
        for q in range(npts):
            if not (dom[pts[q]] >> digit[q]) & 1:
                ok = False
                break
        mult = 1
        if ok and symmetric:
            lead = 1
            for q in range(npts):
                if digit[q] != 1:
                    lead = digit[q]
                    break
            if lead == 0:
                ok = False
            elif lead == 2:
                mult = 2
        if ok:
            for q in range(npts):
                vals[pts[q]] = digit[q] - 1
                dom2[pts[q]] = 1 << digit[q]
            off[:] = 0
            for e in range(ncut):
                a = cut[e, 0]
                c = cut[e, 1]
                off[a] += vals[c]
                off[c] += vals[a]
            c = _count_cactus(n, order, blk_ptr, kinds, mem_ptr, members, coef, off, dom2, R)
            total = _sadd(total, _smul(c, mult))
        q = 0
        while q < npts and digit[q] == 2:
            digit[q] = 0
            q += 1
        if q == npts:
            break
        digit[q] += 1
    return total


@njit(cache=True)
def count_nontrivial(n, order, blk_ptr, kinds, mem_ptr, members, cut, deg, lam, dom):
    """Solutions within ``dom`` other than the all-zero vector."""
    total = count_all(n, order, blk_ptr, kinds, mem_ptr, members, cut, deg, lam, dom)
    for i in range(n):
        if not (dom[i] >> 1) & 1:
            return total
    return total - 1


@njit(cache=True)
def enumerate_solutions(n, order, blk_ptr, kinds, mem_ptr, members, cut, deg, lam, limit):
    """Sign-canonical nonzero solutions, by fixing vertices 0..n-1 in turn.

    A value is kept for vertex i only if some completion exists, so the work
    per reported solution is O(n) counting passes. ``limit`` < 0 means all.
    """
    rows = np.zeros((8, max(n, 1)), np.int8)
    count = 0
    if n == 0:
        return rows[:0]
    dom = np.full(n, FULL, np.int64)
    choice = np.full(n, -1, np.int64)
    val = np.zeros(n, np.int64)
    nz = np.zeros(n + 1, np.bool_)  # nz[i]: some nonzero among 0..i-1
    i = 0
    while i >= 0:
        choice[i] += 1
        ncho = 3 if nz[i] else 2
        if choice[i] >= ncho:
            choice[i] = -1
            dom[i] = FULL
            i -= 1
            continue
        v = (1, 0, -1)[choice[i]]
        dom[i] = 1 << (v + 1)
        if count_nontrivial(n, order, blk_ptr, kinds, mem_ptr, members, cut, deg, lam, dom) <= 0:
            continue
        val[i] = v
        if i == n - 1:
            if count == rows.shape[0]:
                grown = np.zeros((2 * count, rows.shape[1]), np.int8)
                grown[:count] = rows
                rows = grown
            for j in range(n):
                rows[count, j] = val[j]
            count += 1
            if limit >= 0 and count >= limit:
                return rows[:count]
            continue
        nz[i + 1] = nz[i] or v != 0
        i += 1
    return rows[:count]
