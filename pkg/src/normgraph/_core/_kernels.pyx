"""Compiled kernels: subgroup closure, normalizer scans, SCC, BFS, diameter.

Mirrors _pykernels. Bitsets cross the boundary as Python ints and are
unpacked into uint64 words or uint8 membership arrays internally.
"""

import numpy as np

cdef extern from *:
    """
    static inline int ctzll_(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int ctzll_(unsigned long long) nogil


class TableCtx:
    __slots__ = ("table", "inv", "n")

    def __init__(self, table, inv, n):
        self.table = table
        self.inv = inv
        self.n = n


def prepare(table, inv):
    return TableCtx(
        np.ascontiguousarray(table, dtype=np.int32),
        np.ascontiguousarray(inv, dtype=np.int32),
        int(table.shape[0]),
    )


def _mask_to_flags(mask, int n):
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].copy()


def _flags_to_mask(flags):
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def _pack_rows(out_masks, int n):
    cdef int nw = (n + 63) >> 6
    buf = b"".join(m.to_bytes(nw * 8, "little") for m in out_masks)
    return np.frombuffer(buf, dtype=np.uint64).copy(), nw


def closure(ctx, seed):
    cdef const int[:, ::1] t = ctx.table
    cdef int n = ctx.n
    member_np = np.zeros(n, dtype=np.uint8)
    elems_np = np.empty(n, dtype=np.int32)
    cdef unsigned char[::1] member = member_np
    cdef int[::1] elems = elems_np
    cdef int count = 1, i = 1, snap, j, x, y, p, q
    member[0] = 1
    elems[0] = 0
    s = seed & ~1
    while s:
        low = s & -s
        b = low.bit_length() - 1
        s ^= low
        if not member[b]:
            member[b] = 1
            elems[count] = b
            count += 1
    while i < count:
        x = elems[i]
        i += 1
        snap = count
        for j in range(snap):
            y = elems[j]
            p = t[x, y]
            if not member[p]:
                member[p] = 1
                elems[count] = p
                count += 1
            q = t[y, x]
            if not member[q]:
                member[q] = 1
                elems[count] = q
                count += 1
    return _flags_to_mask(member_np)


def normalizer(ctx, mask):
    cdef const int[:, ::1] t = ctx.table
    inv_np = ctx.inv
    cdef const int[::1] inv = inv_np
    cdef int n = ctx.n
    member_np = _mask_to_flags(mask, n)
    idx_np = np.nonzero(member_np)[0].astype(np.int32)
    cdef unsigned char[::1] member = member_np
    cdef int[::1] idx = idx_np
    cdef int m = idx_np.shape[0]
    out_np = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] out = out_np
    cdef int g, k, ig, ok
    for g in range(n):
        ig = inv[g]
        ok = 1
        for k in range(m):
            if not member[t[t[ig, idx[k]], g]]:
                ok = 0
                break
        out[g] = ok
    return _flags_to_mask(out_np)


def scc(out_masks, int n):
    if n == 0:
        return []
    W_np, nw_ = _pack_rows(out_masks, n)
    cdef unsigned long long[::1] W = W_np
    cdef int nw = nw_
    comp_np = np.full(n, -1, dtype=np.int32)
    index_np = np.full(n, -1, dtype=np.int32)
    low_np = np.zeros(n, dtype=np.int32)
    onstack_np = np.zeros(n, dtype=np.uint8)
    stack_np = np.empty(n, dtype=np.int32)
    fv_np = np.empty(n, dtype=np.int32)
    fwi_np = np.empty(n, dtype=np.int32)
    fcur_np = np.empty(n, dtype=np.uint64)
    cdef int[::1] comp = comp_np
    cdef int[::1] index = index_np
    cdef int[::1] low = low_np
    cdef unsigned char[::1] onstack = onstack_np
    cdef int[::1] stack = stack_np
    cdef int[::1] fv = fv_np
    cdef int[::1] fwi = fwi_np
    cdef unsigned long long[::1] fcur = fcur_np
    cdef int sp = 0, fp = 0, counter = 0, ncomp = 0
    cdef int root, v, w, wi
    cdef unsigned long long cur, b
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack[sp] = root
        sp += 1
        onstack[root] = 1
        fv[fp] = root
        fwi[fp] = 0
        fcur[fp] = 0
        fp += 1
        while fp > 0:
            v = fv[fp - 1]
            cur = fcur[fp - 1]
            wi = fwi[fp - 1]
            while cur == 0 and wi < nw:
                cur = W[v * nw + wi]
                wi += 1
            if cur != 0:
                b = cur & (0 - cur)
                w = ((wi - 1) << 6) + ctzll_(b)
                fcur[fp - 1] = cur ^ b
                fwi[fp - 1] = wi
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack[sp] = w
                    sp += 1
                    onstack[w] = 1
                    fv[fp] = w
                    fwi[fp] = 0
                    fcur[fp] = 0
                    fp += 1
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                fp -= 1
                if fp > 0 and low[v] < low[fv[fp - 1]]:
                    low[fv[fp - 1]] = low[v]
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        w = stack[sp]
                        onstack[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
    return comp_np.tolist()


def bfs(out_masks, int n, int src):
    if n == 0:
        return []
    W_np, nw_ = _pack_rows(out_masks, n)
    cdef unsigned long long[::1] W = W_np
    cdef int nw = nw_
    dist_np = np.full(n, -1, dtype=np.int32)
    cdef int[::1] dist = dist_np
    seen_np = np.zeros(nw, dtype=np.uint64)
    frontier_np = np.zeros(nw, dtype=np.uint64)
    nxt_np = np.zeros(nw, dtype=np.uint64)
    cdef unsigned long long[::1] seen = seen_np
    cdef unsigned long long[::1] frontier = frontier_np
    cdef unsigned long long[::1] nxt = nxt_np
    cdef int d = 0, i, j, v, any_new
    cdef unsigned long long cur, b
    dist[src] = 0
    seen[src >> 6] = frontier[src >> 6] = (<unsigned long long> 1) << (src & 63)
    while True:
        for i in range(nw):
            nxt[i] = 0
        for i in range(nw):
            cur = frontier[i]
            while cur != 0:
                b = cur & (0 - cur)
                cur ^= b
                v = (i << 6) + ctzll_(b)
                for j in range(nw):
                    nxt[j] |= W[v * nw + j]
        any_new = 0
        d += 1
        for i in range(nw):
            cur = nxt[i] & ~seen[i]
            nxt[i] = cur
            seen[i] |= cur
            frontier[i] = cur
            if cur != 0:
                any_new = 1
                while cur != 0:
                    b = cur & (0 - cur)
                    cur ^= b
                    dist[(i << 6) + ctzll_(b)] = d
        if not any_new:
            break
    return dist_np.tolist()


def diameter(out_masks, int n):
    if n == 0:
        return True, 0
    W_np, nw_ = _pack_rows(out_masks, n)
    cdef unsigned long long[::1] W = W_np
    cdef int nw = nw_
    full_np = np.zeros(nw, dtype=np.uint64)
    cdef unsigned long long[::1] full = full_np
    cdef int i
    for i in range(n):
        full[i >> 6] |= (<unsigned long long> 1) << (i & 63)
    seen_np = np.zeros(nw, dtype=np.uint64)
    frontier_np = np.zeros(nw, dtype=np.uint64)
    nxt_np = np.zeros(nw, dtype=np.uint64)
    cdef unsigned long long[::1] seen = seen_np
    cdef unsigned long long[::1] frontier = frontier_np
    cdef unsigned long long[::1] nxt = nxt_np
    cdef int s, j, v, ecc, best = 0, any_new, complete
    cdef unsigned long long cur, b
    for s in range(n):
        for i in range(nw):
            seen[i] = frontier[i] = 0
        seen[s >> 6] = frontier[s >> 6] = (<unsigned long long> 1) << (s & 63)
        ecc = 0
        while True:
            for i in range(nw):
                nxt[i] = 0
            for i in range(nw):
                cur = frontier[i]
                while cur != 0:
                    b = cur & (0 - cur)
                    cur ^= b
                    v = (i << 6) + ctzll_(b)
                    for j in range(nw):
                        nxt[j] |= W[v * nw + j]
            any_new = 0
            for i in range(nw):
                cur = nxt[i] & ~seen[i]
                seen[i] |= cur
                frontier[i] = cur
                if cur != 0:
                    any_new = 1
            if not any_new:
                break
            ecc += 1
        complete = 1
        for i in range(nw):
            if seen[i] != full[i]:
                complete = 0
                break
        if not complete:
            return False, -1
        if ecc > best:
            best = ecc
    return True, best
