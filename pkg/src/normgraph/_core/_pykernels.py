"""Pure Python kernels: subgroup closure, normalizer scans, SCC, BFS.

Same call surface as the compiled module. Sets of element indices travel
as Python int bitsets; the multiplication table is kept as nested lists
because scalar indexing into numpy arrays is far slower than list access.
"""

from __future__ import annotations


class TableCtx:
    __slots__ = ("rows", "inv", "n")

    def __init__(self, rows, inv, n):
        self.rows = rows
        self.inv = inv
        self.n = n


def prepare(table, inv) -> TableCtx:
    return TableCtx(table.tolist(), inv.tolist(), int(table.shape[0]))


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closure(ctx: TableCtx, seed: int) -> int:
    """Subgroup generated by the seed set (always contains the identity)."""
    rows = ctx.rows
    mask = 1
    elems = [0]
    pending = []
    for b in _bits(seed & ~1):
        mask |= 1 << b
        elems.append(b)
        pending.append(b)
    i = 0
    while i < len(pending):
        x = pending[i]
        i += 1
        rx = rows[x]
        # pairs with elements discovered later are handled at their own turn
        for y in tuple(elems):
            ry = rows[y]
            for p in (rx[y], ry[x]):
                if not mask >> p & 1:
                    mask |= 1 << p
                    elems.append(p)
                    pending.append(p)
    return mask


def normalizer(ctx: TableCtx, mask: int) -> int:
    """All g with g^-1 S g = S for the member set S of `mask`."""
    rows, inv = ctx.rows, ctx.inv
    members = list(_bits(mask))
    out = 0
    for g in range(ctx.n):
        rig = rows[inv[g]]
        for m in members:
            if not mask >> rows[rig[m]][g] & 1:
                break
        else:
            out |= 1 << g
    return out


def scc(out_masks, n: int) -> list[int]:
    """Tarjan, iterative. Component ids come out in reverse topological order."""
    comp = [-1] * n
    index = [-1] * n
    low = [0] * n
    onstack = bytearray(n)
    stack: list[int] = []
    verts: list[int] = []
    rems: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack[root] = 1
        verts.append(root)
        rems.append(out_masks[root])
        while verts:
            v = verts[-1]
            rem = rems[-1]
            if rem:
                b = rem & -rem
                rems[-1] = rem ^ b
                w = b.bit_length() - 1
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack[w] = 1
                    verts.append(w)
                    rems.append(out_masks[w])
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                verts.pop()
                rems.pop()
                if verts and low[v] < low[verts[-1]]:
                    low[verts[-1]] = low[v]
                if low[v] == index[v]:
                    while True:
                        w = stack.pop()
                        onstack[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
    return comp


def bfs(out_masks, n: int, src: int) -> list[int]:
    """Directed distances from src; -1 where unreachable."""
    dist = [-1] * n
    dist[src] = 0
    seen = frontier = 1 << src
    d = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= out_masks[v]
        nxt &= ~seen
        d += 1
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def diameter(out_masks, n: int) -> tuple[bool, int]:
    """(strongly_connected, diameter). Diameter is -1 when disconnected."""
    if n == 0:
        return True, 0
    full = (1 << n) - 1
    best = 0
    for s in range(n):
        seen = frontier = 1 << s
        ecc = 0
        while True:
            nxt = 0
            for v in _bits(frontier):
                nxt |= out_masks[v]
            nxt &= ~seen
            if not nxt:
                break
            ecc += 1
            seen |= nxt
            frontier = nxt
        if seen != full:
            return False, -1
        if ecc > best:
            best = ecc
    return True, best
