"""Structural invariants: conjugacy classes, central series, normal
subgroups, Sylow and Fitting subgroups, quotients."""

from __future__ import annotations

import numpy as np

from .bitset import bits, from_bool, mask_of, to_bool
from .group import Group, Subgroup
from .numutil import factorization, is_prime, prime_divisors


def conjugacy_classes(g: Group) -> list[int]:
    """Class masks, ordered by least member."""
    if "classes" in g._memo:
        return g._memo["classes"]
    n, t = g.order, g.table
    idx = np.arange(n)
    seen = np.zeros(n, dtype=bool)
    out = []
    for a in range(n):
        if seen[a]:
            continue
        cls = t[t[g.inv, a], idx]  # g^-1 a g over all g
        members = np.unique(cls)
        seen[members] = True
        out.append(mask_of(int(m) for m in members))
    g._memo["classes"] = out
    return out


def center(g: Group) -> Subgroup:
    if "center" not in g._memo:
        t = g.table
        g._memo["center"] = from_bool((t == t.T).all(axis=1))
    return Subgroup(g, g._memo["center"])


def upper_central_series(g: Group) -> list[Subgroup]:
    """Ascending central series from the center up to the hypercenter."""
    if "ucs" in g._memo:
        return [Subgroup(g, m) for m in g._memo["ucs"]]
    n, t, inv = g.order, g.table, g.inv
    masks = [center(g).mask]
    while True:
        member = to_bool(masks[-1], n)
        nxt = np.array(member)
        for a in range(n):
            if member[a]:
                continue
            comm = t[t[inv[a], inv], t[a]]  # [a, b] over all b
            nxt[a] = member[comm].all()
        m = from_bool(nxt)
        if m == masks[-1]:
            break
        masks.append(m)
    g._memo["ucs"] = masks
    return [Subgroup(g, m) for m in masks]


def second_center(g: Group) -> Subgroup:
    ucs = upper_central_series(g)
    return ucs[1] if len(ucs) > 1 else ucs[0]


def hypercenter(g: Group) -> Subgroup:
    return upper_central_series(g)[-1]


def _commutator_span(g: Group, amask: int, bmask: int) -> int:
    """The subgroup generated by commutators [a, b], a in A, b in B."""
    t, inv = g.table, g.inv
    bs = np.fromiter(bits(bmask), dtype=np.int64)
    seed = 0
    for a in bits(amask):
        row = t[t[inv[a], inv[bs]], t[a, bs]]
        seed = seed | mask_of(int(c) for c in np.unique(row))
    return g.closure_mask(seed)


def lower_central_series(g: Group) -> list[Subgroup]:
    if "lcs" not in g._memo:
        full = g.full_mask()
        masks = [full]
        while True:
            nxt = _commutator_span(g, masks[-1], full)
            if nxt == masks[-1]:
                break
            masks.append(nxt)
        g._memo["lcs"] = masks
    return [Subgroup(g, m) for m in g._memo["lcs"]]


def derived_series(g: Group) -> list[Subgroup]:
    if "dseries" not in g._memo:
        masks = [g.full_mask()]
        while True:
            nxt = _commutator_span(g, masks[-1], masks[-1])
            if nxt == masks[-1]:
                break
            masks.append(nxt)
        g._memo["dseries"] = masks
    return [Subgroup(g, m) for m in g._memo["dseries"]]


def derived_subgroup(g: Group) -> Subgroup:
    series = derived_series(g)
    return series[1] if len(series) > 1 else series[0]


def nilpotency_class(g: Group) -> int | None:
    series = lower_central_series(g)
    return len(series) - 1 if series[-1].mask == 1 else None


def is_nilpotent(g: Group) -> bool:
    if len(factorization(g.order)) <= 1:
        return True
    return nilpotency_class(g) is not None


def is_soluble(g: Group) -> bool:
    return derived_series(g)[-1].mask == 1


def is_abelian(g: Group) -> bool:
    return center(g).mask == g.full_mask()


def quotient_group(g: Group, n: Subgroup) -> tuple[Group, np.ndarray]:
    """(G/N, projection array); N must be normal."""
    key = ("quotient", n.mask)
    if key not in g._memo:
        if not n.is_normal():
            raise ValueError("quotient requires a normal subgroup")
        mem = np.fromiter(bits(n.mask), dtype=np.int64)
        proj = np.full(g.order, -1, dtype=np.int32)
        reps = []
        for a in range(g.order):
            if proj[a] != -1:
                continue
            proj[g.table[a, mem]] = len(reps)
            reps.append(a)
        tq = proj[g.table[np.ix_(reps, reps)]]
        q = Group(tq, name=f"{g.name}/N{len(n)}")
        proj.setflags(write=False)
        g._memo[key] = (q, proj)
    return g._memo[key]


def normal_subgroups(g: Group) -> list[Subgroup]:
    """All normal subgroups, as joins of conjugacy-class closures."""
    if "normals" not in g._memo:
        atoms = []
        for cls in conjugacy_classes(g):
            if cls == 1:
                continue
            m = g.closure_mask(cls | 1)
            if m not in atoms:
                atoms.append(m)
        known = {1}
        queue = [1]
        while queue:
            cur = queue.pop()
            for a in atoms:
                if a & ~cur:
                    j = g.closure_mask(cur | a)
                    if j not in known:
                        known.add(j)
                        queue.append(j)
        g._memo["normals"] = sorted(known, key=lambda m: (m.bit_count(), m))
    return [Subgroup(g, m) for m in g._memo["normals"]]


def sylow_subgroup(g: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown deterministically through normalizers."""
    key = ("sylow", p)
    if key not in g._memo:
        target = p ** factorization(g.order).get(p, 0)
        orders = g._orders()
        mask = 1
        while mask.bit_count() < target:
            candidates = g.normalizer_mask(mask) & ~mask
            chosen = -1
            for c in bits(candidates):
                o = int(orders[c])
                while o % p == 0:
                    o //= p
                if o == 1:
                    chosen = c
                    break
            if chosen < 0:
                raise RuntimeError(f"stuck growing a Sylow {p}-subgroup of {g.name}")
            mask = g.closure_mask(mask | 1 << chosen)
        g._memo[key] = mask
    return Subgroup(g, g._memo[key])


def p_core(g: Group, p: int) -> Subgroup:
    key = ("pcore", p)
    if key not in g._memo:
        mask = sylow_subgroup(g, p).mask
        core = mask
        for x in range(g.order):
            core &= g.conjugate_set(mask, x)
            if core == 1:
                break
        g._memo[key] = core
    return Subgroup(g, g._memo[key])


def fitting_subgroup(g: Group) -> Subgroup:
    if "fitting" not in g._memo:
        seed = 1
        for p in prime_divisors(g.order):
            seed |= p_core(g, p).mask
        g._memo["fitting"] = g.closure_mask(seed)
    return Subgroup(g, g._memo["fitting"])


# -- properties of subgroups (by bitset), memoized per group -----------------


def subgroup_nilpotent(g: Group, mask: int) -> bool:
    key = ("nilp", mask)
    if key not in g._memo:
        if len(factorization(mask.bit_count())) <= 1:
            g._memo[key] = True
        else:
            sub, _ = Subgroup(g, mask).as_group()
            g._memo[key] = is_nilpotent(sub)
    return g._memo[key]


def subgroup_supersoluble(g: Group, mask: int) -> bool:
    key = ("ssol", mask)
    if key not in g._memo:
        sub, _ = Subgroup(g, mask).as_group()
        g._memo[key] = _is_supersoluble(sub)
    return g._memo[key]


def _is_supersoluble(g: Group) -> bool:
    # greedy chief series; factor orders are series-independent, and a
    # minimal normal subgroup over `cur` is a smallest closure of
    # cur + one conjugacy class (avoids enumerating the normal lattice)
    cur = 1
    full = g.full_mask()
    classes = conjugacy_classes(g)
    while cur != full:
        best = full
        for cls in classes:
            if not (cls & ~cur):
                continue
            m = g.closure_mask(cur | cls)
            if m.bit_count() < best.bit_count():
                best = m
        if not is_prime(best.bit_count() // cur.bit_count()):
            return False
        cur = best
    return True


def is_supersoluble(g: Group) -> bool:
    return subgroup_supersoluble(g, g.full_mask())
