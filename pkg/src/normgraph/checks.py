"""Mechanical verification of normalizing-graph statements.

Every check re-derives one statement about the directed normalizing
graph on a concrete group and reports pass / fail / n-a, with a witness
payload on failure.  Statements whose premises a group does not meet
come back n/a rather than vacuously passing.
"""

from __future__ import annotations

import math
import traceback
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import classify, structure
from .analysis import GroupFacts, facts_for
from .bitset import bits, mask_of, to_bool
from .digraph import Digraph, directed_distance, is_sink_set, is_source_set
from .group import Group, Subgroup
from .numutil import factorization, is_prime, prime_divisors

PASS = "pass"
FAIL = "fail"
NA = "n/a"
ERROR = "error"


@dataclass(frozen=True)
class SuiteConfig:
    heavy_order_cap: int = 48  # pairwise / quotient checks skip larger groups


@dataclass(frozen=True)
class Check:
    id: str
    statement: str
    run: Callable[[GroupFacts, SuiteConfig], tuple[str, dict | None]]


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    group: str
    verdict: str
    witness: dict | None

    def line(self) -> str:
        tail = "" if self.witness is None else f"  {self.witness}"
        return f"{self.verdict:>5}  {self.check_id}  [{self.group}]{tail}"


def _ok():
    return PASS, None


def _na(reason: str):
    return NA, {"reason": reason}


def _fail(**witness):
    return FAIL, witness


def _too_big(f: GroupFacts, cfg: SuiteConfig) -> bool:
    return f.n > cfg.heavy_order_cap


# -- helpers ----------------------------------------------------------------


def _pair_join(g: Group, x: int, y: int) -> int:
    cyc = g.cyclic_masks()
    return g.closure_mask(cyc[x] | cyc[y])


def _normal_in_mask(g: Group, sub: int, whole: int) -> bool:
    return all(g.conjugate_set(sub, a) == sub for a in bits(whole))


def _factor_pair(f: GroupFacts):
    return getattr(f.group, "direct_factors", None)


def _embed(g: Group, nk: int, a: int, b: int) -> int:
    return a * nk + b


def _delta_posmask(f: GroupFacts, element_mask: int) -> int:
    d = f.delta
    m = 0
    for x in bits(element_mask):
        m |= 1 << d.position(x)
    return m


# -- V01..V06: universal vertices -------------------------------------------


def _v01(f: GroupFacts, cfg: SuiteConfig):
    complete = f.gamma.is_complete()
    # independent route: every distinct cyclic subgroup normal under
    # element-by-element conjugation
    cyc = f.group.cyclic_masks()
    dedekind = all(
        Subgroup(f.group, m).is_normal() for m in sorted(set(cyc))
    )
    if complete != dedekind:
        return _fail(complete=complete, dedekind=dedekind)
    return _ok()


def _v02(f: GroupFacts, cfg: SuiteConfig):
    z, univ, z2 = f.center.mask, f.univ.univ_mask, f.second_center.mask
    if z & ~univ:
        return _fail(stage="center outside univ", element=f.label(next(bits(z & ~univ))))
    if univ & ~z2:
        return _fail(stage="univ outside second center", element=f.label(next(bits(univ & ~z2))))
    return _ok()


def _v03(f: GroupFacts, cfg: SuiteConfig):
    if (f.univ.univ_mask == 1) != (f.center.mask == 1):
        return _fail(univ_size=f.univ.univ_mask.bit_count(), center_size=len(f.center))
    return _ok()


def _v04(f: GroupFacts, cfg: SuiteConfig):
    g, univ = f.group, f.univ.univ_mask
    cyc = g.cyclic_masks()
    orders = f.orders
    t, inv = g.table, g.inv
    idx = np.arange(g.order)
    univ_orders = {int(orders[u]) for u in bits(univ)}
    for u in bits(univ):
        if cyc[u] & ~univ:
            return _fail(item="powers", element=f.label(u))
        cls = t[t[inv, u], idx]
        if mask_of(int(c) for c in np.unique(cls)) & ~univ:
            return _fail(item="conjugates", element=f.label(u))
        for p in prime_divisors(int(orders[u])):
            if p not in univ_orders:
                return _fail(item="prime order member missing", element=f.label(u), prime=p)
        if orders[u] == 2 and f.center.mask == 1:
            return _fail(item="involution forces nontrivial center", element=f.label(u))
    return _ok()


def _v05(f: GroupFacts, cfg: SuiteConfig):
    g, univ = f.group, f.univ.univ_mask
    orders = f.orders
    members = list(bits(univ))
    for u in members:
        for v in members:
            if math.gcd(int(orders[u]), int(orders[v])) != 1:
                continue
            if g.table[u, v] != g.table[v, u]:
                continue
            if not univ >> int(g.table[u, v]) & 1:
                return _fail(x=f.label(u), y=f.label(v), product=f.label(int(g.table[u, v])))
    return _ok()


def _v06(f: GroupFacts, cfg: SuiteConfig):
    univ, z = f.univ.univ_mask, f.center.mask
    for u in bits(univ):
        if is_prime(int(f.orders[u])) and not z >> u & 1:
            return _fail(element=f.label(u), order=int(f.orders[u]))
    return _ok()


# -- V07..V09: direct products ----------------------------------------------


def _v07(f: GroupFacts, cfg: SuiteConfig):
    pair = _factor_pair(f)
    if pair is None:
        return _na("not built as a direct product")
    h, k = pair
    nk = k.order
    from .analysis import facts_for as ff

    fh, fk = ff(h), ff(k)
    uh, uk = fh.univ, fk.univ
    combos = (
        ("plus", f.univ.plus_mask, uh.plus_mask, uk.plus_mask),
        ("minus", f.univ.minus_mask, uh.minus_mask, uk.minus_mask),
        ("univ", f.univ.univ_mask, uh.univ_mask, uk.univ_mask),
    )
    for name, mg, mh, mk in combos:
        for x in bits(mg):
            a, b = divmod(x, nk)
            if not (mh >> a & 1 and mk >> b & 1):
                return _fail(item=f"{name} inclusion", element=f.label(x))
    prod_size = uh.univ_mask.bit_count() * uk.univ_mask.bit_count()
    if math.gcd(h.order, k.order) == 1 and f.univ.univ_mask.bit_count() != prod_size:
        return _fail(item="coprime equality", size=f.univ.univ_mask.bit_count(), expect=prod_size)
    if (
        uh.univ_mask == fh.center.mask
        and uk.univ_mask == fk.center.mask
        and f.univ.univ_mask.bit_count() != prod_size
    ):
        return _fail(item="center-equality case", size=f.univ.univ_mask.bit_count(), expect=prod_size)
    return _ok()


def _v08(f: GroupFacts, cfg: SuiteConfig):
    pair = _factor_pair(f)
    if pair is None:
        return _na("not built as a direct product")
    h, k = pair
    if classify.is_dedekind(h) or classify.is_dedekind(k):
        return _na("a factor is Dedekind")
    from .analysis import facts_for as ff

    fh, fk = ff(h), ff(k)
    nk = k.order
    univ = f.univ.univ_mask
    cond_i = True
    for a in range(h.order):
        for b in range(nk):
            inprod = bool(
                fh.univ.univ_mask >> a & 1 and fk.univ.univ_mask >> b & 1
            )
            if bool(univ >> _embed(f.group, nk, a, b) & 1) != inprod:
                cond_i = False
                break
        if not cond_i:
            break
    cond_ii = all(
        bool(univ >> _embed(f.group, nk, a, 0) & 1) == bool(fh.center.mask >> a & 1)
        for a in range(h.order)
    )
    cond_iii = all(
        bool(univ >> _embed(f.group, nk, 0, b) & 1) == bool(fk.center.mask >> b & 1)
        for b in range(nk)
    )
    if not (cond_i or cond_ii or cond_iii):
        return _na("no hypothesis applies")
    dec = f.delta.scc
    if not dec.strongly_connected or dec.diameter > 3:
        return _fail(
            conditions=[cond_i, cond_ii, cond_iii],
            strongly_connected=dec.strongly_connected,
            diameter=dec.diameter,
        )
    return _ok()


def _v09(f: GroupFacts, cfg: SuiteConfig):
    pair = _factor_pair(f)
    if pair is None or pair[0] is not pair[1]:
        return _na("not a square of one group")
    if structure.is_abelian(pair[0]):
        return _na("factor is abelian")
    dec = f.delta.scc
    if not dec.strongly_connected:
        return _fail(item="not strongly connected", components=dec.count)
    if dec.diameter > 3:
        return _fail(item="diameter", diameter=dec.diameter)
    if f.univ.univ_mask != f.center.mask:
        return _fail(item="universal set exceeds center",
                     univ_size=f.univ.univ_mask.bit_count(), center_size=len(f.center))
    return _ok()


# -- V10..V16: connectivity for trivial-center soluble groups ----------------


def _trivial_center_soluble(f: GroupFacts) -> bool:
    return f.n > 1 and f.cls.soluble and f.cls.trivial_center


def _v10(f: GroupFacts, cfg: SuiteConfig):
    if not _trivial_center_soluble(f):
        return _na("needs a nontrivial soluble group with trivial center")
    disconnected = not f.delta.scc.strongly_connected
    cls = f.cls
    expected = cls.frobenius is not None or (
        cls.two_frobenius is not None
        and classify.two_frob_disconnection_expected(cls.two_frobenius)
    )
    if disconnected != expected:
        return _fail(disconnected=disconnected, predicted=expected, kind=cls.kind())
    return _ok()


def _v11(f: GroupFacts, cfg: SuiteConfig):
    if not _trivial_center_soluble(f):
        return _na("needs a nontrivial soluble group with trivial center")
    dec = f.delta.scc
    if dec.strongly_connected:
        if dec.diameter > 8:
            return _fail(item="connected diameter", diameter=dec.diameter)
        return _ok()
    if dec.count != f.cls.fitting_order + 1:
        return _fail(item="component count", count=dec.count, fitting=f.cls.fitting_order)
    diams = sorted(dec.component_diameters, reverse=True)
    if diams[0] > 6 or any(d > 2 for d in diams[1:]):
        return _fail(item="component diameters", diameters=diams)
    return _ok()


def _v12(f: GroupFacts, cfg: SuiteConfig):
    if _too_big(f, cfg):
        return _na("order above pairwise cap")
    und = f.gamma.undirected()
    ssol = f.graph("ssol")
    # both graphs carry all elements in ascending order
    for pos in range(und.n_vertices):
        extra = und.out_masks[pos] & ~ssol.out_masks[pos]
        if extra:
            return _fail(x=f.label(und.labels[pos]),
                         y=f.label(und.labels[next(bits(extra))]))
    return _ok()


def _v13(f: GroupFacts, cfg: SuiteConfig):
    if not f.gamma.undirected().is_complete():
        return _na("undirected graph not complete")
    cls = f.cls
    if not cls.nilpotent or cls.nilpotency_class > 3:
        return _fail(item="nilpotency class", value=cls.nilpotency_class)
    if not cls.involutions_commute:
        return _fail(item="involutions")
    return _ok()


def _v14(f: GroupFacts, cfg: SuiteConfig):
    g = f.group
    uplus = f.univ.plus_mask
    full = g.full_mask()
    t, inv = g.table, g.inv
    uflags = to_bool(uplus, g.order)
    outside = [x for x in range(g.order) if not uplus >> x & 1]
    com = classify.commute_matrix(g)
    premise_all = True
    if outside:
        non = np.array(outside)
        for x in outside:
            cmem = np.nonzero(com[x])[0]
            hit = uflags[t[np.ix_(inv[cmem], non)]]
            premise_x = bool(hit.any(axis=0).all())
            if premise_x and f.rows[x] != full:
                return _fail(item="coset condition but cyclic not normal", element=f.label(x))
            premise_all = premise_all and premise_x
    und_complete = f.gamma.undirected().is_complete()
    if premise_all and not und_complete:
        return _fail(item="global coset condition but graph incomplete")
    index = g.order // uplus.bit_count()
    if is_prime(index) and not und_complete:
        return _fail(item="prime index but graph incomplete", index=index)
    return _ok()


def _v15(f: GroupFacts, cfg: SuiteConfig):
    if _too_big(f, cfg):
        return _na("order above quotient cap")
    g = f.group
    from . import graphs as graphs_mod

    joins: dict[tuple[int, int], int] = {}
    cyc = g.cyclic_masks()
    for nsub in structure.normal_subgroups(g):
        if nsub.mask == 1:
            continue
        q, proj = structure.quotient_group(g, nsub)
        qrows = graphs_mod.normalizer_rows(q)
        for x in range(g.order):
            for y in range(g.order):
                key = (cyc[x], cyc[y])
                j = joins.get(key)
                if j is None:
                    j = joins[key] = g.closure_mask(cyc[x] | cyc[y])
                if j & nsub.mask != 1:
                    continue
                if qrows[proj[x]] >> int(proj[y]) & 1 and not f.rows[x] >> y & 1:
                    return _fail(n_order=len(nsub), x=f.label(x), y=f.label(y))
    return _ok()


def _v16(f: GroupFacts, cfg: SuiteConfig):
    if f.n == 1 or f.center.mask != 1:
        return _na("needs a nontrivial group with trivial center")
    nil = f.graph("nil")
    if nil.scc.count != 1:
        return _na("nilpotent graph disconnected")
    if not f.delta.scc.strongly_connected:
        return _fail(components=f.delta.scc.count)
    return _ok()


# -- V17..V23: Frobenius and 2-Frobenius structure ---------------------------


def _v17(f: GroupFacts, cfg: SuiteConfig):
    data = f.cls.frobenius
    if data is None:
        return _na("not Frobenius")
    d = f.delta
    dec = d.scc
    if dec.strongly_connected:
        return _fail(item="graph connected")
    comp_sets = {frozenset(c) for c in dec.components}
    for conj in data.complement_conjugates():
        pm = _delta_posmask(f, conj & ~1)
        if not is_sink_set(d, pm):
            return _fail(item="complement conjugate not a sink set")
        if frozenset(bits(pm)) not in comp_sets:
            return _fail(item="complement conjugate not one component")
    km = _delta_posmask(f, data.kernel.mask & ~1)
    if not is_source_set(d, km):
        return _fail(item="kernel not a source set")
    if frozenset(bits(km)) not in comp_sets:
        return _fail(item="kernel not one component")
    return _ok()


def _kernel_complement_reach(g: Group, kmask: int, hmask: int):
    """Central kernel element with an arrow into the complement, or None."""
    from . import graphs as graphs_mod

    ksub, mem = Subgroup(g, kmask).as_group()
    sub_z = structure.center(ksub)
    zmask = mask_of(int(mem[i]) for i in bits(sub_z.mask))
    rows = graphs_mod.normalizer_rows(g)
    for kk in bits(zmask & ~1):
        if rows[kk] & hmask & ~1:
            return kk
    return None


def _v18(f: GroupFacts, cfg: SuiteConfig):
    cls = f.cls
    ran = False
    if cls.frobenius is not None:
        data = cls.frobenius
        h, k = data.complement, data.kernel
        hcyclic = any(
            k.group.cyclic_masks()[x] == h.mask for x in bits(h.mask)
        )
        cond = any(
            (r - 1) % p == 0
            for p in prime_divisors(len(h))
            for r in prime_divisors(len(k))
        )
        if hcyclic and cond:
            ran = True
            hit = _kernel_complement_reach(f.group, k.mask, h.mask)
            if hit is None:
                return _fail(item="no central kernel arrow into complement")
            # two-step reach into every complement conjugate
            d = f.delta
            sub_z = structure.center(k.as_group()[0])
            _, mem = k.as_group()
            zpos = [d.position(int(mem[i])) for i in bits(sub_z.mask) if mem[i] != 0]
            for conj in data.complement_conjugates():
                for v in bits(conj & ~1):
                    vpos = d.position(v)
                    if not any(
                        (dist := directed_distance(d, zp, vpos)) is not None and dist <= 2
                        for zp in zpos
                    ):
                        return _fail(item="complement vertex beyond two steps",
                                     vertex=f.label(v))
    if cls.two_frobenius is not None:
        data = cls.two_frobenius
        cond = any(
            (r - 1) % p == 0
            for p in prime_divisors(len(data.h))
            for r in prime_divisors(len(data.k))
        )
        if cond:
            ran = True
            sub, mem = data.kh.as_group()
            kmask_sub = mask_of(
                int(i) for i in range(sub.order) if data.k.mask >> int(mem[i]) & 1
            )
            hmask_sub = mask_of(
                int(i) for i in range(sub.order) if data.h.mask >> int(mem[i]) & 1
            )
            hit = _kernel_complement_reach(sub, kmask_sub, hmask_sub)
            if hit is None:
                return _fail(item="no central kernel arrow into complement (lower pair)")
    if not ran:
        return _na("no kernel/complement prime pair with p | r-1")
    return _ok()


def _v19(f: GroupFacts, cfg: SuiteConfig):
    data = f.cls.two_frobenius
    if data is None:
        return _na("not 2-Frobenius")
    g = f.group
    rows = f.rows
    orders = f.orders
    com = classify.commute_matrix(g)
    kh, kmask, xmask = data.kh.mask, data.k.mask, data.x_mask
    # (i) every element outside KH ties to the kernel through a prime-order power
    for a in bits(g.full_mask() & ~kh):
        good = False
        for p in prime_divisors(int(orders[a])):
            w = g.power(a, int(orders[a]) // p)
            if not (rows[a] >> w & 1 and rows[w] >> a & 1):
                continue
            if kmask >> w & 1 and w != 0:
                good = True
                break
            if not kh >> w & 1:
                near = com[w] & to_bool(kmask & ~1, g.order)
                if near.any():
                    good = True
                    break
        if not good:
            return _fail(item="outside element unlinked", element=f.label(a))
    # (ii) everything outside X shares one strongly connected component
    d = f.delta
    comp = d.scc.comp_of
    rest = [d.position(a) for a in bits(g.full_mask() & ~xmask & ~1)]
    if len({comp[p] for p in rest}) != 1:
        return _fail(item="complement-free part split")
    # (iii) every X vertex points at a prime-power element outside KH
    for x in bits(xmask & ~1):
        ok = any(
            len(factorization(int(orders[y]))) == 1
            for y in bits(rows[x] & ~kh)
        )
        if not ok:
            return _fail(item="no escape arrow", element=f.label(x))
    return _ok()


def _v20(f: GroupFacts, cfg: SuiteConfig):
    data = f.cls.two_frobenius
    if data is None:
        return _na("not 2-Frobenius")
    disconnected = not f.delta.scc.strongly_connected
    predicted = classify.two_frob_disconnection_expected(data)
    if disconnected != predicted:
        return _fail(disconnected=disconnected, predicted=predicted)
    if disconnected and not is_source_set(f.delta, _delta_posmask(f, data.x_mask & ~1)):
        return _fail(item="X not a source set")
    return _ok()


def _v21(f: GroupFacts, cfg: SuiteConfig):
    cls = f.cls
    applies = False
    if cls.two_frobenius is not None:
        applies = True
    if _trivial_center_soluble(f) and cls.a_group:
        applies = True
    if not applies:
        return _na("neither 2-Frobenius nor a trivial-center soluble A-group")
    dec = f.delta.scc
    if not dec.strongly_connected:
        return _na("graph disconnected")
    if dec.diameter > 6:
        return _fail(diameter=dec.diameter)
    return _ok()


def _v22(f: GroupFacts, cfg: SuiteConfig):
    if not _trivial_center_soluble(f):
        return _na("needs a nontrivial soluble group with trivial center")
    dec = f.delta.scc
    if dec.strongly_connected or max(dec.component_diameters) > 1:
        return _na("components not all of diameter at most 1")
    data = f.cls.frobenius
    if data is None:
        return _fail(item="not Frobenius", kind=f.cls.kind())
    if not classify.is_dedekind(data.kernel.as_group()[0]):
        return _fail(item="kernel not Dedekind")
    if not classify.is_dedekind(data.complement.as_group()[0]):
        return _fail(item="complement not Dedekind")
    return _ok()


def _v23(f: GroupFacts, cfg: SuiteConfig):
    if not _trivial_center_soluble(f):
        return _na("needs a nontrivial soluble group with trivial center")
    dec = f.delta.scc
    if not dec.strongly_connected:
        return _na("graph disconnected")
    cls = f.cls
    applied = []
    if cls.two_frobenius is not None and classify.two_frob_refined_bound(cls.two_frobenius):
        applied.append(("prime-set condition", 5))
    if cls.cyclic_by_abelian:
        applied.append(("cyclic-by-abelian", 4))
    if cls.fitting_cyclic:
        applied.append(("cyclic Fitting subgroup", 4))
    if cls.fitting_index_prime:
        applied.append(("prime Fitting index", 4))
    if not applied:
        return _na("no refinement hypothesis applies")
    for name, bound in applied:
        if dec.diameter > bound:
            return _fail(item=name, diameter=dec.diameter, bound=bound)
    return _ok()


def _v24(f: GroupFacts, cfg: SuiteConfig):
    cls = f.cls
    if f.n == 64 and not cls.dedekind and f.gamma.undirected().is_complete():
        uplus = f.univ.plus_mask
        if uplus == f.group.full_mask():
            return _fail(item="whole group normalizes everything")
        full = f.group.full_mask()
        found = any(f.rows[x] != full for x in bits(full & ~uplus))
        if not found:
            return _fail(item="every element outside the norm has normal cyclic subgroup")
        return _ok()
    if (
        f.n == 384
        and cls.trivial_center
        and cls.soluble
        and cls.fitting_order == 128
    ):
        dec = f.delta.scc
        if not dec.strongly_connected:
            return _fail(item="not strongly connected")
        if dec.diameter != 4:
            return _fail(item="diameter", diameter=dec.diameter)
        return _ok()
    return _na("no reference signature matched")


# -- V25..V29: identities and products --------------------------------------


def _v25(f: GroupFacts, cfg: SuiteConfig):
    if _too_big(f, cfg):
        return _na("order above pairwise cap")
    g = f.group
    cyc = g.cyclic_masks()
    com = classify.commute_matrix(g)
    minus = f.univ.minus_mask
    for x in range(g.order):
        row = f.rows[x]
        for y in range(g.order):
            join = _pair_join(g, x, y)
            definitional = _normal_in_mask(g, cyc[x], join)
            if definitional != bool(row >> y & 1):
                return _fail(item="row identity", x=f.label(x), y=f.label(y))
        col = f.cols[x]
        cmask = mask_of(int(c) for c in np.nonzero(com[x])[0])
        if (minus | cmask) & ~col:
            bad = next(bits((minus | cmask) & ~col))
            return _fail(item="guaranteed in-neighbours missing", x=f.label(x), y=f.label(bad))
        if cmask & ~row:
            bad = next(bits(cmask & ~row))
            return _fail(item="centralizer escapes out-row", x=f.label(x), y=f.label(bad))
    return _ok()


def _v26(f: GroupFacts, cfg: SuiteConfig):
    if _too_big(f, cfg):
        return _na("order above pairwise cap")
    g = f.group
    cyc = g.cyclic_masks()
    # independent normality route for the backward-universal set
    minus_direct = mask_of(
        x for x in range(g.order) if Subgroup(g, cyc[x]).is_normal()
    )
    if minus_direct != f.univ.minus_mask:
        return _fail(item="backward set mismatch")
    # element-by-element route for the forward-universal set
    t, inv = g.table, g.inv
    plus_direct = 0
    for x in range(g.order):
        if all(cyc[a] >> int(t[t[inv[x], a], x]) & 1 for a in range(g.order)):
            plus_direct |= 1 << x
    if plus_direct != f.univ.plus_mask:
        return _fail(item="forward set mismatch")
    if f.univ.univ_mask != minus_direct & plus_direct:
        return _fail(item="intersection mismatch")
    if g.closure_mask(plus_direct) != plus_direct:
        return _fail(item="forward set not a subgroup")
    if plus_direct & ~f.second_center.mask:
        return _fail(item="forward set outside second center")
    return _ok()


def _v27(f: GroupFacts, cfg: SuiteConfig):
    pair = _factor_pair(f)
    if pair is None:
        return _na("not built as a direct product")
    h, k = pair
    nk = k.order
    from .analysis import facts_for as ff

    fh, fk = ff(h), ff(k)
    univ = f.univ.univ_mask
    minus = f.univ.minus_mask
    korder_set = {int(o) for o in fk.orders}
    # obstruction: x universal-not-central in H moving some y whose order
    # K can copy keeps (x,1) out of the universal set
    for x in bits(fh.univ.univ_mask & ~fh.center.mask):
        for y in range(h.order):
            yx = h.conjugate(y, x)
            if yx == y:
                continue
            if int(fh.orders[y]) in korder_set and univ >> _embed(f.group, nk, x, 0) & 1:
                return _fail(item="obstruction", x=fh.label(x), y=fh.label(y))
    # embedded universal factor elements stay backward-universal
    for a in bits(fh.univ.univ_mask):
        if not minus >> _embed(f.group, nk, a, 0) & 1:
            return _fail(item="left embed", a=fh.label(a))
    for b in bits(fk.univ.univ_mask):
        if not minus >> _embed(f.group, nk, 0, b) & 1:
            return _fail(item="right embed", b=fk.label(b))
    # two universal embeds combine to a forward-universal pair
    plus = f.univ.plus_mask
    for a in range(h.order):
        if not univ >> _embed(f.group, nk, a, 0) & 1:
            continue
        for b in range(nk):
            if not univ >> _embed(f.group, nk, 0, b) & 1:
                continue
            if not plus >> _embed(f.group, nk, a, b) & 1:
                return _fail(item="combination", a=fh.label(a), b=fk.label(b))
    return _ok()


def _v28(f: GroupFacts, cfg: SuiteConfig):
    pair = _factor_pair(f)
    if pair is None:
        return _na("not built as a direct product")
    h, k = pair
    if classify.is_dedekind(h) or classify.is_dedekind(k):
        return _na("a factor is Dedekind")
    nk = k.order
    univ = f.univ.univ_mask
    d = f.delta
    from . import _core

    targets = list(range(d.n_vertices))
    for pos, x in enumerate(d.labels):
        a, b = divmod(x, nk)
        if univ >> _embed(f.group, nk, a, 0) & 1 and univ >> _embed(f.group, nk, 0, b) & 1:
            continue
        dist = _core.kernels.bfs(list(d.out_masks), d.n_vertices, pos)
        worst = max(dist)
        if worst > 3 or min(dist) < 0:
            far = dist.index(worst if worst > 3 else -1)
            return _fail(source=f.label(x), target=f.label(d.labels[far]),
                         distance=None if min(dist) < 0 else worst)
    return _ok()


def _v29(f: GroupFacts, cfg: SuiteConfig):
    pair = _factor_pair(f)
    if pair is None or pair[0] is not pair[1]:
        return _na("not a square of one group")
    h = pair[0]
    if structure.is_abelian(h) or h.order != 6:
        return _na("factor is not a nonabelian group of order 6")
    from .analysis import facts_for as ff

    fh = ff(h)
    invs = [x for x in range(h.order) if fh.orders[x] == 2]
    s, t = next(
        (s, t) for s in invs for t in invs if s != t and h.table[s, t] != h.table[t, s]
    )
    d = f.delta
    nk = h.order
    p1 = d.position(_embed(f.group, nk, s, t))
    p2 = d.position(_embed(f.group, nk, t, s))
    dist = directed_distance(d, p1, p2)
    if dist != 3:
        return _fail(item="witness distance", distance=dist)
    if d.scc.diameter != 3:
        return _fail(item="diameter", diameter=d.scc.diameter)
    return _ok()


# -- V30..V34: recorded examples ---------------------------------------------


def _v30(f: GroupFacts, cfg: SuiteConfig):
    if f.n != 16 or len(f.center) != 4 or int(f.orders.max()) != 8 or f.cls.abelian:
        return _na("not the order-16 modular signature")
    univ = f.univ
    if univ.univ_mask.bit_count() != 6 or univ.is_subgroup:
        return _fail(item="universal set", size=univ.univ_mask.bit_count())
    extra = sorted(bits(univ.univ_mask & ~f.center.mask))
    if len(extra) != 2:
        return _fail(item="extra members", count=len(extra))
    u, v = extra
    if f.orders[u] != 4 or f.orders[v] != 4 or f.group.power(u, 3) != v:
        return _fail(item="extra member structure")
    if len(univ.plus) * 2 != f.n:
        return _fail(item="forward set index", size=len(univ.plus))
    if univ.minus_mask.bit_count() != 14:
        return _fail(item="backward set size", size=univ.minus_mask.bit_count())
    if not f.gamma.undirected().is_complete() or f.gamma.is_complete():
        return _fail(item="completeness pattern")
    if f.delta.scc.strongly_connected:
        return _fail(item="reduced graph connected")
    return _ok()


def _v31(f: GroupFacts, cfg: SuiteConfig):
    data = f.cls.frobenius
    if data is None:
        return _na("not Frobenius")
    for conj in data.complement_conjugates():
        for x in bits(conj & ~1):
            if f.rows[x] & ~conj:
                return _fail(element=f.label(x))
    return _ok()


def _v32(f: GroupFacts, cfg: SuiteConfig):
    data = f.cls.two_frobenius
    if data is None:
        return _na("not 2-Frobenius")
    g = f.group
    if len(data.h) % 2 == 0:
        return _fail(item="complement order even", order=len(data.h))
    cyc = g.cyclic_masks()
    if not any(cyc[x] == data.h.mask for x in bits(data.h.mask)):
        return _fail(item="complement not cyclic")
    com = classify.commute_matrix(g)
    kb = to_bool(data.k.mask, g.order)
    for a in bits(g.full_mask() & ~data.kh.mask):
        if is_prime(int(f.orders[a])) and (com[a] & kb).sum() < 2:
            return _fail(item="prime-order element centralizes nothing in kernel",
                         element=f.label(a))
    allconj = 0
    for x in range(g.order):
        allconj |= g.conjugate_set(data.h.mask, x)
    if allconj != data.x_mask:
        return _fail(item="conjugate union differs")
    return _ok()


def _v33(f: GroupFacts, cfg: SuiteConfig):
    pair = _factor_pair(f)
    if pair is None:
        return _na("not built as a direct product")
    h, k = pair
    nk = k.order
    habelian, kabelian = structure.is_abelian(h), structure.is_abelian(k)
    hded, kded = classify.is_dedekind(h), classify.is_dedekind(k)
    from .analysis import facts_for as ff

    fk = ff(k)
    left_embed = mask_of(_embed(f.group, nk, a, 0) for a in range(h.order))
    if habelian and h.order == 3 and k.order == 6 and not kabelian:
        if f.univ.univ_mask != f.center.mask or f.univ.univ_mask != left_embed:
            return _fail(item="universal set")
        if f.delta.scc.strongly_connected:
            return _fail(item="unexpectedly connected")
        t = next(x for x in range(nk) if fk.orders[x] == 2)
        sink = mask_of(_embed(f.group, nk, a, t) for a in range(h.order))
        if not is_sink_set(f.delta, _delta_posmask(f, sink)):
            return _fail(item="expected sink set")
        return _ok()
    if hded and not habelian and h.order == 8 and k.order == 10 and not kabelian:
        if f.univ.univ_mask != left_embed:
            return _fail(item="universal set")
        if f.delta.scc.strongly_connected:
            return _fail(item="unexpectedly connected")
        return _ok()
    if hded and kded and not habelian and not kabelian and h.order == 8 and k.order == 8:
        if f.univ.univ_mask != f.center.mask or len(f.center) != 4:
            return _fail(item="universal set", size=f.univ.univ_mask.bit_count())
        return _ok()
    return _na("no recorded counterexample signature")


def _v34(f: GroupFacts, cfg: SuiteConfig):
    pair = _factor_pair(f)
    if pair is None:
        return _na("not built as a direct product")
    h, k = pair
    from .analysis import facts_for as ff

    fh, fk = ff(h), ff(k)
    if not (h.order == 16 and len(fh.center) == 4 and int(fh.orders.max()) == 8):
        return _na("left factor lacks the order-16 modular signature")
    if not (k.order == 24 and len(fk.center) == 2):
        return _na("right factor lacks the order-24 signature")
    zsize = len(f.center)
    usize = f.univ.univ_mask.bit_count()
    psize = fh.univ.univ_mask.bit_count() * fk.univ.univ_mask.bit_count()
    if (zsize, usize, psize) != (8, 12, 24):
        return _fail(center=zsize, univ=usize, product=psize)
    if f.center.mask & ~f.univ.univ_mask or usize <= zsize:
        return _fail(item="center not strictly inside universal set")
    return _ok()


REGISTRY: tuple[Check, ...] = (
    Check("V01-complete-iff-dedekind",
          "directed graph complete exactly for Dedekind groups", _v01),
    Check("V02-center-univ-second-center",
          "center inside universal set inside second center", _v02),
    Check("V03-trivial-univ-iff-trivial-center",
          "universal set trivial exactly when the center is", _v03),
    Check("V04-univ-power-conjugate-closure",
          "universal set closed under powers/conjugation with prime-order members", _v04),
    Check("V05-univ-coprime-commuting-product",
          "commuting coprime universal elements multiply inside the set", _v05),
    Check("V06-prime-order-univ-central",
          "prime-order universal elements are central", _v06),
    Check("V07-product-univ-inclusions",
          "product universal sets embed componentwise, with equality cases", _v07),
    Check("V08-product-delta-connectivity",
          "non-Dedekind product criteria force diameter at most 3", _v08),
    Check("V09-square-product-delta",
          "square of a nonabelian group: diameter at most 3, universal = center", _v09),
    Check("V10-disconnection-characterization",
          "trivial-center soluble disconnection matches Frobenius / filtered 2-Frobenius", _v10),
    Check("V11-scc-count-and-diameter-bounds",
          "diameter at most 8, or |Fit|+1 components bounded by 6 and 2", _v11),
    Check("V12-undirected-subgraph-of-supersoluble",
          "undirected graph sits inside the supersolubility graph", _v12),
    Check("V13-complete-implies-class3",
          "complete undirected graph forces class <= 3 and commuting involutions", _v13),
    Check("V14-completeness-sufficient-conditions",
          "centralizer-coset and prime-index conditions force completeness", _v14),
    Check("V15-quotient-arrow-lift",
          "quotient arrows lift when the generated subgroup misses the kernel", _v15),
    Check("V16-nilpotent-graph-connectivity",
          "connected nilpotent graph forces strong connectivity", _v16),
    Check("V17-frobenius-disconnection",
          "Frobenius: complement conjugates are sink components, kernel a source component", _v17),
    Check("V18-kernel-to-complement-arrows",
          "central kernel vertices reach complements when some p divides r-1", _v18),
    Check("V19-two-frobenius-components",
          "2-Frobenius: outside ties to kernel, one big component, X escapes", _v19),
    Check("V20-two-frobenius-disconnection-iff",
          "2-Frobenius disconnection exactly under the prime-pair condition", _v20),
    Check("V21-connected-diameter-6",
          "connected 2-Frobenius or trivial-center soluble A-group: diameter <= 6", _v21),
    Check("V22-all-components-diameter-1",
          "all components diameter <= 1 forces a doubly Dedekind Frobenius group", _v22),
    Check("V23-diameter-refinements",
          "prime-set / cyclic-by-abelian / cyclic-Fit / prime-index refinements", _v23),
    Check("V24-ingested-reference-groups",
          "reference groups match their recorded invariants", _v24),
    Check("V25-neighborhood-identities",
          "out-rows equal cyclic normalizers; centralizers sit in both neighborhoods", _v25),
    Check("V26-universal-set-characterizations",
          "universal sets match their elementwise definitions", _v26),
    Check("V27-product-element-membership",
          "product membership: obstruction and embedding rules", _v27),
    Check("V28-product-three-step-paths",
          "non-universal product pairs reach everything in three steps", _v28),
    Check("V29-square-product-diameter-witness",
          "order-6 square: diameter exactly 3 with a recorded witness pair", _v29),
    Check("V30-modular16-example",
          "order-16 modular group: exact universal sets and completeness pattern", _v30),
    Check("V31-frobenius-complement-normalizers",
          "complement elements normalize only inside their conjugate", _v31),
    Check("V32-two-frobenius-basic-facts",
          "odd cyclic complement, kernel centralizers, conjugate union identity", _v32),
    Check("V33-product-counterexamples",
          "recorded product counterexamples keep their universal sets and splits", _v33),
    Check("V34-product-univ-strict-between",
          "universal set strictly between center and factor product", _v34),
)


def run_check(check: Check, group: Group, cfg: SuiteConfig | None = None) -> CheckResult:
    cfg = cfg or SuiteConfig()
    facts = facts_for(group)
    try:
        verdict, witness = check.run(facts, cfg)
    except Exception:
        verdict = ERROR
        witness = {"trace": traceback.format_exc(limit=4).strip().splitlines()[-1]}
    return CheckResult(check.id, group.name, verdict, witness)


def run_suite(
    groups: list[Group],
    checks: tuple[Check, ...] = REGISTRY,
    cfg: SuiteConfig | None = None,
) -> list[CheckResult]:
    cfg = cfg or SuiteConfig()
    return [run_check(c, g, cfg) for c in checks for g in groups]


def summarize(results: list[CheckResult]) -> dict:
    counts = {PASS: 0, FAIL: 0, NA: 0, ERROR: 0}
    for r in results:
        counts[r.verdict] += 1
    return {
        "total": len(results),
        "counts": counts,
        "failures": [
            {"check": r.check_id, "group": r.group, "witness": r.witness}
            for r in results
            if r.verdict in (FAIL, ERROR)
        ],
    }


# -- statement coverage -------------------------------------------------------

COVERAGE: tuple[tuple[str, tuple[str, ...], str], ...] = (
    ("complement elements normalize only inside their own conjugate",
     ("V31-frobenius-complement-normalizers",), "verified"),
    ("2-Frobenius basics: odd cyclic complement, kernel centralizers, conjugate union",
     ("V32-two-frobenius-basic-facts",), "verified"),
    ("out-neighborhood equals the cyclic normalizer; guaranteed in-neighbours",
     ("V25-neighborhood-identities",), "verified"),
    ("universal sets equal their elementwise characterizations",
     ("V26-universal-set-characterizations",), "verified"),
    ("center inside universal set inside second center",
     ("V02-center-univ-second-center",), "verified"),
    ("universal set trivial exactly when the center is trivial",
     ("V03-trivial-univ-iff-trivial-center",), "verified"),
    ("order-16 modular group universal sets",
     ("V30-modular16-example",), "verified"),
    ("universal set closed under powers and conjugation, prime-order members",
     ("V04-univ-power-conjugate-closure",), "verified"),
    ("commuting coprime universal product stays universal",
     ("V05-univ-coprime-commuting-product",), "verified"),
    ("prime-order universal elements are central",
     ("V06-prime-order-univ-central",), "verified"),
    ("componentwise universal inclusions for direct products",
     ("V07-product-univ-inclusions",), "verified"),
    ("product membership obstruction for a factor-universal element",
     ("V27-product-element-membership",), "verified"),
    ("factor-universal embeds are backward universal; pairs combine forward",
     ("V27-product-element-membership",), "verified"),
    ("directed graph complete exactly for Dedekind groups",
     ("V01-complete-iff-dedekind",), "verified"),
    ("undirected graph inside the supersolubility graph",
     ("V12-undirected-subgraph-of-supersoluble",), "verified"),
    ("complete undirected graph forces class <= 3 and commuting involutions",
     ("V13-complete-implies-class3",), "verified"),
    ("centralizer-coset condition forces a normal cyclic subgroup",
     ("V14-completeness-sufficient-conditions",), "verified"),
    ("global centralizer-coset condition forces completeness",
     ("V14-completeness-sufficient-conditions",), "verified"),
    ("prime-index forward-universal subgroup forces completeness",
     ("V14-completeness-sufficient-conditions",), "verified"),
    ("three-step reachability in products of non-Dedekind groups",
     ("V28-product-three-step-paths",), "verified"),
    ("product connectivity criteria give diameter at most 3",
     ("V08-product-delta-connectivity",), "verified"),
    ("square of a nonabelian group: diameter at most 3, universal = center",
     ("V09-square-product-delta",), "verified"),
    ("recorded product counterexamples (one Dedekind or abelian factor)",
     ("V33-product-counterexamples",), "verified"),
    ("square product diameter witness is exactly 3",
     ("V29-square-product-diameter-witness",), "verified"),
    ("universal set strictly between center and factor product",
     ("V34-product-univ-strict-between",), "verified"),
    ("quotient arrows lift when the generated subgroup misses the kernel",
     ("V15-quotient-arrow-lift",), "verified"),
    ("connected nilpotent graph forces strong connectivity",
     ("V16-nilpotent-graph-connectivity",), "verified"),
    ("trivial-center soluble disconnection forces Frobenius or 2-Frobenius",
     ("V10-disconnection-characterization",), "verified"),
    ("Frobenius groups split the reduced graph",
     ("V17-frobenius-disconnection",), "verified"),
    ("central kernel vertices reach cyclic complements when p divides r-1",
     ("V18-kernel-to-complement-arrows",), "verified"),
    ("two-step reach from kernel center into every complement conjugate",
     ("V18-kernel-to-complement-arrows",), "verified"),
    ("2-Frobenius component structure",
     ("V19-two-frobenius-components",), "verified"),
    ("2-Frobenius disconnection criterion",
     ("V20-two-frobenius-disconnection-iff",), "verified"),
    ("connected 2-Frobenius diameter at most 6",
     ("V21-connected-diameter-6",), "verified"),
    ("connected soluble A-group diameter at most 6",
     ("V21-connected-diameter-6",), "verified"),
    ("connected trivial-center soluble diameter at most 8",
     ("V11-scc-count-and-diameter-bounds",), "verified"),
    ("disconnected component count and diameter bounds",
     ("V11-scc-count-and-diameter-bounds", "V17-frobenius-disconnection"), "verified"),
    ("all components of diameter 1 force a doubly Dedekind Frobenius group",
     ("V22-all-components-diameter-1",), "verified"),
    ("prime-set refinement: diameter at most 5",
     ("V23-diameter-refinements",), "verified"),
    ("cyclic-by-abelian groups: diameter at most 4",
     ("V23-diameter-refinements",), "verified"),
    ("cyclic Fitting subgroup: diameter at most 4",
     ("V23-diameter-refinements",), "verified"),
    ("prime Fitting index: diameter at most 4",
     ("V23-diameter-refinements",), "verified"),
    ("order-64 reference group: complete graph, proper forward-universal subgroup",
     ("V24-ingested-reference-groups",), "conditional"),
    ("order-384 reference group: strongly connected of diameter exactly 4",
     ("V24-ingested-reference-groups",), "conditional"),
    ("sharpness of the diameter-8 bound",
     (), "out-of-scope: no finite certificate recorded"),
)


def coverage_rows() -> list[dict]:
    return [
        {"statement": s, "checks": list(c), "status": st} for s, c, st in COVERAGE
    ]
