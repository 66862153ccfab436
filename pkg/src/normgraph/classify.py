"""Group classification: Dedekind, Frobenius, 2-Frobenius and friends.

The Frobenius kernel of a Frobenius group is its Fitting subgroup, and
in the 2-Frobenius configuration K = Fit(G) and KH/K = Fit(G/K), so both
classifiers test the pinned candidates instead of searching the normal
lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import graphs, structure
from .bitset import bits, from_bool, mask_of, to_bool
from .group import Group, Subgroup
from .numutil import is_prime, prime_divisors


def commute_matrix(g: Group) -> np.ndarray:
    if "commute" not in g._memo:
        m = g.table == g.table.T
        m.setflags(write=False)
        g._memo["commute"] = m
    return g._memo["commute"]


def is_dedekind(g: Group) -> bool:
    return graphs.univ_sets(g).minus_mask == g.full_mask()


def _fixed_point_free_outside(g: Group, kmask: int, within: int) -> bool:
    """C_K(x) = 1 for every x in `within` minus K."""
    com = commute_matrix(g)
    kb = to_bool(kmask, g.order)
    outside = to_bool(within & ~kmask, g.order)
    if not outside.any():
        return False
    return com[np.ix_(outside, kb)].sum(axis=1).max() == 1


@dataclass(frozen=True)
class FrobeniusData:
    kernel: Subgroup
    complement: Subgroup

    def complement_conjugates(self) -> list[int]:
        g = self.kernel.group
        seen = []
        for x in range(g.order):
            m = g.conjugate_set(self.complement.mask, x)
            if m not in seen:
                seen.append(m)
        return seen


def _find_complement(g: Group, kmask: int) -> Subgroup:
    n = g.order
    m = n // kmask.bit_count()
    orders = g.element_orders()
    cyc = g.cyclic_masks()
    for h in range(1, n):
        if orders[h] == m and cyc[h] & kmask == 1:
            return Subgroup(g, cyc[h])
    # grow subgroups meeting K trivially, smallest new generator first
    frontier = [1]
    seen = {1}
    while frontier:
        cur = frontier.pop(0)
        for e in range(1, n):
            if cur >> e & 1:
                continue
            ext = g.closure_mask(cur | 1 << e)
            if ext in seen or ext & kmask != 1 or m % ext.bit_count():
                continue
            if ext.bit_count() == m:
                return Subgroup(g, ext)
            seen.add(ext)
            frontier.append(ext)
    raise RuntimeError(f"no Frobenius complement found in {g.name}")


def classify_frobenius(g: Group) -> FrobeniusData | None:
    if "frobenius" not in g._memo:
        g._memo["frobenius"] = _classify_frobenius(g)
    return g._memo["frobenius"]


def _classify_frobenius(g: Group) -> FrobeniusData | None:
    if g.order == 1 or structure.center(g).mask != 1:
        return None
    k = structure.fitting_subgroup(g)
    if len(k) in (1, g.order):
        return None
    if not _fixed_point_free_outside(g, k.mask, g.full_mask()):
        return None
    return FrobeniusData(kernel=k, complement=_find_complement(g, k.mask))


@dataclass(frozen=True)
class TwoFrobeniusData:
    k: Subgroup        # lower Frobenius kernel, = Fit(G)
    kh: Subgroup       # lower Frobenius group, normal with kh/k = Fit(G/k)
    h: Subgroup        # cyclic complement of k in kh
    l: Subgroup        # preimage of a complement of kh/k in G/k
    x_mask: int        # union of the conjugates of h

    @property
    def group(self) -> Group:
        return self.k.group


def classify_two_frobenius(g: Group) -> TwoFrobeniusData | None:
    if "twofrobenius" not in g._memo:
        g._memo["twofrobenius"] = _classify_two_frobenius(g)
    return g._memo["twofrobenius"]


def _classify_two_frobenius(g: Group) -> TwoFrobeniusData | None:
    if g.order == 1 or structure.center(g).mask != 1:
        return None
    if classify_frobenius(g) is not None:
        return None
    k = structure.fitting_subgroup(g)
    if len(k) in (1, g.order):
        return None
    q, proj = structure.quotient_group(g, k)
    fq = classify_frobenius(q)
    if fq is None:
        return None
    # pull kh = preimage of Fit(q) back to g and check it is Frobenius over k
    kh_mask = 0
    fit_q = fq.kernel.mask
    for a in range(g.order):
        if fit_q >> int(proj[a]) & 1:
            kh_mask |= 1 << a
    if kh_mask.bit_count() == g.order:
        return None
    if not _fixed_point_free_outside(g, k.mask, kh_mask):
        return None
    h = _cyclic_complement_in(g, k.mask, kh_mask)
    if h is None:
        return None
    l_mask = 0
    comp_q = fq.complement.mask
    for a in range(g.order):
        if comp_q >> int(proj[a]) & 1:
            l_mask |= 1 << a
    x_mask = 0
    for kk in bits(k.mask):
        x_mask |= g.conjugate_set(h.mask, kk)
    return TwoFrobeniusData(
        k=k,
        kh=Subgroup(g, kh_mask),
        h=h,
        l=Subgroup(g, l_mask),
        x_mask=x_mask,
    )


def _cyclic_complement_in(g: Group, kmask: int, mmask: int) -> Subgroup | None:
    want = mmask.bit_count() // kmask.bit_count()
    orders = g.element_orders()
    cyc = g.cyclic_masks()
    for h in bits(mmask & ~kmask):
        if orders[h] == want and cyc[h] & kmask == 1:
            return Subgroup(g, cyc[h])
    return None


def is_a_group(g: Group) -> bool:
    """All Sylow subgroups abelian."""
    com = commute_matrix(g)
    for p in prime_divisors(g.order):
        mem = to_bool(structure.sylow_subgroup(g, p).mask, g.order)
        if not com[np.ix_(mem, mem)].all():
            return False
    return True


def is_cyclic_by_abelian(g: Group) -> bool:
    """Has a cyclic normal subgroup with abelian quotient."""
    derived = structure.derived_subgroup(g).mask
    cyc = g.cyclic_masks()
    minus = graphs.univ_sets(g).minus_mask
    return any(not (derived & ~cyc[a]) for a in bits(minus))


def fitting_is_cyclic(g: Group) -> bool:
    fit = structure.fitting_subgroup(g).mask
    cyc = g.cyclic_masks()
    return any(cyc[x] == fit for x in bits(fit))


def involutions_commute(g: Group) -> bool:
    invs = g.element_orders() == 2
    if not invs.any():
        return True
    return bool(commute_matrix(g)[np.ix_(invs, invs)].all())


def two_frob_disconnection_expected(data: TwoFrobeniusData) -> bool:
    """No prime of |H| divides r-1 for any prime r of |K|."""
    ph = prime_divisors(len(data.h))
    pk = prime_divisors(len(data.k))
    return all((r - 1) % p for p in ph for r in pk)


def two_frob_refined_bound(data: TwoFrobeniusData) -> bool:
    """pi(K) = pi(L), or every prime of pi(L) - pi(K) divides some r-1."""
    pk = set(prime_divisors(len(data.k)))
    pl = set(prime_divisors(len(data.l)))
    if pk == pl:
        return True
    return all(any((r - 1) % p == 0 for r in pk) for p in pl - pk)


@dataclass(frozen=True)
class Classification:
    order: int
    abelian: bool
    dedekind: bool
    nilpotent: bool
    nilpotency_class: int | None
    soluble: bool
    supersoluble: bool
    a_group: bool
    cyclic_by_abelian: bool
    trivial_center: bool
    frobenius: FrobeniusData | None
    two_frobenius: TwoFrobeniusData | None
    fitting_order: int
    fitting_cyclic: bool
    fitting_index_prime: bool
    involutions_commute: bool

    def kind(self) -> str:
        if self.frobenius is not None:
            return "frobenius"
        if self.two_frobenius is not None:
            return "2-frobenius"
        if self.dedekind:
            return "dedekind"
        return "other"


def classify(g: Group) -> Classification:
    if "classification" not in g._memo:
        fit = structure.fitting_subgroup(g)
        g._memo["classification"] = Classification(
            order=g.order,
            abelian=structure.is_abelian(g),
            dedekind=is_dedekind(g),
            nilpotent=structure.is_nilpotent(g),
            nilpotency_class=structure.nilpotency_class(g),
            soluble=structure.is_soluble(g),
            supersoluble=structure.is_supersoluble(g),
            a_group=is_a_group(g),
            cyclic_by_abelian=is_cyclic_by_abelian(g),
            trivial_center=structure.center(g).mask == 1,
            frobenius=classify_frobenius(g),
            two_frobenius=classify_two_frobenius(g),
            fitting_order=len(fit),
            fitting_cyclic=fitting_is_cyclic(g),
            fitting_index_prime=is_prime(g.order // len(fit)),
            involutions_commute=involutions_commute(g),
        )
    return g._memo["classification"]
