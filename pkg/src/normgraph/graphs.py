"""Normalizing graphs of a finite group and their universal vertices.

The core relation: x -> y when y normalizes <x>, i.e. <x> is normal in
<x, y>.  Out-rows over the whole group double as normalizer lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import structure
from .bitset import bits, compress, from_bool, mask_of, to_bool
from .digraph import Digraph, transpose_masks
from .group import Group, Subgroup


def normalizer_rows(g: Group) -> list[int]:
    """Row x = N_G(<x>) as a mask; x itself is always in its row."""
    if "gamma_rows" not in g._memo:
        g._memo["gamma_rows"] = [g.normalizer_of_cyclic(x).mask for x in range(g.order)]
    return g._memo["gamma_rows"]


def normalizer_columns(g: Group) -> list[int]:
    """Column y = the set of x with x -> y."""
    if "gamma_cols" not in g._memo:
        g._memo["gamma_cols"] = list(transpose_masks(tuple(normalizer_rows(g))))
    return g._memo["gamma_cols"]


def arrow(g: Group, x: int, y: int) -> bool:
    return bool(normalizer_rows(g)[x] >> y & 1)


def out_neighbors(g: Group, x: int) -> int:
    return normalizer_rows(g)[x]


def in_neighbors(g: Group, x: int) -> int:
    return normalizer_columns(g)[x]


@dataclass(frozen=True)
class UnivReport:
    """Universal vertex sets of the directed normalizing graph."""

    minus_mask: int         # elements whose cyclic subgroup is normal
    plus: Subgroup          # elements normalizing every cyclic subgroup
    univ_mask: int          # intersection of the two
    is_subgroup: bool
    equals_center: bool
    equals_second_center: bool

    @property
    def plus_mask(self) -> int:
        return self.plus.mask


def univ_sets(g: Group) -> UnivReport:
    if "univ" not in g._memo:
        rows = normalizer_rows(g)
        full = g.full_mask()
        minus = mask_of(x for x in range(g.order) if rows[x] == full)
        plus_mask = reduce(lambda a, b: a & b, rows, full)
        univ = minus & plus_mask
        g._memo["univ"] = UnivReport(
            minus_mask=minus,
            plus=Subgroup(g, plus_mask),
            univ_mask=univ,
            is_subgroup=g.closure_mask(univ) == univ,
            equals_center=univ == structure.center(g).mask,
            equals_second_center=univ == structure.second_center(g).mask,
        )
    return g._memo["univ"]


def _restrict(g: Group, vmask: int, rowmask, name: str) -> Digraph:
    n = g.order
    keep = to_bool(vmask, n)
    out = tuple(
        compress(rowmask(x) & vmask & ~(1 << x), keep) for x in bits(vmask)
    )
    return Digraph(tuple(bits(vmask)), out, transpose_masks(out), name=name)


def gamma_norm(g: Group) -> Digraph:
    key = ("digraph", "gamma")
    if key not in g._memo:
        rows = normalizer_rows(g)
        g._memo[key] = _restrict(
            g, g.full_mask(), lambda x: rows[x], f"{g.name}:gamma"
        )
    return g._memo[key]


def delta_norm(g: Group) -> Digraph:
    """The normalizing graph with every bidirectional universal vertex removed."""
    key = ("digraph", "delta")
    if key not in g._memo:
        rows = normalizer_rows(g)
        vmask = g.full_mask() & ~univ_sets(g).univ_mask
        g._memo[key] = _restrict(g, vmask, lambda x: rows[x], f"{g.name}:delta")
    return g._memo[key]


def commuting_graph(g: Group) -> Digraph:
    """Symmetric graph on the non-central elements; edges join commuting pairs."""
    key = ("digraph", "comm")
    if key not in g._memo:
        vmask = g.full_mask() & ~structure.center(g).mask
        mem = np.fromiter(bits(vmask), dtype=np.int64)
        sub = g.table[np.ix_(mem, mem)]
        adj = sub == sub.T
        out = tuple(from_bool(adj[i]) & ~(1 << i) for i in range(mem.size))
        g._memo[key] = Digraph(
            tuple(int(x) for x in mem), out, out, name=f"{g.name}:comm"
        )
    return g._memo[key]


def _pair_class_digraph(g: Group, vmask: int, predicate, name: str) -> Digraph:
    # <x,y> depends only on (<x>, <y>), so test one representative pair
    # per pair of cyclic classes
    cyc = g.cyclic_masks()
    labels = tuple(bits(vmask))
    class_ids: dict[int, int] = {}
    cls_of = [class_ids.setdefault(cyc[x], len(class_ids)) for x in labels]
    k = len(class_ids)
    rep_cyc = [0] * k
    cls_posmask = [0] * k
    for pos, x in enumerate(labels):
        c = cls_of[pos]
        rep_cyc[c] = cyc[x]
        cls_posmask[c] |= 1 << pos
    adj = [0] * k
    for i in range(k):
        for j in range(i, k):
            if predicate(g.closure_mask(rep_cyc[i] | rep_cyc[j])):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    out = []
    for pos in range(len(labels)):
        m = 0
        for j in bits(adj[cls_of[pos]]):
            m |= cls_posmask[j]
        out.append(m & ~(1 << pos))
    out = tuple(out)
    return Digraph(labels, out, out, name=name)


def nilpotent_graph(g: Group) -> Digraph:
    """Symmetric graph outside the hypercenter; x ~ y when <x,y> is nilpotent."""
    key = ("digraph", "nil")
    if key not in g._memo:
        vmask = g.full_mask() & ~structure.hypercenter(g).mask
        g._memo[key] = _pair_class_digraph(
            g, vmask, lambda m: structure.subgroup_nilpotent(g, m), f"{g.name}:nil"
        )
    return g._memo[key]


def supersolubility_graph(g: Group) -> Digraph:
    """Symmetric graph on all of G; x ~ y when <x,y> is supersoluble."""
    key = ("digraph", "ssol")
    if key not in g._memo:
        g._memo[key] = _pair_class_digraph(
            g,
            g.full_mask(),
            lambda m: structure.subgroup_supersoluble(g, m),
            f"{g.name}:ssol",
        )
    return g._memo[key]


GRAPH_KINDS = ("gamma", "delta", "ugamma", "udelta", "comm", "nil", "ssol")


def element_digraph(g: Group, kind: str) -> Digraph:
    """Build one of the named graphs; `u` prefixes symmetrize."""
    if kind == "gamma":
        return gamma_norm(g)
    if kind == "delta":
        return delta_norm(g)
    if kind == "ugamma":
        return gamma_norm(g).undirected()
    if kind == "udelta":
        return delta_norm(g).undirected()
    if kind == "comm":
        return commuting_graph(g)
    if kind == "nil":
        return nilpotent_graph(g)
    if kind == "ssol":
        return supersolubility_graph(g)
    raise ValueError(f"unknown graph kind {kind!r}")
