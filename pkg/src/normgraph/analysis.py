"""Per-group analysis: a lazy fact bundle and a JSON-ready payload."""

from __future__ import annotations

import weakref
from functools import cached_property

from . import classify, graphs, structure
from .digraph import Digraph
from .group import Group, Subgroup


class GroupFacts:
    """Lazy view over one group; every expensive value is memoized."""

    def __init__(self, group: Group):
        self.group = group

    @property
    def n(self) -> int:
        return self.group.order

    @property
    def name(self) -> str:
        return self.group.name

    def label(self, x: int) -> str:
        words = self.group.words
        if words and x in words:
            return words[x]
        return f"g{x}"

    @cached_property
    def orders(self):
        return self.group.element_orders()

    @cached_property
    def center(self) -> Subgroup:
        return structure.center(self.group)

    @cached_property
    def second_center(self) -> Subgroup:
        return structure.second_center(self.group)

    @cached_property
    def fitting(self) -> Subgroup:
        return structure.fitting_subgroup(self.group)

    @cached_property
    def univ(self) -> graphs.UnivReport:
        return graphs.univ_sets(self.group)

    @cached_property
    def rows(self) -> list[int]:
        return graphs.normalizer_rows(self.group)

    @cached_property
    def cols(self) -> list[int]:
        return graphs.normalizer_columns(self.group)

    @cached_property
    def gamma(self) -> Digraph:
        return graphs.gamma_norm(self.group)

    @cached_property
    def delta(self) -> Digraph:
        return graphs.delta_norm(self.group)

    @cached_property
    def cls(self) -> classify.Classification:
        return classify.classify(self.group)

    def graph(self, kind: str) -> Digraph:
        return graphs.element_digraph(self.group, kind)


_FACTS: "weakref.WeakKeyDictionary[Group, GroupFacts]" = weakref.WeakKeyDictionary()


def facts_for(group: Group) -> GroupFacts:
    facts = _FACTS.get(group)
    if facts is None:
        facts = _FACTS[group] = GroupFacts(group)
    return facts


def _graph_payload(d: Digraph) -> dict:
    dec = d.scc
    pairs = sorted(
        ((len(c), dia) for c, dia in zip(dec.components, dec.component_diameters)),
        reverse=True,
    )
    return {
        "vertices": d.n_vertices,
        "edges": d.arc_count(),
        "complete_directed": d.is_complete(),
        "complete_undirected": d.undirected().is_complete(),
        "strongly_connected": dec.strongly_connected,
        "scc_count": dec.count,
        "scc_sizes": [s for s, _ in pairs],
        "scc_diameters": [dia for _, dia in pairs],
        "diameter": dec.diameter,
    }


def analysis_payload(group: Group, kinds: tuple[str, ...] = ("gamma", "delta")) -> dict:
    """Deterministic summary used by the CLI and the tests."""
    f = facts_for(group)
    cls = f.cls
    frob = None
    if cls.frobenius is not None:
        frob = {
            "kernel_order": len(cls.frobenius.kernel),
            "complement_order": len(cls.frobenius.complement),
        }
    tfrob = None
    if cls.two_frobenius is not None:
        t = cls.two_frobenius
        tfrob = {
            "k_order": len(t.k),
            "kh_order": len(t.kh),
            "h_order": len(t.h),
            "l_order": len(t.l),
            "x_size": t.x_mask.bit_count(),
        }
    univ = f.univ
    return {
        "group": {"name": f.name, "order": f.n},
        "sizes": {
            "center": len(f.center),
            "second_center": len(f.second_center),
            "univ": univ.univ_mask.bit_count(),
            "univ_plus": len(univ.plus),
            "univ_minus": univ.minus_mask.bit_count(),
        },
        "univ_is_subgroup": univ.is_subgroup,
        "classification": {
            "kind": cls.kind(),
            "fitting_order": cls.fitting_order,
            "abelian": cls.abelian,
            "dedekind": cls.dedekind,
            "nilpotent": cls.nilpotent,
            "nilpotency_class": cls.nilpotency_class,
            "soluble": cls.soluble,
            "supersoluble": cls.supersoluble,
            "a_group": cls.a_group,
            "cyclic_by_abelian": cls.cyclic_by_abelian,
            "trivial_center": cls.trivial_center,
            "fitting_cyclic": cls.fitting_cyclic,
            "fitting_index_prime": cls.fitting_index_prime,
            "involutions_commute": cls.involutions_commute,
            "frobenius": frob,
            "two_frobenius": tfrob,
        },
        "graphs": {kind: _graph_payload(f.graph(kind)) for kind in kinds},
    }
