"""Directed graphs on bitset adjacency, with SCC and distance queries."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _core
from .bitset import bits, from_bool, to_bool


class NotStronglyConnectedError(Exception):
    pass


def transpose_masks(out_masks: tuple[int, ...]) -> tuple[int, ...]:
    n = len(out_masks)
    if n == 0:
        return ()
    mat = np.stack([to_bool(m, n) for m in out_masks])
    return tuple(from_bool(col) for col in mat.T)


@dataclass(frozen=True)
class Digraph:
    """Vertices are positions 0..n-1 carrying group-element labels.

    Adjacency masks are indexed by position and never contain the
    vertex's own bit; loops are implicit for every reflexive relation
    handled here.
    """

    labels: tuple[int, ...]
    out_masks: tuple[int, ...]
    in_masks: tuple[int, ...]
    name: str = "graph"

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def position(self, label: int) -> int:
        return self._pos[label]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    @property
    def is_symmetric(self) -> bool:
        return self.out_masks == self.in_masks

    def undirected(self) -> "Digraph":
        if self.is_symmetric:
            return self
        sym = tuple(o | i for o, i in zip(self.out_masks, self.in_masks))
        return Digraph(self.labels, sym, sym, name=f"{self.name}-und")

    def is_complete(self) -> bool:
        full = (1 << self.n_vertices) - 1
        return all(m == full & ~(1 << v) for v, m in enumerate(self.out_masks))

    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out_masks)

    @cached_property
    def scc(self) -> "SccDecomposition":
        return _decompose(self)

    def induced(self, posmask: int, name: str | None = None) -> "Digraph":
        keep = sorted(bits(posmask))
        remap = {p: i for i, p in enumerate(keep)}
        sub_out = []
        for p in keep:
            m = 0
            for q in bits(self.out_masks[p] & posmask):
                m |= 1 << remap[q]
            sub_out.append(m)
        out = tuple(sub_out)
        return Digraph(
            tuple(self.labels[p] for p in keep),
            out,
            transpose_masks(out),
            name=name or f"{self.name}-sub",
        )


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components in reverse topological order:
    every condensation arc goes from a higher component id to a lower
    one, so component 0 is a sink of the condensation."""

    comp_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    condensation: tuple[tuple[int, int], ...]
    component_diameters: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def strongly_connected(self) -> bool:
        return self.count <= 1

    @property
    def diameter(self) -> int | None:
        return self.component_diameters[0] if self.count == 1 else None

    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]


def _decompose(d: Digraph) -> SccDecomposition:
    n = d.n_vertices
    if n == 0:
        return SccDecomposition((), (), (), ())
    comp = _core.kernels.scc(list(d.out_masks), n)
    ncomp = max(comp) + 1
    members: list[list[int]] = [[] for _ in range(ncomp)]
    for v, c in enumerate(comp):
        members[c].append(v)
    cond = set()
    for v in range(n):
        cv = comp[v]
        for w in bits(d.out_masks[v]):
            if comp[w] != cv:
                cond.add((cv, comp[w]))
    diams = []
    for c in range(ncomp):
        posmask = 0
        for v in members[c]:
            posmask |= 1 << v
        sub = d.induced(posmask)
        ok, dia = _core.kernels.diameter(list(sub.out_masks), sub.n_vertices)
        if not ok:
            raise AssertionError("component not strongly connected")
        diams.append(dia)
    return SccDecomposition(
        tuple(comp),
        tuple(tuple(m) for m in members),
        tuple(sorted(cond)),
        tuple(diams),
    )


def directed_distance(d: Digraph, u: int, v: int) -> int | None:
    dist = _core.kernels.bfs(list(d.out_masks), d.n_vertices, u)
    return None if dist[v] < 0 else dist[v]


def eccentricity(d: Digraph, u: int) -> int | None:
    dist = _core.kernels.bfs(list(d.out_masks), d.n_vertices, u)
    worst = max(dist)
    return None if min(dist) < 0 else worst


def diameter(d: Digraph) -> int:
    if d.n_vertices == 0:
        return 0
    ok, dia = _core.kernels.diameter(list(d.out_masks), d.n_vertices)
    if not ok:
        raise NotStronglyConnectedError(d.name)
    return dia


def is_sink_set(d: Digraph, posmask: int) -> bool:
    """No arc leaves the set."""
    return all(not (d.out_masks[v] & ~posmask) for v in bits(posmask))


def is_source_set(d: Digraph, posmask: int) -> bool:
    """No arc enters the set."""
    return all(not (d.in_masks[v] & ~posmask) for v in bits(posmask))


def dot_payload(d: Digraph, labeler=None) -> str:
    """Graphviz text; symmetric graphs collapse arc pairs to one edge."""
    name = lambda v: labeler(d.labels[v]) if labeler else str(d.labels[v])
    lines = [f'digraph "{d.name}" {{']
    for v in range(d.n_vertices):
        lines.append(f'  "{name(v)}";')
    if d.is_symmetric:
        for v in range(d.n_vertices):
            for w in bits(d.out_masks[v] >> (v + 1) << (v + 1)):
                lines.append(f'  "{name(v)}" -> "{name(w)}" [dir=both];')
    else:
        for v in range(d.n_vertices):
            for w in bits(d.out_masks[v]):
                lines.append(f'  "{name(v)}" -> "{name(w)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
