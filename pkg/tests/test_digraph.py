"""Digraph container and SCC/diameter kernels against naive oracles."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from normgraph import digraph as dg
from conftest import random_digraph_masks


def _naive_reach(masks, n):
    reach = []
    for s in range(n):
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            m = masks[v]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach.append(seen)
    return reach


def _make(masks, n, name="T"):
    return dg.Digraph(
        labels=tuple(range(n)),
        out_masks=tuple(masks),
        in_masks=tuple(dg.transpose_masks(list(masks))),
        name=name,
    )


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 64), st.sampled_from([0.03, 0.1, 0.3, 0.8]), st.integers(0, 2**31 - 1))
def test_scc_matches_reachability_oracle(n, density, seed):
    rng = np.random.default_rng(seed)
    masks = random_digraph_masks(rng, n, density)
    d = _make(masks, n)
    reach = _naive_reach(masks, n)
    comp = d.scc.comp_of
    for u in range(n):
        for v in range(n):
            mutual = v in reach[u] and u in reach[v]
            assert (comp[u] == comp[v]) == mutual


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**31 - 1))
def test_distance_matches_naive_bfs(n, seed):
    rng = np.random.default_rng(seed)
    masks = random_digraph_masks(rng, n, 0.15)
    d = _make(masks, n)
    src = int(rng.integers(0, n))
    # naive level-by-level search
    dist = {src: 0}
    frontier = [src]
    lvl = 0
    while frontier:
        lvl += 1
        nxt = []
        for v in frontier:
            m = masks[v]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if w not in dist:
                    dist[w] = lvl
                    nxt.append(w)
        frontier = nxt
    for v in range(n):
        assert dg.directed_distance(d, src, v) == dist.get(v)


def test_scc_structure_on_known_digraph():
    # two 2-cycles chained into a sink vertex
    masks = [0b00010, 0b00101, 0b01000, 0b10100, 0b00000]
    d = _make(masks, 5)
    dec = d.scc
    assert dec.count == 3
    assert sorted(dec.sizes()) == [1, 2, 2]
    assert not dec.strongly_connected
    assert dec.comp_of[4] == 0  # component 0 is a sink of the condensation
    # condensation arcs always point from higher component id to lower
    assert dec.condensation and all(a > b for a, b in dec.condensation)


def test_component_diameters_and_full_diameter():
    cycle = [1 << ((i + 1) % 5) for i in range(5)]
    d = _make(cycle, 5)
    assert d.scc.strongly_connected
    assert d.scc.diameter == 4
    assert dg.diameter(d) == 4
    assert dg.eccentricity(d, 0) == 4


def test_sink_and_source_sets():
    masks = [0b110, 0b100, 0b000]
    d = _make(masks, 3)
    assert dg.is_sink_set(d, 0b100)
    assert not dg.is_sink_set(d, 0b001)
    assert dg.is_source_set(d, 0b001)
    assert not dg.is_source_set(d, 0b100)


def test_undirected_and_induced():
    masks = [0b010, 0b000, 0b010]
    d = _make(masks, 3)
    u = d.undirected()
    assert u.is_symmetric
    assert u.out_masks[1] == 0b101
    sub = d.induced(0b011, name="sub")
    assert sub.n_vertices == 2
    assert sub.labels == (0, 1)
    assert sub.out_masks[0] == 0b10


def test_dot_payload_symmetric_collapses_pairs():
    masks = [0b010, 0b001, 0b000]
    d = _make(masks, 3)
    text = dg.dot_payload(d)
    assert text.count("->") == 1
    assert "[dir=both]" in text
    masks2 = [0b010, 0b000, 0b000]
    text2 = dg.dot_payload(_make(masks2, 3))
    assert "[dir=both]" not in text2
    assert text2.count("->") == 1
