"""Parity between the compiled kernels and the pure-Python fallback."""

import numpy as np
import pytest

from normgraph import builders
from normgraph._core import available_backends, load_backend
from conftest import random_digraph_masks

needs_both = pytest.mark.skipif(
    "compiled" not in available_backends(), reason="compiled extension not built"
)


@needs_both
@pytest.mark.parametrize("name", ["S4", "D12", "Q16", "C3xQ8"])
def test_closure_and_normalizer_parity(name):
    g = builders.catalog_group(name)
    py = load_backend("python")
    cc = load_backend("compiled")
    ctx_py = py.prepare(g.table, g.inv)
    ctx_cc = cc.prepare(g.table, g.inv)
    rng = np.random.default_rng(7)
    for _ in range(40):
        seed = 1
        for x in rng.integers(0, g.order, size=2):
            seed |= 1 << int(x)
        m_py = py.closure(ctx_py, seed)
        m_cc = cc.closure(ctx_cc, seed)
        assert m_py == m_cc
        assert py.normalizer(ctx_py, m_py) == cc.normalizer(ctx_cc, m_cc)


@needs_both
def test_graph_kernel_parity():
    py = load_backend("python")
    cc = load_backend("compiled")
    rng = np.random.default_rng(11)
    for n in (1, 2, 5, 17, 33, 64):
        for density in (0.05, 0.2, 0.6):
            masks = random_digraph_masks(rng, n, density)
            assert py.scc(masks, n) == cc.scc(masks, n)
            assert py.diameter(masks, n) == cc.diameter(masks, n)
            src = int(rng.integers(0, n))
            assert py.bfs(masks, n, src) == cc.bfs(masks, n, src)
