import numpy as np


def by_word(g, word: str) -> int:
    """Element index with the given generator word."""
    assert g.words is not None
    return next(x for x in range(g.order) if g.words[x] == word)


def mask_from_words(g, words) -> int:
    m = 0
    for w in words:
        m |= 1 << by_word(g, w)
    return m


def random_digraph_masks(rng: np.random.Generator, n: int, density: float):
    adj = rng.random((n, n)) < density
    np.fill_diagonal(adj, False)
    return [int(sum(1 << j for j in range(n) if adj[i, j])) for i in range(n)]
