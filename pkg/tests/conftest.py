import itertools

import pytest

from splitcw.graphs import Graph


def graph_from_bits(n: int, bits: int) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    return Graph(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


def all_labelled_graphs(n: int):
    """Every labelled graph on n vertices (not up to isomorphism)."""
    npairs = n * (n - 1) // 2
    for bits in range(1 << npairs):
        yield graph_from_bits(n, bits)


@pytest.fixture(scope="session")
def named():
    from splitcw.catalog import catalog

    return catalog
