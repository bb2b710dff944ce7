"""Exhaustive enumeration up to isomorphism and the reduction pipeline.

Enumeration extends each (n-1)-vertex representative by one new vertex with
every possible neighbourhood and deduplicates by isomorphism (cheap invariant
buckets, then exact backtracking within a bucket).  Output order is
deterministic: sorted by edge count, then by graph6 string of the stored
representative.  Results are cached per process, so the n = 8 sweep pays its
cost once.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Optional

from . import graph6
from .catalog import catalog
from .cliquewidth import clique_width
from .graphs import (
    Graph,
    GraphSizeError,
    connected_components,
    find_isomorphism,
    induced_subgraph,
    subgraph_complementation,
    bipartite_complementation,
    _bits,
    _iso_invariant,
)
from .split import InvalidPartitionError, SplitPartition, check_partition, is_split
from .subgraph import is_free

ENUM_LIMIT = 8


class NotFreeError(ValueError):
    """The input graph contains the forbidden pattern."""


class IndependentSideTooSmallError(ValueError):
    """The pipeline needs an independent side of size at least 6."""


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    parents = _graph_classes(n - 1)
    buckets: dict[tuple, list[Graph]] = {}
    for parent in parents:
        base_edges = parent.edges
        for mask in range(1 << (n - 1)):
            edges = base_edges + [(u, n - 1) for u in _bits(mask)]
            g = Graph(n, edges)
            key = _iso_invariant(g, None)
            bucket = buckets.setdefault(key, [])
            if not any(find_isomorphism(g, other) for other in bucket):
                bucket.append(g)
    out = [g for bucket in buckets.values() for g in bucket]
    out.sort(key=lambda g: (g.m, graph6.encode(g)))
    return tuple(out)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All graphs on n vertices, one per isomorphism class."""
    if n > ENUM_LIMIT:
        raise GraphSizeError(f"enumeration supports n <= {ENUM_LIMIT}")
    yield from _graph_classes(n)


@lru_cache(maxsize=None)
def _split_classes(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in _graph_classes(n) if is_split(g))


def enumerate_split_graphs(n: int) -> Iterator[Graph]:
    """enumerate_graphs filtered to split graphs."""
    if n > ENUM_LIMIT:
        raise GraphSizeError(f"enumeration supports n <= {ENUM_LIMIT}")
    yield from _split_classes(n)


def is_star_forest(g: Graph) -> bool:
    """Every component is a star; K1 counts as a star."""
    for comp in connected_components(g):
        verts = _bits(comp)
        edges = sum(g.degree(v) for v in verts) // 2
        if edges != len(verts) - 1:
            return False
        if sum(1 for v in verts if g.degree(v) >= 2) > 1:
            return False
    return True


def thm7_reduce(g: Graph, p: SplitPartition) -> Graph:
    """Three-step pipeline for a pattern-free split graph with a large
    independent side.

    Requires g to be a split graph with valid partition p, free of
    K_{1,3}+2P_1, and |I| >= 6.  Steps: if some clique vertex has exactly two
    neighbours on the independent side, pick the least such vertex and delete
    both of its independent neighbours; complement between the clique
    vertices still having two or more independent neighbours and the
    remaining independent side; finally complement inside the clique.  The
    result is guaranteed to be a disjoint union of stars.
    """
    check_partition(g, p)
    if not is_free(g, [catalog("K1,3+2P1")]):
        raise NotFreeError("graph contains K1,3+2P1")
    if len(p.I) < 6:
        raise IndependentSideTooSmallError(
            f"independent side has {len(p.I)} < 6 vertices"
        )
    imask = sum(1 << v for v in p.I)
    kverts = sorted(p.K)
    exactly_two = [v for v in kverts if (g._adj[v] & imask).bit_count() == 2]
    if exactly_two:
        x = exactly_two[0]
        dropped = g._adj[x] & imask
        keep = [v for v in range(g.n) if not dropped >> v & 1]
        old_to_new = {v: i for i, v in enumerate(keep)}
        g1 = induced_subgraph(g, keep)
        new_k = [old_to_new[v] for v in kverts]
        new_i = [old_to_new[v] for v in sorted(p.I) if not dropped >> v & 1]
    else:
        g1 = g
        new_k = kverts
        new_i = sorted(p.I)
    imask1 = sum(1 << v for v in new_i)
    many = [v for v in new_k if (g1._adj[v] & imask1).bit_count() > 1]
    g2 = bipartite_complementation(g1, many, new_i)
    return subgraph_complementation(g2, new_k)


_FAMILIES: dict[str, Callable[[Graph], bool]] = {
    "all": lambda g: True,
    "split": is_split,
    "star-forest": is_star_forest,
}


def cw_growth_report(max_n: int, family: str = "all") -> list[dict]:
    """Per n, the maximum exact clique-width over the family and a witness.

    Raises if the maxima ever decrease as n grows (they cannot).
    """
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}")
    if max_n > ENUM_LIMIT:
        raise GraphSizeError(f"growth report supports n <= {ENUM_LIMIT}")
    pred = _FAMILIES[family]
    rows = []
    prev = 0
    for n in range(1, max_n + 1):
        best = 0
        witness: Optional[Graph] = None
        for g in enumerate_graphs(n):
            if not pred(g):
                continue
            w = clique_width(g)
            if w > best:
                best = w
                witness = g
        if best < prev:
            raise AssertionError("maximum clique-width decreased with n")
        prev = best
        rows.append(
            {
                "n": n,
                "max_cw": best,
                "witness": graph6.encode(witness) if witness else None,
            }
        )
    return rows
