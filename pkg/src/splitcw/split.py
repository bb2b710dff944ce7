"""Split graphs: recognition, split partitions, and the correspondence with
labelled bipartite graphs obtained by complementing the clique side.

A split partition is an *ordered* pair (K, I): K a clique, I an independent
set, either possibly empty.  A graph may have several; they are enumerated
exhaustively (2^n candidate clique sides, filtered) and returned sorted by
(|K|, lexicographic K) so witnesses are reproducible.

Complementing the edges inside K turns a split graph into a bipartite graph
with classes (K, I).  Both colour conventions occur in practice, so the
convention is an explicit parameter: it names the colour given to the clique
side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import (
    Graph,
    GraphSizeError,
    find_isomorphism,
    is_clique_mask,
    is_independent_mask,
    subgraph_complementation,
    _bits,
)
from .subgraph import LabelledBipartiteGraph, _embeddings

SPLIT_LIMIT = 12

K_BLACK = "black"
K_WHITE = "white"


class InvalidPartitionError(ValueError):
    """The pair (K, I) is not a valid split partition of the graph."""


@dataclass(frozen=True)
class SplitPartition:
    """Ordered pair: clique side K and independent side I."""

    K: frozenset[int]
    I: frozenset[int]

    def to_json_dict(self) -> dict:
        return {"K": sorted(self.K), "I": sorted(self.I)}

    @staticmethod
    def from_json_dict(data: dict) -> "SplitPartition":
        return SplitPartition(frozenset(data["K"]), frozenset(data["I"]))

    @staticmethod
    def of(K: Iterable[int], I: Iterable[int]) -> "SplitPartition":
        return SplitPartition(frozenset(K), frozenset(I))


def check_partition(g: Graph, p: SplitPartition) -> tuple[int, int]:
    """Validate p for g; returns (K mask, I mask)."""
    kmask = sum(1 << v for v in p.K)
    imask = sum(1 << v for v in p.I)
    if kmask & imask or kmask | imask != g.full_mask:
        raise InvalidPartitionError("K and I must partition the vertex set")
    if not is_clique_mask(g, kmask):
        raise InvalidPartitionError("K is not a clique")
    if not is_independent_mask(g, imask):
        raise InvalidPartitionError("I is not an independent set")
    return kmask, imask


def split_partitions(g: Graph) -> list[SplitPartition]:
    """All ordered split partitions, sorted by (|K|, lexicographic K)."""
    if g.n > SPLIT_LIMIT:
        raise GraphSizeError(f"split_partitions supports n <= {SPLIT_LIMIT}")
    full = g.full_mask
    out = []
    for kmask in range(full + 1):
        if is_clique_mask(g, kmask) and is_independent_mask(g, full ^ kmask):
            out.append(
                SplitPartition.of(_bits(kmask), _bits(full ^ kmask))
            )
    out.sort(key=lambda p: (len(p.K), sorted(p.K)))
    return out


def is_split(g: Graph) -> bool:
    """True iff some split partition exists (equivalently, g has no induced
    2K2, C4 or C5)."""
    if g.n > SPLIT_LIMIT:
        raise GraphSizeError(f"is_split supports n <= {SPLIT_LIMIT}")
    full = g.full_mask
    for kmask in range(full + 1):
        if is_clique_mask(g, kmask) and is_independent_mask(g, full ^ kmask):
            return True
    return False


def partitions_isomorphic(g: Graph, p: SplitPartition, q: SplitPartition) -> bool:
    """True iff an automorphism of g maps p.K onto q.K."""
    check_partition(g, p)
    check_partition(g, q)
    if len(p.K) != len(q.K):
        return False
    pc = tuple(0 if v in p.K else 1 for v in range(g.n))
    qc = tuple(0 if v in q.K else 1 for v in range(g.n))
    return find_isomorphism(g, g, pc, qc) is not None


def partition_contains(
    g: Graph, pg: SplitPartition, h: Graph, ph: SplitPartition
) -> bool:
    """True iff some induced embedding of h into g sends ph.K into pg.K and
    ph.I into pg.I."""
    check_partition(g, pg)
    check_partition(h, ph)
    gcol = tuple(0 if v in pg.K else 1 for v in range(g.n))
    hcol = tuple(0 if v in ph.K else 1 for v in range(h.n))
    return next(_embeddings(g, h, gcolor=gcol, hcolor=hcol), None) is not None


def _check_convention(convention: str) -> None:
    if convention not in (K_BLACK, K_WHITE):
        raise ValueError(f"convention must be {K_BLACK!r} or {K_WHITE!r}")


def to_labelled_bipartite(
    g: Graph, p: SplitPartition, convention: str
) -> LabelledBipartiteGraph:
    """Complement the edges inside p.K; colour the clique side per convention.

    convention = "black" colours K black and I white; "white" the reverse.
    """
    _check_convention(convention)
    check_partition(g, p)
    bip = subgraph_complementation(g, p.K)
    black = p.K if convention == K_BLACK else p.I
    white = p.I if convention == K_BLACK else p.K
    return LabelledBipartiteGraph(bip, frozenset(black), frozenset(white))


def from_labelled_bipartite(
    b: LabelledBipartiteGraph, convention: str
) -> tuple[Graph, SplitPartition]:
    """Complete the designated colour class into a clique.

    Inverse of to_labelled_bipartite with the same convention.
    """
    _check_convention(convention)
    kside = b.black if convention == K_BLACK else b.white
    iside = b.white if convention == K_BLACK else b.black
    g = subgraph_complementation(b.graph, kside)
    return g, SplitPartition(frozenset(kside), frozenset(iside))


def key_lemma_extension(h: Graph, p: SplitPartition) -> Graph:
    """h plus one new vertex complete to p.K and anti-complete to p.I."""
    check_partition(h, p)
    x = h.n
    edges = h.edges + [(v, x) for v in sorted(p.K)]
    return Graph(h.n + 1, edges)
