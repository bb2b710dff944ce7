"""Induced subgraph containment and the labelled bipartite layer.

The embedding search is plain backtracking over pattern vertices in their
natural order, extending by ascending host vertices, so the first embedding
found is the lexicographically least one.  Candidates are filtered by degree
compatibility and adjacency to the already-mapped prefix.

The labelled layer carries an *ordered* black/white bipartition: (B, W, E)
and (W, B, E) are different labelled graphs unless a colour-preserving
isomorphism happens to exist.  A connected bipartite component admits exactly
two labellings (its 2-colouring and the flip), so the labelling space of a
graph is 2^(number of components); we refuse to enumerate past 2^20.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .graphs import (
    Graph,
    canonical_code,
    connected_components,
    find_isomorphism,
    _bits,
)

LABELLING_CAP = 1 << 20

Embedding = tuple[int, ...]
"""Injective map from pattern vertices to host vertices, index = pattern vertex."""


class NotBipartiteError(ValueError):
    """The operation needs a bipartite graph."""


class BUndefinedError(ValueError):
    """Maximum-black labellings exist that are not pairwise isomorphic."""


class LabellingSpaceError(ValueError):
    """The labelling space exceeds the enumeration cap."""


def _embeddings(g: Graph, h: Graph,
                gcolor: Optional[Sequence[int]] = None,
                hcolor: Optional[Sequence[int]] = None) -> Iterator[Embedding]:
    """All induced embeddings of h into g, in lexicographic order."""
    hn, gn = h.n, g.n
    if hn > gn:
        return
    gadj, hadj = g._adj, h._adj
    gdeg = [a.bit_count() for a in gadj]
    hdeg = [a.bit_count() for a in hadj]
    mapping = [-1] * hn
    used = 0

    def extend(v: int) -> Iterator[Embedding]:
        nonlocal used
        if v == hn:
            yield tuple(mapping)
            return
        hm = hadj[v]
        for w in range(gn):
            if used >> w & 1:
                continue
            if hdeg[v] > gdeg[w]:
                continue
            if hcolor is not None and hcolor[v] != gcolor[w]:
                continue
            ok = True
            for u in range(v):
                if (hm >> u & 1) != (gadj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            yield from extend(v + 1)
            used ^= 1 << w
            mapping[v] = -1

    yield from extend(0)


def contains_induced(g: Graph, h: Graph) -> Optional[Embedding]:
    """The lexicographically least induced embedding of h into g, or None."""
    return next(_embeddings(g, h), None)


def all_induced_embeddings(g: Graph, h: Graph) -> Iterator[Embedding]:
    return _embeddings(g, h)


def is_free(g: Graph, patterns: Iterable[Graph]) -> bool:
    """True iff no pattern occurs as an induced subgraph of g."""
    return all(contains_induced(g, h) is None for h in patterns)


# -- labelled bipartite graphs -----------------------------------------------


@dataclass(frozen=True)
class LabelledBipartiteGraph:
    """A bipartite graph with an ordered black/white class assignment."""

    graph: Graph
    black: frozenset[int]
    white: frozenset[int]

    def __post_init__(self) -> None:
        g = self.graph
        bmask = sum(1 << v for v in self.black)
        wmask = sum(1 << v for v in self.white)
        if bmask & wmask or bmask | wmask != g.full_mask:
            raise ValueError("black and white must partition the vertex set")
        for v in range(g.n):
            same = bmask if bmask >> v & 1 else wmask
            if g._adj[v] & same:
                raise NotBipartiteError("a colour class has an internal edge")

    def colors(self) -> tuple[int, ...]:
        # 0 = black, 1 = white; used for colour-preserving searches.
        return tuple(0 if v in self.black else 1 for v in range(self.graph.n))

    def code(self) -> bytes:
        return canonical_code(self.graph, self.colors())

    def to_json_dict(self) -> dict:
        return {
            "black": sorted(self.black),
            "white": sorted(self.white),
            "edges": [list(e) for e in self.graph.edges],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "LabelledBipartiteGraph":
        black = list(data["black"])
        white = list(data["white"])
        n = len(black) + len(white)
        g = Graph(n, [tuple(e) for e in data["edges"]])
        return LabelledBipartiteGraph(g, frozenset(black), frozenset(white))


def labelled(graph: Graph, black: Iterable[int]) -> LabelledBipartiteGraph:
    b = frozenset(black)
    w = frozenset(range(graph.n)) - b
    return LabelledBipartiteGraph(graph, b, w)


def labelled_contains(g: LabelledBipartiteGraph, h: LabelledBipartiteGraph) -> bool:
    """True iff an induced embedding maps black to black and white to white."""
    emb = next(
        _embeddings(g.graph, h.graph, gcolor=g.colors(), hcolor=h.colors()), None
    )
    return emb is not None


def labelled_isomorphic(a: LabelledBipartiteGraph, b: LabelledBipartiteGraph) -> bool:
    return (
        a.graph.n == b.graph.n
        and len(a.black) == len(b.black)
        and find_isomorphism(a.graph, b.graph, a.colors(), b.colors()) is not None
    )


def opposite_labelling(h: LabelledBipartiteGraph) -> LabelledBipartiteGraph:
    """Black and white swapped; an involution."""
    return LabelledBipartiteGraph(h.graph, h.white, h.black)


def bipartition_of_components(g: Graph) -> list[tuple[int, int]]:
    """Per component, the masks of its two 2-colouring classes.

    The class containing the component's least vertex comes first.  Raises
    NotBipartiteError when no 2-colouring exists.
    """
    out = []
    for comp in connected_components(g):
        root = (comp & -comp).bit_length() - 1
        side0 = 1 << root
        side1 = 0
        frontier = [root]
        color = {root: 0}
        while frontier:
            v = frontier.pop()
            for u in _bits(g._adj[v]):
                if u not in color:
                    color[u] = color[v] ^ 1
                    if color[u]:
                        side1 |= 1 << u
                    else:
                        side0 |= 1 << u
                    frontier.append(u)
                elif color[u] == color[v]:
                    raise NotBipartiteError("graph contains an odd cycle")
        out.append((side0, side1))
    return out


def all_labellings(g: Graph) -> Iterator[frozenset[int]]:
    """Black sets of every black-and-white labelling of a bipartite graph.

    Each connected component contributes exactly two class assignments, so
    the space has size 2^(components); enumeration is a binary counter over
    components ordered by least vertex, with the least-vertex-black choice
    first.
    """
    comps = bipartition_of_components(g)
    if len(comps) > 20:
        raise LabellingSpaceError(
            f"labelling space 2^{len(comps)} exceeds cap 2^20"
        )
    for counter in range(1 << len(comps)):
        black = 0
        for i, (side0, side1) in enumerate(comps):
            black |= side1 if counter >> i & 1 else side0
        yield frozenset(_bits(black))


def black_maximal_labelling(h: Graph) -> LabelledBipartiteGraph:
    """The labelling maximizing black vertices, when that is well defined.

    Every labelling with maximum black count is compared pairwise as a
    labelled graph; if they are not all isomorphic the notion is undefined
    and BUndefinedError is raised.  The deterministic representative is the
    maximizer with the least canonical labelled code.
    """
    best: list[LabelledBipartiteGraph] = []
    best_size = -1
    for black in all_labellings(h):
        if len(black) > best_size:
            best = [labelled(h, black)]
            best_size = len(black)
        elif len(black) == best_size:
            best.append(labelled(h, black))
    rep = min(best, key=lambda lb: lb.code())
    for lb in best:
        if not labelled_isomorphic(rep, lb):
            raise BUndefinedError(
                "maximum-black labellings are not pairwise isomorphic"
            )
    return rep


def weakly_free(
    g: Graph, patterns: Sequence[LabelledBipartiteGraph]
) -> Optional[LabelledBipartiteGraph]:
    """A labelling of g avoiding every pattern as a labelled induced subgraph.

    Searches all black-and-white labellings in deterministic order; returns
    the first avoiding labelling or None when every labelling contains some
    pattern.
    """
    for black in all_labellings(g):
        cand = labelled(g, black)
        if all(not labelled_contains(cand, p) for p in patterns):
            return cand
    return None
