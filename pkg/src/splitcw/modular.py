"""Modules, prime graphs and prime induced subgraphs.

A set M is a module when every outside vertex is complete or anti-complete
to it; trivial modules have zero, one or all vertices.  Following the literal
reading of that definition, graphs on at most two vertices are prime (every
vertex subset is trivial).  Searches are exhaustive over subsets, which is
the correctness-first choice at desk scale.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .graphs import (
    Graph,
    GraphSizeError,
    canonical_code,
    induced_subgraph_mask,
    vertex_mask,
    _bits,
)

MODULE_SEARCH_LIMIT = 15


def is_module(g: Graph, members: Iterable[int]) -> bool:
    """True iff every vertex outside the set is complete or anti-complete to it."""
    mask = vertex_mask(g, members)
    size = mask.bit_count()
    if size <= 1 or size == g.n:
        return True
    for w in range(g.n):
        if mask >> w & 1:
            continue
        inter = g._adj[w] & mask
        if inter != 0 and inter != mask:
            return False
    return True


def find_nontrivial_module(g: Graph) -> Optional[frozenset[int]]:
    """Some module with 2 <= |M| <= n-1, or None.  Deterministic: subsets are
    scanned by (size, lexicographic members)."""
    if g.n > MODULE_SEARCH_LIMIT:
        raise GraphSizeError(
            f"module search supports n <= {MODULE_SEARCH_LIMIT}"
        )
    for size in range(2, g.n):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            ok = True
            for w in range(g.n):
                if mask >> w & 1:
                    continue
                inter = g._adj[w] & mask
                if inter != 0 and inter != mask:
                    ok = False
                    break
            if ok:
                return frozenset(combo)
    return None


def is_prime(g: Graph) -> bool:
    """True iff every module is trivial (n <= 2 is prime by convention)."""
    return find_nontrivial_module(g) is None


def prime_induced_subgraphs(g: Graph) -> list[Graph]:
    """All prime induced subgraphs on >= 1 vertex, one per isomorphism class.

    Deduplicated by canonical code and sorted by (vertex count, code).  The
    empty graph is excluded; 1- and 2-vertex subgraphs are prime by the
    convention above, so K1 (and K2 or 2P1 where present) always appear for
    non-empty g.
    """
    if g.n > 12:
        raise GraphSizeError("prime_induced_subgraphs supports n <= 12")
    seen: dict[bytes, Graph] = {}
    for mask in range(1, g.full_mask + 1):
        sub = induced_subgraph_mask(g, mask)
        code = canonical_code(sub)
        if code in seen:
            continue
        if is_prime(sub):
            seen[code] = sub
    return [seen[c] for c in sorted(seen, key=lambda c: (seen[c].n, c))]
