"""Immutable finite simple graphs on vertex set 0..n-1.

Everything in this project runs at desk scale (a dozen vertices at most), so
graphs are stored as one adjacency bitmask per vertex.  That keeps the
exhaustive machinery (enumeration, solver state spaces, embedding searches)
fast enough in pure Python while staying dependency free.

All operations are pure: they never mutate their inputs and always return new
Graph values, so results can be shared, hashed and memoized freely and called
concurrently without restriction.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

ISO_LIMIT = 12
CANON_LIMIT = 12


class GraphSizeError(ValueError):
    """An operation was asked to handle a graph beyond its supported size."""


class Graph:
    """A finite simple undirected graph with vertices identified as 0..n-1.

    The empty graph (n = 0) is permitted.  Instances are immutable values;
    equality and hashing are by exact labelled adjacency, not isomorphism.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @staticmethod
    def _raw(n: int, adj: Sequence[int]) -> "Graph":
        # Internal fast path: caller guarantees a symmetric irreflexive tuple.
        g = object.__new__(Graph)
        g.n = n
        g._adj = tuple(adj)
        return g

    # -- basic accessors ---------------------------------------------------

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbours(self, v: int) -> list[int]:
        return _bits(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1) << (u + 1)
            while rest:
                b = rest & -rest
                out.append((u, b.bit_length() - 1))
                rest ^= b
        return out

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(a.bit_count() for a in self._adj))

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def vertex_mask(g: Graph, members: Iterable[int]) -> int:
    """Validate a vertex set for g and return it as a bitmask."""
    mask = 0
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def is_clique_mask(g: Graph, mask: int) -> bool:
    rest = mask
    while rest:
        b = rest & -rest
        v = b.bit_length() - 1
        rest ^= b
        if g._adj[v] & mask != mask ^ (1 << v):
            return False
    return True


def is_independent_mask(g: Graph, mask: int) -> bool:
    rest = mask
    while rest:
        b = rest & -rest
        v = b.bit_length() - 1
        rest ^= b
        if g._adj[v] & mask:
            return False
    return True


# -- elementary operations --------------------------------------------------


def complement(g: Graph) -> Graph:
    """Same vertices; distinct u,v adjacent iff non-adjacent in g."""
    full = g.full_mask
    adj = [full & ~a & ~(1 << v) for v, a in enumerate(g._adj)]
    return Graph._raw(g.n, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertex-disjoint copies, h's vertices re-indexed after g's."""
    adj = list(g._adj) + [a << g.n for a in h._adj]
    return Graph._raw(g.n + h.n, adj)


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph on the given vertices, re-indexed in sorted order."""
    verts = sorted(set(members))
    for v in verts:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        rest = g._adj[v]
        while rest:
            b = rest & -rest
            u = b.bit_length() - 1
            rest ^= b
            j = pos.get(u)
            if j is not None:
                adj[i] |= 1 << j
    return Graph._raw(len(verts), adj)


def induced_subgraph_mask(g: Graph, mask: int) -> Graph:
    return induced_subgraph(g, _bits(mask))


def subgraph_complementation(g: Graph, members: Iterable[int]) -> Graph:
    """Flip every adjacency inside the set; everything else unchanged."""
    smask = vertex_mask(g, members)
    adj = list(g._adj)
    for v in _bits(smask):
        adj[v] ^= smask & ~(1 << v)
    return Graph._raw(g.n, adj)


def bipartite_complementation(
    g: Graph, s: Iterable[int], t: Iterable[int]
) -> Graph:
    """Flip every adjacency with one end in s and the other in t."""
    smask = vertex_mask(g, s)
    tmask = vertex_mask(g, t)
    if smask & tmask:
        raise ValueError("bipartite complementation requires disjoint sets")
    adj = list(g._adj)
    for v in _bits(smask):
        adj[v] ^= tmask
    for w in _bits(tmask):
        adj[w] ^= smask
    return Graph._raw(g.n, adj)


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices: vertex v of g becomes perm[v] of the result."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a bijection on 0..n-1")
    adj = [0] * g.n
    for v in range(g.n):
        a = 0
        rest = g._adj[v]
        while rest:
            b = rest & -rest
            a |= 1 << perm[b.bit_length() - 1]
            rest ^= b
        adj[perm[v]] = a
    return Graph._raw(g.n, adj)


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            newly = 0
            for u in _bits(frontier):
                newly |= g._adj[u]
            frontier = newly & ~comp
            comp |= newly
        comps.append(comp)
        seen |= comp
    return comps


def independence_number(g: Graph) -> int:
    """Maximum size of an independent set (branch and bound)."""
    if g.n > ISO_LIMIT:
        raise GraphSizeError(f"independence_number supports n <= {ISO_LIMIT}")
    adj = g._adj
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        b = cand & -cand
        v = b.bit_length() - 1
        grow(cand & ~(adj[v] | b), size + 1)
        grow(cand ^ b, size)

    grow(g.full_mask, 0)
    return best


# -- isomorphism -------------------------------------------------------------


def _iso_invariant(g: Graph, colors: Optional[Sequence[int]]) -> tuple:
    degs = [a.bit_count() for a in g._adj]
    per_vertex = []
    for v in range(g.n):
        nbd = tuple(sorted(degs[u] for u in _bits(g._adj[v])))
        tri = sum((g._adj[u] & g._adj[v]).bit_count() for u in _bits(g._adj[v])) // 2
        col = colors[v] if colors is not None else 0
        per_vertex.append((col, degs[v], nbd, tri))
    return (g.n, g.m, tuple(sorted(per_vertex)))


def find_isomorphism(
    g: Graph,
    h: Graph,
    gcolors: Optional[Sequence[int]] = None,
    hcolors: Optional[Sequence[int]] = None,
) -> Optional[list[int]]:
    """A bijection g -> h preserving adjacency (and colors, if given).

    Returns the lexicographically least such map in image order, or None.
    Backtracking over vertices with degree/neighbourhood pruning; intended
    for n <= 12.
    """
    if g.n != h.n:
        return None
    if g.n > ISO_LIMIT:
        raise GraphSizeError(f"isomorphism supports n <= {ISO_LIMIT}")
    if _iso_invariant(g, gcolors) != _iso_invariant(h, hcolors):
        return None
    n = g.n
    gadj, hadj = g._adj, h._adj
    gdeg = [a.bit_count() for a in gadj]
    hdeg = [a.bit_count() for a in hadj]
    mapping = [-1] * n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        gm = gadj[v]
        for w in range(n):
            if used >> w & 1:
                continue
            if gdeg[v] != hdeg[w]:
                continue
            if gcolors is not None and gcolors[v] != hcolors[w]:
                continue
            ok = True
            for u in range(v):
                if (gm >> u & 1) != (hadj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(v + 1):
                return True
            used ^= 1 << w
            mapping[v] = -1
        return False

    return list(mapping) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff an adjacency-preserving bijection exists."""
    return find_isomorphism(g, h) is not None


# -- canonical codes ---------------------------------------------------------


def _refine(adj: Sequence[int], n: int, colors: list[int]) -> list[int]:
    # 1-dimensional Weisfeiler-Leman colour refinement to a stable partition.
    while True:
        keys = []
        for v in range(n):
            sig = sorted(colors[u] for u in _bits(adj[v]))
            keys.append((colors[v], tuple(sig)))
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def canonical_code(g: Graph, colors: Optional[Sequence[int]] = None) -> bytes:
    """An order-independent fingerprint: equal codes iff isomorphic.

    Exact (not hashed): the code is the minimum adjacency bit matrix over all
    vertex orderings compatible with the refined colour partition, so two
    graphs get the same code exactly when an isomorphism exists (a
    colour-preserving one, when seed colors are supplied).

    The search is branch-and-bound with a twin-skip rule that collapses
    interchangeable candidates, which keeps vertex-transitive graphs cheap.
    """
    n = g.n
    if n > CANON_LIMIT:
        raise GraphSizeError(f"canonical_code supports n <= {CANON_LIMIT}")
    if n == 0:
        return b"\x00"
    adj = g._adj
    if colors is None:
        seed = [0] * n
    else:
        if len(colors) != n:
            raise ValueError("colors must assign one value per vertex")
        order = {c: i for i, c in enumerate(sorted(set(colors)))}
        seed = [order[c] for c in colors]
    ref = _refine(adj, n, list(seed))

    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(ref[v], []).append(v)
    layout = []  # colour rank of each position
    for c in sorted(classes):
        layout.extend([c] * len(classes[c]))

    best_code: list[int] = []
    placed: list[int] = []

    def dfs(pos: int, rem_by_class: dict[int, list[int]], prefix: list[int]) -> None:
        nonlocal best_code
        if pos == n:
            if not best_code or prefix < best_code:
                best_code = list(prefix)
            return
        cls = layout[pos]
        rem_mask = 0
        for vs in rem_by_class.values():
            for u in vs:
                rem_mask |= 1 << u
        cands = []
        for v in rem_by_class[cls]:
            row = 0
            av = adj[v]
            for j, p in enumerate(placed):
                if av >> p & 1:
                    row |= 1 << j
            cands.append((row, v))
        cands.sort()
        # Prefix comparison against the best complete code found so far is
        # valid whenever our prefix coincides with its start.
        kept: list[tuple[int, int]] = []
        for row, v in cands:
            skip = False
            for prow, pv in kept:
                if prow == row:
                    excl = ~((1 << v) | (1 << pv))
                    if adj[v] & rem_mask & excl == adj[pv] & rem_mask & excl:
                        skip = True
                        break
            if skip:
                continue
            kept.append((row, v))
            if best_code and best_code[:pos] == prefix and row > best_code[pos]:
                break
            new_rem = dict(rem_by_class)
            new_rem[cls] = [u for u in rem_by_class[cls] if u != v]
            placed.append(v)
            prefix.append(row)
            dfs(pos + 1, new_rem, prefix)
            prefix.pop()
            placed.pop()

    dfs(0, {c: list(vs) for c, vs in classes.items()}, [])

    out = bytearray([n])
    out.extend(layout)
    for row in best_code:
        out.extend(row.to_bytes(2, "big"))
    return bytes(out)
