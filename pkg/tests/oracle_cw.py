"""Independent clique-width oracle, used only to calibrate the solver.

Deliberately a different algorithm from the production search: a forward
breadth-first closure over *concretely labelled* graphs.  Starting from the
single-vertex graphs, it applies every disjoint union (with every relabelling
of the right operand), every join and every rename, keeping all results with
at most ``n_max`` vertices and at most ``k`` distinct labels.  A graph has
clique-width at most k exactly when some labelled version of it shows up in
the closure.  No subset dynamic programming, no target graph guidance.

States are deduplicated by a canonical form taken as the minimum, over all
vertex permutations, of the pair (adjacency bits, label pattern with labels
renamed by first occurrence); the label-pattern quotient is sound because
renames are explicit moves.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from splitcw.graphs import Graph


def _canon_labelled(n: int, edge_set: frozenset, labels: tuple[int, ...]) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        bits = 0
        k = 0
        for j in range(1, n):
            for i in range(j):
                u, v = inv[i], inv[j]
                if (min(u, v), max(u, v)) in edge_set:
                    bits |= 1 << k
                k += 1
        seen: dict[int, int] = {}
        pat = []
        for i in range(n):
            lab = labels[inv[i]]
            if lab not in seen:
                seen[lab] = len(seen)
            pat.append(seen[lab])
        cand = (bits, tuple(pat))
        if best is None or cand < best:
            best = cand
    return (n,) + best


def _canon_unlabelled(g: Graph) -> tuple:
    n = g.n
    eset = frozenset(g.edges)
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        bits = 0
        k = 0
        for j in range(1, n):
            for i in range(j):
                u, v = inv[i], inv[j]
                if (min(u, v), max(u, v)) in eset:
                    bits |= 1 << k
                k += 1
        if best is None or bits < best:
            best = bits
    return (n, best)


def _relabellings(labels: tuple[int, ...], k: int):
    classes = sorted(set(labels))
    for assign in itertools.permutations(range(1, k + 1), len(classes)):
        m = dict(zip(classes, assign))
        yield tuple(m[l] for l in labels)


@lru_cache(maxsize=None)
def reachable_unlabelled(n_max: int, k: int) -> frozenset:
    """Canonical forms of every unlabelled graph constructible with k labels
    and at most n_max vertices."""
    states: dict[tuple, tuple] = {}

    def add(n: int, edge_set: frozenset, labels: tuple[int, ...]) -> bool:
        key = _canon_labelled(n, edge_set, labels)
        if key in states:
            return False
        states[key] = (n, edge_set, labels)
        return True

    add(1, frozenset(), (1,))
    frontier = list(states.values())
    while frontier:
        new_frontier = []
        snapshot = list(states.values())
        for n, edge_set, labels in frontier:
            labset = sorted(set(labels))
            for i in labset:
                for j in labset:
                    if i == j:
                        continue
                    es = set(edge_set)
                    for u in range(n):
                        if labels[u] != i:
                            continue
                        for v in range(n):
                            if labels[v] == j:
                                es.add((min(u, v), max(u, v)))
                    fs = frozenset(es)
                    if add(n, fs, labels):
                        new_frontier.append((n, fs, labels))
                    labs2 = tuple(j if l == i else l for l in labels)
                    if add(n, edge_set, labs2):
                        new_frontier.append((n, edge_set, labs2))
            for n2, edge_set2, labels2 in snapshot:
                if n + n2 > n_max:
                    continue
                shifted = frozenset(
                    (u + n, v + n) for u, v in edge_set2
                )
                es = edge_set | shifted
                for relab in _relabellings(labels2, k):
                    labs = labels + relab
                    if len(set(labs)) <= k and add(n + n2, es, labs):
                        new_frontier.append((n + n2, es, labs))
        frontier = new_frontier
    return frozenset(_canon_unlabelled(Graph(n, sorted(es))) for n, es, _ in states.values())


def oracle_clique_width(g: Graph, k_max: int = 4) -> int:
    """Exact clique-width by the closure; independent of the solver."""
    if g.n == 0:
        return 0
    key = _canon_unlabelled(g)
    for k in range(1, k_max + 1):
        if key in reachable_unlabelled(g.n, k):
            return k
    raise AssertionError(f"clique-width above {k_max} for {g.edges}")
