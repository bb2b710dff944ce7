"""Registry of exhaustively checkable structural claims.

Each claim sweeps a declared instance family up to ``max_n`` and either
holds or yields the first counterexample in scan order (graphs in
enumeration order, partitions sorted, inner witnesses lexicographic), which
makes reports byte-stable across runs.

Every verifier has a negative-control twin reached with ``mutated=True``:
a deliberate weakening (typically the freeness filter switched off, for the
reduction pipeline its pattern filter, for the bound claims a broken
builder or a tightened bound) that must produce a counterexample, proving
the sweep actually exercises instances.  Negative controls exist for tests
and are not reachable from the command line.

Scope notes, recorded here deliberately:

* CLAIM-F2-NOQQ quantifies over two vertex-disjoint six-vertex subgraphs,
  which need twelve vertices; within n <= 8 the claim holds vacuously.  Its
  negative control therefore relaxes vertex-disjoint to distinct (and drops
  the primality and freeness filters), which exercises the pair detector.
* CLAIM-F3-CLM's pairwise form over vertex-disjoint special darts is also
  out of reach below ten vertices, so the verifier additionally checks the
  two single-dart consequences the pairwise proof actually rests on: every
  independent-side vertex has a non-neighbour in every special dart's
  clique triple, and every clique vertex outside a special dart has a
  neighbour among the dart's independent pair.
* CLAIM-F1-CLM1 is the optional chain claim; it is registered over prime
  pattern-free split graphs, one incomparable pair at a time, with the
  chain condition as part of the hypothesis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from . import graph6
from .catalog import catalog
from .cliquewidth import (
    KExpression,
    build_rp1_expression,
    clique_width,
    evaluate,
    width,
    Create, UnionOp, Join, Rename,
)
from .graphs import (
    Graph,
    are_isomorphic,
    independence_number,
    induced_subgraph_mask,
    _bits,
)
from .harness import enumerate_graphs, enumerate_split_graphs, is_star_forest, thm7_reduce
from .modular import is_prime, prime_induced_subgraphs
from .split import SplitPartition, split_partitions, partitions_isomorphic
from .subgraph import contains_induced, is_free


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    max_n: int
    patterns: tuple[str, ...]
    outcome: str  # "holds" | "counterexample"
    counts: dict
    counterexample: Optional[dict]

    @property
    def holds(self) -> bool:
        return self.outcome == "holds"

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "max_n": self.max_n,
            "patterns": list(self.patterns),
            "outcome": self.outcome,
            "counts": dict(sorted(self.counts.items())),
            "counterexample": self.counterexample,
        }


class UnknownClaimError(ValueError):
    pass


def _cex(g: Graph, p: Optional[SplitPartition] = None, **extra) -> dict:
    out: dict = {"graph6": graph6.encode(g)}
    if p is not None:
        out["partition"] = p.to_json_dict()
    out.update(extra)
    return out


def _split_sweep(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from enumerate_split_graphs(n)


# -- structure finders ---------------------------------------------------------


def special_bulls(g: Graph, kset: frozenset[int], iset: frozenset[int]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(clique triple, independent pair) of every induced bull positioned with
    three vertices on the clique side and two on the independent side."""
    out = []
    kverts = sorted(kset)
    iverts = sorted(iset)
    for triple in combinations(kverts, 3):
        jmask = sum(1 << v for v in triple)
        for x, y in combinations(iverts, 2):
            ax = g._adj[x] & jmask
            ay = g._adj[y] & jmask
            if ax.bit_count() == 1 and ay.bit_count() == 1 and ax != ay:
                out.append((triple, (x, y)))
    return out


def special_darts(g: Graph, kset: frozenset[int], iset: frozenset[int]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Like special_bulls but for the dart pattern: one independent vertex
    with two triple-neighbours, the other with one of those as its only
    triple-neighbour."""
    out = []
    kverts = sorted(kset)
    iverts = sorted(iset)
    for triple in combinations(kverts, 3):
        jmask = sum(1 << v for v in triple)
        for x, y in combinations(iverts, 2):
            ax = g._adj[x] & jmask
            ay = g._adj[y] & jmask
            if ax.bit_count() == 2 and ay.bit_count() == 1 and ay & ax:
                out.append((triple, (x, y)))
            elif ay.bit_count() == 2 and ax.bit_count() == 1 and ax & ay:
                out.append((triple, (y, x)))
    return out


_Q_CODE: Optional[bytes] = None


def positioned_qs(g: Graph, kset: frozenset[int], iset: frozenset[int]) -> list[dict]:
    """Induced six-vertex Q subgraphs with triangle on the clique side.

    Role extraction: i3 is the independent vertex with two triple
    neighbours, i1 the one whose single attachment is outside i3's
    attachments, i2 the remaining one.
    """
    out = []
    kverts = sorted(kset)
    iverts = sorted(iset)
    for triple in combinations(kverts, 3):
        jmask = sum(1 << v for v in triple)
        for itriple in combinations(iverts, 3):
            degs = [(g._adj[x] & jmask).bit_count() for x in itriple]
            if sorted(degs) != [1, 1, 2]:
                continue
            i3 = itriple[degs.index(2)]
            a3 = g._adj[i3] & jmask
            singles = [x for x in itriple if x != i3]
            att = [g._adj[x] & jmask for x in singles]
            # i2 attaches inside i3's pair, i1 outside it
            if att[0] & a3 and not att[1] & a3:
                i2, i1 = singles[0], singles[1]
            elif att[1] & a3 and not att[0] & a3:
                i2, i1 = singles[1], singles[0]
            else:
                continue
            # the two single attachments must differ (Q has three distinct js)
            if (g._adj[i1] & jmask) == (g._adj[i2] & jmask):
                continue
            out.append(
                {"J": triple, "I": tuple(sorted(itriple)),
                 "i1": i1, "i2": i2, "i3": i3,
                 "vertices": frozenset(triple) | frozenset(itriple)}
            )
    return out


# -- individual claims ---------------------------------------------------------


def _broken_builder(g: Graph, p: SplitPartition, r: int) -> KExpression:
    # Negative control: forgets to join new clique vertices to processed ones.
    iverts = sorted(p.I)
    kverts = sorted(p.K)
    ilabel = {v: idx + 1 for idx, v in enumerate(iverts)}
    new_label = len(iverts) + 1
    processed = len(iverts) + 2
    expr: Optional[KExpression] = None
    for v in iverts:
        leaf = Create(ilabel[v])
        expr = leaf if expr is None else UnionOp(expr, leaf)
    for v in kverts:
        leaf = Create(new_label)
        expr = leaf if expr is None else UnionOp(expr, leaf)
        for u in sorted(p.I & set(g.neighbours(v))):
            expr = Join(new_label, ilabel[u], expr)
        expr = Rename(new_label, processed, expr)
    assert expr is not None
    return expr


def _claim_thm5(max_n: int, mutated: bool):
    counts = {"graphs": 0, "solver_checks": 0, "builder_checks": 0}
    for g in _split_sweep(max_n, min_n=1):
        counts["graphs"] += 1
        alpha = independence_number(g)
        cw = clique_width(g)
        counts["solver_checks"] += 1
        bound = alpha + 1 if mutated else alpha + 2
        if cw > bound:
            return counts, _cex(g, alpha=alpha, cw=cw, bound=bound)
        partition = split_partitions(g)[0]
        builder = _broken_builder if mutated else build_rp1_expression
        for r in (alpha + 1, alpha + 2):
            counts["builder_checks"] += 1
            expr = builder(g, partition, r)
            got = evaluate(expr)
            if width(expr) > r + 1 or not are_isomorphic(got.graph, g):
                return counts, _cex(
                    g, partition, r=r,
                    reason="constructed expression invalid",
                )
    return counts, None


def _claim_lem2(max_n: int, mutated: bool):
    counts = {"graphs": 0}
    for n in range(2, max_n + 1):
        pool = enumerate_graphs(n) if n <= 6 else enumerate_split_graphs(n)
        for g in pool:
            counts["graphs"] += 1
            primes = prime_induced_subgraphs(g)
            if mutated:
                primes = [h for h in primes if not are_isomorphic(h, g)]
            best = max((clique_width(h) for h in primes), default=0)
            if clique_width(g) != best:
                return counts, _cex(
                    g, cw=clique_width(g), prime_max=best,
                )
    return counts, None


def _claim_keypart(max_n: int, mutated: bool):
    bound = 0 if mutated else 1
    counts = {"graphs": 0, "pairs": 0}
    for g in _split_sweep(max_n):
        counts["graphs"] += 1
        parts = split_partitions(g)
        for p, q in combinations(parts, 2):
            counts["pairs"] += 1
            d1 = p.I - q.I
            d2 = q.I - p.I
            if len(d1) > bound or len(d2) > bound:
                return counts, _cex(
                    g, p, other=q.to_json_dict(),
                    diff=[sorted(d1), sorted(d2)],
                )
            if len(d1) == 1 and len(d2) == 1 and not partitions_isomorphic(g, p, q):
                return counts, _cex(
                    g, p, other=q.to_json_dict(),
                    reason="one-shift partitions not isomorphic",
                )
    return counts, None


def _free_split_sweep(max_n: int, pattern: Graph, skip: bool):
    for g in _split_sweep(max_n):
        if not skip and contains_induced(g, pattern) is not None:
            continue
        yield g


def _claim_f1_obs1(max_n: int, mutated: bool):
    f1 = catalog("F1")
    counts = {"graphs": 0, "pairs": 0}
    for g in _free_split_sweep(max_n, f1, mutated):
        counts["graphs"] += 1
        for p in split_partitions(g):
            kmask = sum(1 << v for v in p.K)
            for s, t in combinations(sorted(p.I), 2):
                counts["pairs"] += 1
                common_non = kmask & ~g._adj[s] & ~g._adj[t]
                if common_non.bit_count() < 2:
                    continue
                ns, nt = g._adj[s] & kmask, g._adj[t] & kmask
                if ns & ~nt and nt & ~ns:
                    return counts, _cex(g, p, s=s, t=t)
    return counts, None


def _claim_f1_obs2(max_n: int, mutated: bool):
    f1 = catalog("F1")
    counts = {"graphs": 0, "checks": 0}
    for g in _free_split_sweep(max_n, f1, mutated):
        counts["graphs"] += 1
        for p in split_partitions(g):
            bulls = special_bulls(g, p.K, p.I)
            for triple, _pair in bulls:
                jmask = sum(1 << v for v in triple)
                for x in sorted(p.I):
                    counts["checks"] += 1
                    if g._adj[x] & jmask == jmask:
                        return counts, _cex(g, p, bull_triple=list(triple), x=x)
    return counts, None


def _claim_f2_clm(max_n: int, mutated: bool):
    f2 = catalog("F2")
    counts = {"graphs": 0, "pairs": 0}
    for g in _free_split_sweep(max_n, f2, mutated):
        counts["graphs"] += 1
        for p in split_partitions(g):
            kmask = sum(1 << v for v in p.K)
            for s, t in combinations(sorted(p.I), 2):
                counts["pairs"] += 1
                if not kmask & ~g._adj[s] & ~g._adj[t]:
                    continue
                ns, nt = g._adj[s] & kmask, g._adj[t] & kmask
                only_s, only_t = ns & ~nt, nt & ~ns
                if not (only_s and only_t):
                    continue
                if only_s.bit_count() != 1 or only_t.bit_count() != 1:
                    return counts, _cex(g, p, s=s, t=t)
    return counts, None


def _claim_f2_eq1(max_n: int, mutated: bool):
    f2 = catalog("F2")
    counts = {"graphs": 0, "q_embeddings": 0}
    for g in _free_split_sweep(max_n, f2, mutated):
        counts["graphs"] += 1
        for p in split_partitions(g):
            kmask = sum(1 << v for v in p.K)
            for pos in positioned_qs(g, p.K, p.I):
                counts["q_embeddings"] += 1
                cover = (g._adj[pos["i1"]] | g._adj[pos["i3"]]) & kmask
                if cover != kmask:
                    return counts, _cex(
                        g, p, q=sorted(pos["vertices"]),
                        uncovered=_bits(kmask & ~cover),
                    )
    return counts, None


def _claim_f2_noqq(max_n: int, mutated: bool):
    f2 = catalog("F2")
    counts = {"graphs": 0, "q_pairs": 0}
    for g in _split_sweep(max_n):
        if not mutated:
            if not is_prime(g) or contains_induced(g, f2) is not None:
                continue
        counts["graphs"] += 1
        qsets = set()
        for p in split_partitions(g):
            for pos in positioned_qs(g, p.K, p.I):
                qsets.add(pos["vertices"])
        for a, b in combinations(sorted(qsets, key=sorted), 2):
            counts["q_pairs"] += 1
            disjoint = not (a & b)
            if disjoint or (mutated and a != b):
                return counts, _cex(
                    g, first=sorted(a), second=sorted(b),
                )
    return counts, None


def _claim_f3_clm(max_n: int, mutated: bool):
    f3 = catalog("F3")
    counts = {"graphs": 0, "single_checks": 0, "pair_checks": 0}
    for g in _free_split_sweep(max_n, f3, mutated):
        counts["graphs"] += 1
        for p in split_partitions(g):
            darts = special_darts(g, p.K, p.I)
            kverts = sorted(p.K)
            for triple, pair in darts:
                jmask = sum(1 << v for v in triple)
                vset = set(triple) | set(pair)
                imask_pair = (1 << pair[0]) | (1 << pair[1])
                for x in sorted(p.I):
                    counts["single_checks"] += 1
                    if g._adj[x] & jmask == jmask:
                        return counts, _cex(
                            g, p, dart=sorted(vset), x=x,
                            reason="independent vertex complete to dart triple",
                        )
                for y in kverts:
                    if y in vset:
                        continue
                    counts["single_checks"] += 1
                    if not g._adj[y] & imask_pair:
                        return counts, _cex(
                            g, p, dart=sorted(vset), y=y,
                            reason="outside clique vertex misses the dart pair",
                        )
            for (t1, p1), (t2, p2) in combinations(darts, 2):
                v1 = set(t1) | set(p1)
                v2 = set(t2) | set(p2)
                if v1 & v2:
                    continue
                jmask2 = sum(1 << v for v in t2)
                jmask1 = sum(1 << v for v in t1)
                for x in p1 + p2:
                    counts["pair_checks"] += 1
                    target = jmask2 if x in p1 else jmask1
                    got = g._adj[x] & target
                    if got == 0 or got == target:
                        return counts, _cex(
                            g, p, first=sorted(v1), second=sorted(v2), x=x,
                        )
    return counts, None


def _claim_k13_deg(max_n: int, mutated: bool):
    pat = catalog("K1,3+2P1")
    counts = {"graphs": 0, "vertices": 0}
    for g in _free_split_sweep(max_n, pat, mutated):
        counts["graphs"] += 1
        for p in split_partitions(g):
            if len(p.I) < 6:
                continue
            imask = sum(1 << v for v in p.I)
            for v in sorted(p.K):
                counts["vertices"] += 1
                nbrs = (g._adj[v] & imask).bit_count()
                non = len(p.I) - nbrs
                if nbrs > 2 and non > 1:
                    return counts, _cex(g, p, v=v, neighbours=nbrs, non_neighbours=non)
    return counts, None


def _claim_thm7_stars(max_n: int, mutated: bool):
    pat = catalog("K1,3+2P1")
    counts = {"graphs": 0, "reductions": 0}
    for g in _split_sweep(max_n):
        free = is_free(g, [pat])
        if not mutated and not free:
            continue
        counts["graphs"] += 1
        for p in split_partitions(g):
            if len(p.I) < 6:
                continue
            counts["reductions"] += 1
            reduced = _thm7_pipeline_unchecked(g, p) if mutated else thm7_reduce(g, p)
            if not is_star_forest(reduced):
                return counts, _cex(
                    g, p, reduced=graph6.encode(reduced),
                )
    return counts, None


def _thm7_pipeline_unchecked(g: Graph, p: SplitPartition) -> Graph:
    # Same pipeline as thm7_reduce minus the freeness precondition.
    from .graphs import bipartite_complementation, induced_subgraph, subgraph_complementation

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
        g1, new_k, new_i = g, kverts, sorted(p.I)
    imask1 = sum(1 << v for v in new_i)
    many = [v for v in new_k if (g1._adj[v] & imask1).bit_count() > 1]
    g2 = bipartite_complementation(g1, many, new_i)
    return subgraph_complementation(g2, new_k)


def _claim_f1_clm1(max_n: int, mutated: bool):
    f1 = catalog("F1")
    counts = {"graphs": 0, "pairs": 0}
    for g in _split_sweep(max_n):
        if not is_prime(g):
            continue
        if not mutated and contains_induced(g, f1) is not None:
            continue
        counts["graphs"] += 1
        for p in split_partitions(g):
            kmask = sum(1 << v for v in p.K)
            iverts = sorted(p.I)
            nbs = {v: g._adj[v] & kmask for v in iverts}
            for s1 in iverts:
                for si in iverts:
                    if si == s1:
                        continue
                    a, b = nbs[s1], nbs[si]
                    if a & ~b == 0 or b & ~a == 0:
                        continue  # comparable
                    chain = [x for x in iverts if nbs[x] & ~b == 0]
                    ok_chain = all(
                        nbs[x] & ~nbs[y] == 0 or nbs[y] & ~nbs[x] == 0
                        for x, y in combinations(chain, 2)
                    )
                    if not ok_chain:
                        continue
                    counts["pairs"] += 1
                    diff = b & ~a
                    found_z = False
                    for z in list(_bits(kmask)) + [-1]:
                        zone = diff & ~(1 << z) if z >= 0 else diff
                        if all(
                            nbs[x] & zone in (0, zone) for x in chain
                        ):
                            found_z = True
                            break
                    if not found_z:
                        return counts, _cex(g, p, s1=s1, si=si, chain=chain)
    return counts, None


@dataclass(frozen=True)
class _Claim:
    fn: Callable
    patterns: tuple[str, ...]
    max_supported_n: int = 8


CLAIMS: dict[str, _Claim] = {
    "CLAIM-THM5": _Claim(_claim_thm5, ()),
    "CLAIM-LEM2": _Claim(_claim_lem2, (), max_supported_n=7),
    "CLAIM-KEYPART": _Claim(_claim_keypart, ()),
    "CLAIM-F1-OBS1": _Claim(_claim_f1_obs1, ("F1",)),
    "CLAIM-F1-OBS2": _Claim(_claim_f1_obs2, ("F1",)),
    "CLAIM-F2-CLM": _Claim(_claim_f2_clm, ("F2",)),
    "CLAIM-F2-EQ1": _Claim(_claim_f2_eq1, ("F2",)),
    "CLAIM-F2-NOQQ": _Claim(_claim_f2_noqq, ("F2", "Q")),
    "CLAIM-F3-CLM": _Claim(_claim_f3_clm, ("F3",)),
    "CLAIM-K13-DEG": _Claim(_claim_k13_deg, ("K1,3+2P1",)),
    "CLAIM-THM7-STARS": _Claim(_claim_thm7_stars, ("K1,3+2P1",)),
    "CLAIM-F1-CLM1": _Claim(_claim_f1_clm1, ("F1",)),
}


def verify_claim(claim_id: str, max_n: int, mutated: bool = False) -> ClaimReport:
    """Run a registered claim verifier up to max_n and report.

    ``mutated`` selects the negative-control variant and exists for tests.
    """
    spec = CLAIMS.get(claim_id)
    if spec is None:
        raise UnknownClaimError(
            f"unknown claim {claim_id!r}; known: {', '.join(sorted(CLAIMS))}"
        )
    if max_n > spec.max_supported_n:
        raise ValueError(
            f"{claim_id} supports max_n <= {spec.max_supported_n}"
        )
    counts, cex = spec.fn(max_n, mutated)
    return ClaimReport(
        claim=claim_id,
        max_n=max_n,
        patterns=spec.patterns,
        outcome="holds" if cex is None else "counterexample",
        counts=counts,
        counterexample=cex,
    )
