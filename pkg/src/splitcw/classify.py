"""Boundedness oracles for one-forbidden-subgraph classes.

Each oracle takes the forbidden graph h and answers whether the hereditary
class it defines (within the stated host class) has bounded clique-width,
returning a Verdict that carries every matching clause in the published
bullet order, with the first one primary, plus containment witnesses.

The split-graph oracle implements both equivalent bullet lists: the
seven-bullet list and the compressed three-bullet form; the verdict's clause
list carries the main-form clauses first and the compressed-form clauses
after them (prefixed ``alt:``).  Outcomes Open are reserved for the excluded
inputs: F1/F2 for the chordal oracle, F4/F5 and their complements for the
split oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .catalog import catalog as _catalog
from .graphs import Graph, are_isomorphic, complement, disjoint_union
from .subgraph import (
    LabelledBipartiteGraph,
    black_maximal_labelling,
    contains_induced,
    labelled,
    labelled_contains,
    opposite_labelling,
)

BOUNDED = "bounded"
UNBOUNDED = "unbounded"
OPEN = "open"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    clauses: tuple[str, ...] = ()
    witness: Optional[dict] = None

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "clauses": list(self.clauses),
            "witness": self.witness,
        }


def _is_edgeless(h: Graph) -> bool:
    return h.n >= 1 and h.m == 0


def _is_complete(h: Graph) -> bool:
    return h.n >= 1 and h.m == h.n * (h.n - 1) // 2


@lru_cache(maxsize=None)
def _named(name: str) -> Graph:
    return _catalog(name)


@lru_cache(maxsize=None)
def _named_co(name: str) -> Graph:
    return complement(_catalog(name))


def _containment_clauses(h: Graph, targets: list[tuple[str, Graph]],
                         with_complement: bool) -> tuple[list[str], Optional[dict]]:
    """Clauses for h (and optionally its complement) embedding into targets."""
    clauses: list[str] = []
    witness: Optional[dict] = None
    hbar = complement(h) if with_complement else None
    for name, target in targets:
        emb = contains_induced(target, h)
        if emb is not None:
            clauses.append(name)
            if witness is None:
                witness = {
                    "type": "containment",
                    "pattern": name,
                    "complemented": False,
                    "embedding": list(emb),
                }
        if hbar is not None:
            emb2 = contains_induced(target, hbar)
            if emb2 is not None:
                clauses.append(f"{name}(complement)")
                if witness is None:
                    witness = {
                        "type": "containment",
                        "pattern": name,
                        "complemented": True,
                        "embedding": list(emb2),
                    }
    return clauses, witness


def classify_weakly_chordal(h: Graph) -> Verdict:
    """Bounded iff h embeds in P4."""
    emb = contains_induced(_named("P4"), h)
    if emb is not None:
        return Verdict(
            BOUNDED,
            ("P4",),
            {"type": "containment", "pattern": "P4", "complemented": False,
             "embedding": list(emb)},
        )
    return Verdict(UNBOUNDED)


_CHORDAL_BULLETS = (
    ("bull", lambda: _named("bull")),
    ("P1+P4", lambda: _named("P1+P4")),
    ("co(P1+P4)", lambda: _named_co("P1+P4")),
    ("co(K1,3+2P1)", lambda: _named_co("K1,3+2P1")),
    ("P1+co(P1+P3)", lambda: disjoint_union(_named("P1"), _named_co("P1+P3"))),
    ("P1+co(2P1+P2)", lambda: disjoint_union(_named("P1"), _named_co("2P1+P2"))),
    ("co(S1,1,2)", lambda: _named_co("S1,1,2")),
)


def classify_chordal(h: Graph) -> Verdict:
    """Eight-bullet oracle; Open exactly for F1 and F2."""
    for name in ("F1", "F2"):
        if are_isomorphic(h, _named(name)):
            return Verdict(OPEN, (), {"type": "open-case", "graph": name})
    clauses: list[str] = []
    witness: Optional[dict] = None
    if _is_complete(h):
        clauses.append("K_r")
        witness = {"type": "isomorphic-K_r", "r": h.n}
    for name, make in _CHORDAL_BULLETS:
        emb = contains_induced(make(), h)
        if emb is not None:
            clauses.append(name)
            if witness is None:
                witness = {"type": "containment", "pattern": name,
                           "complemented": False, "embedding": list(emb)}
    if clauses:
        return Verdict(BOUNDED, tuple(clauses), witness)
    return Verdict(UNBOUNDED)


_BIPARTITE_BULLETS = ("K1,3+3P1", "K1,3+P2", "P1+S1,1,3", "S1,2,3")


def classify_bipartite(h: Graph) -> Verdict:
    """Five-bullet oracle; never Open."""
    clauses: list[str] = []
    witness: Optional[dict] = None
    if _is_edgeless(h):
        clauses.append("sP1")
        witness = {"type": "isomorphic-sP1", "s": h.n}
    for name in _BIPARTITE_BULLETS:
        emb = contains_induced(_named(name), h)
        if emb is not None:
            clauses.append(name)
            if witness is None:
                witness = {"type": "containment", "pattern": name,
                           "complemented": False, "embedding": list(emb)}
    if clauses:
        return Verdict(BOUNDED, tuple(clauses), witness)
    return Verdict(UNBOUNDED)


_SPLIT_MAIN = ("bull+P1", "F1", "F2", "F3", "Q", "K1,3+2P1")
_SPLIT_ALT = ("F4", "F5")


def _rp1_clauses(h: Graph, hbar: Graph) -> tuple[list[str], Optional[dict]]:
    clauses: list[str] = []
    witness: Optional[dict] = None
    if _is_edgeless(h):
        clauses.append("rP1")
        witness = {"type": "isomorphic-rP1", "r": h.n, "complemented": False}
    if _is_edgeless(hbar):
        clauses.append("rP1(complement)")
        if witness is None:
            witness = {"type": "isomorphic-rP1", "r": h.n, "complemented": True}
    return clauses, witness


def classify_split(h: Graph) -> Verdict:
    """Open for F4/F5 and complements; else the seven-bullet list (primary)
    together with the compressed three-bullet list, which must agree."""
    hbar = complement(h)
    for name in ("F4", "F5"):
        target = _named(name)
        if are_isomorphic(h, target) or are_isomorphic(hbar, target):
            return Verdict(
                OPEN, (),
                {"type": "open-case", "graph": name,
                 "complemented": not are_isomorphic(h, target)},
            )
    clauses, witness = _rp1_clauses(h, hbar)
    for name in _SPLIT_MAIN:
        more, wit = _containment_clauses(
            h, [(name, _named(name))], with_complement=True
        )
        clauses.extend(more)
        if witness is None:
            witness = wit
    alt_clauses, alt_witness = _rp1_clauses(h, hbar)
    alt_clauses = [f"alt:{c}" for c in alt_clauses]
    for name in _SPLIT_ALT:
        more, wit = _containment_clauses(
            h, [(name, _named(name))], with_complement=True
        )
        alt_clauses.extend(f"alt:{c}" for c in more)
        if witness is None and wit is not None:
            witness = wit
    main_bounded = bool(clauses)
    alt_bounded = bool(alt_clauses)
    if main_bounded != alt_bounded:
        raise AssertionError(
            "seven-bullet and three-bullet forms disagree; "
            f"h edges {h.edges}"
        )
    if main_bounded:
        return Verdict(BOUNDED, tuple(clauses + alt_clauses), witness)
    return Verdict(UNBOUNDED)


@lru_cache(maxsize=None)
def _weakly_bullet_graphs() -> dict[str, LabelledBipartiteGraph]:
    return {
        "P1+P5": black_maximal_labelling(_named("P1+P5")),
        "P2+P4": black_maximal_labelling(_named("P2+P4")),
        "P6": black_maximal_labelling(_named("P6")),
    }


def classify_weakly_bip(h: LabelledBipartiteGraph) -> Verdict:
    """Oracle over labelled bipartite forbidden graphs.

    The first two bullets apply to the labelling or its reversal; the last
    two apply to the labelling as given only, exactly as published.
    """
    hbar = opposite_labelling(h)
    bullets = _weakly_bullet_graphs()
    clauses: list[str] = []
    if h.graph.n >= 1 and h.graph.m == 0:
        if len(h.white) == 0:
            clauses.append("sP1^b")
        if len(h.black) == 0:
            clauses.append("sP1^b(reversed)")
    if labelled_contains(bullets["P1+P5"], h):
        clauses.append("(P1+P5)^b")
    if labelled_contains(bullets["P1+P5"], hbar):
        clauses.append("(P1+P5)^b(reversed)")
    if labelled_contains(bullets["P2+P4"], h):
        clauses.append("(P2+P4)^b")
    if labelled_contains(bullets["P6"], h):
        clauses.append("(P6)^b")
    if clauses:
        return Verdict(BOUNDED, tuple(clauses))
    return Verdict(UNBOUNDED)
