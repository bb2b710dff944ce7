"""Clique-width boundedness for split graph classes with one forbidden
induced subgraph: catalog, split machinery, exact solver, classification
oracles and exhaustive desk-scale claim verifiers."""

from .catalog import catalog
from .classify import (
    Verdict,
    classify_bipartite,
    classify_chordal,
    classify_split,
    classify_weakly_bip,
    classify_weakly_chordal,
)
from .claims import CLAIMS, ClaimReport, verify_claim
from .cliquewidth import (
    Create,
    Join,
    KExpression,
    Rename,
    UnionOp,
    build_rp1_expression,
    clique_width,
    cw_at_most,
    evaluate,
    parse_expression,
    serialize_expression,
    width,
)
from .graph6 import decode, encode
from .graphs import (
    Graph,
    are_isomorphic,
    bipartite_complementation,
    canonical_code,
    complement,
    disjoint_union,
    independence_number,
    induced_subgraph,
    subgraph_complementation,
)
from .harness import (
    cw_growth_report,
    enumerate_graphs,
    enumerate_split_graphs,
    is_star_forest,
    thm7_reduce,
)
from .modular import find_nontrivial_module, is_module, is_prime, prime_induced_subgraphs
from .split import (
    SplitPartition,
    from_labelled_bipartite,
    is_split,
    key_lemma_extension,
    partition_contains,
    partitions_isomorphic,
    split_partitions,
    to_labelled_bipartite,
)
from .subgraph import (
    LabelledBipartiteGraph,
    black_maximal_labelling,
    contains_induced,
    is_free,
    labelled,
    labelled_contains,
    opposite_labelling,
    weakly_free,
)

__all__ = [name for name in dir() if not name.startswith("_")]
