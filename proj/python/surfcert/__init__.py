"""Local certificates for the Euler genus of a graph."""

from ._surfcert import (
    BudgetExceeded,
    Certificates,
    EmbeddingScheme,
    FormatError,
    Graph,
    GraphError,
    PreconditionError,
    ProverError,
    degeneracy,
    face_counts,
    fixture,
    fixture_names,
    fuzz,
    heawood_bound,
    is_embeddable,
    meter,
    min_genus,
    pack,
    prove,
    prove_tree,
    relabel,
    rules,
    unpack,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "Certificates",
    "EmbeddingScheme",
    "FormatError",
    "Graph",
    "GraphError",
    "PreconditionError",
    "ProverError",
    "degeneracy",
    "face_counts",
    "fixture",
    "fixture_names",
    "fuzz",
    "heawood_bound",
    "is_embeddable",
    "meter",
    "min_genus",
    "pack",
    "prove",
    "prove_tree",
    "relabel",
    "rules",
    "unpack",
    "verify",
]
