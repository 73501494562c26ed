"""Pair-coloring identities: canonical forms, closure classes, tree
colorings and the finite condition hierarchy."""

from idkit._core import (
    BoundExceeded,
    Coloring,
    amalgamate,
    Identity,
    InvalidInput,
    VIdentity,
    build_im,
    cl_step,
    duplicate,
    end_duplicate,
    eh_amalgam,
    enumerate_identities,
    equivalent,
    find_embeddings,
    generate_idm,
    generate_ide,
    generate_p,
    identity_of,
    meet_coloring,
    membership,
    one_point_extensions,
    realized_identities,
    realizes,
    restrict,
    special_sequences,
    tree_realizes,
    v_identity_of,
    v_realizes,
    validate_condition,
    verify_lemma_qq,
    verify_s2_step,
    verify_t2_kernel,
    verify_t2_pair_claim,
    verify_tree_idm,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "Coloring",
    "amalgamate",
    "Identity",
    "InvalidInput",
    "VIdentity",
    "build_im",
    "cl_step",
    "duplicate",
    "end_duplicate",
    "eh_amalgam",
    "enumerate_identities",
    "equivalent",
    "find_embeddings",
    "generate_idm",
    "generate_ide",
    "generate_p",
    "identity_of",
    "meet_coloring",
    "membership",
    "one_point_extensions",
    "realized_identities",
    "realizes",
    "restrict",
    "special_sequences",
    "tree_realizes",
    "v_identity_of",
    "v_realizes",
    "validate_condition",
    "verify_lemma_qq",
    "verify_s2_step",
    "verify_t2_kernel",
    "verify_t2_pair_claim",
    "verify_tree_idm",
]
