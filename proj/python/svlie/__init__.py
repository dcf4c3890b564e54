"""Exact computations on the Schrodinger-Virasoro Lie algebra."""

from ._core import (
    AxiomReport,
    Element,
    SpecialDerivation,
    SvError,
    Tensor2,
    Tensor3,
    act,
    bracket,
    certify,
    check_axioms,
    check_cybe,
    check_mybe,
    classify,
    coboundary_identity_check,
    cyclic,
    degree_decompose,
    highest_component,
    invariant_tensors,
    is_central,
    is_skew,
    search_cybe,
    skew_action_space,
    skew_part,
    twist,
    yang_baxter_c,
)

__all__ = [
    "AxiomReport",
    "Element",
    "SpecialDerivation",
    "SvError",
    "Tensor2",
    "Tensor3",
    "act",
    "bracket",
    "certify",
    "check_axioms",
    "check_cybe",
    "check_mybe",
    "classify",
    "coboundary_identity_check",
    "cyclic",
    "degree_decompose",
    "highest_component",
    "invariant_tensors",
    "is_central",
    "is_skew",
    "search_cybe",
    "skew_action_space",
    "skew_part",
    "twist",
    "yang_baxter_c",
]
