"""Constant solutions of binary and higher braid equations.

The package catalogs parametric solution families, verifies the braid
equations they are declared to satisfy via Kronecker-lifted operator
products, checks polyadic algebraic laws (closure, querelements, polyadic
identities, partial unitarity), and analyzes braiding gates for unitarity
and entangling power.
"""

from .braid import (
    BraidArity,
    BraidGroupReport,
    BraidReport,
    DimensionOverflowError,
    braid_group_check,
    braid_group_generators,
    braid_group_report,
    far_commutativity_tuples,
    lift,
    nary_braid_report,
    partial_ternary_reports,
    partial_ternary_residuals,
    q_conjugate,
    ternary_chain_values,
)
from .catalog import (
    ConstraintViolationError,
    Family,
    FamilyMeta,
    MetaChecks,
    UnknownFamilyError,
    UnknownVariantError,
    build,
    conjugation_sides,
    declared_equation_passes,
    family_arity,
    family_ids,
    family_meta,
    get_family,
    is_kron_product,
    known_conjugator,
    manifest_records,
    pauli_sigma,
    sample_params,
    verify_conjugation,
    verify_meta,
)
from .gates import (
    BlochParams,
    GateParams,
    LocusRelation,
    QubitState,
    bloch_state,
    build_gate,
    circle_unitarity_solutions,
    closed_form_concurrence,
    concurrence2,
    concurrence3,
    gate_ids,
    hyperdet3,
    minkowski_gate,
    nonentangling_locus,
    product_state,
    qubit_state,
    transformed_concurrence,
)
from .matrices import (
    EigenClaim,
    char_poly,
    chain_product,
    close,
    conj_transpose,
    eigencheck,
    frobenius,
    kron,
    numeric_rank,
    penrose_check,
    support,
)
from .polyadic import (
    IdentityFamily,
    PartialIdentityPattern,
    ShapeClass,
    class_support,
    classify,
    closure_check,
    is_member,
    law_check,
    law_ids,
    partial_identity_count,
    partial_inner_product,
    partial_unitarity,
    polyadic_identity_check,
    querelement,
    random_member,
)
from .search import (
    CapExceededError,
    SearchResult,
    SearchSpec,
    pattern_search,
    permutation_search,
)

__version__ = "0.1.0"

__all__ = [
    "BlochParams",
    "BraidArity",
    "BraidGroupReport",
    "BraidReport",
    "CapExceededError",
    "ConstraintViolationError",
    "DimensionOverflowError",
    "EigenClaim",
    "Family",
    "FamilyMeta",
    "GateParams",
    "IdentityFamily",
    "LocusRelation",
    "MetaChecks",
    "PartialIdentityPattern",
    "QubitState",
    "SearchResult",
    "SearchSpec",
    "ShapeClass",
    "UnknownFamilyError",
    "UnknownVariantError",
    "bloch_state",
    "braid_group_check",
    "braid_group_generators",
    "braid_group_report",
    "build",
    "build_gate",
    "chain_product",
    "char_poly",
    "circle_unitarity_solutions",
    "class_support",
    "classify",
    "close",
    "closed_form_concurrence",
    "closure_check",
    "concurrence2",
    "concurrence3",
    "conj_transpose",
    "conjugation_sides",
    "declared_equation_passes",
    "eigencheck",
    "family_arity",
    "family_ids",
    "family_meta",
    "far_commutativity_tuples",
    "frobenius",
    "gate_ids",
    "get_family",
    "hyperdet3",
    "is_kron_product",
    "is_member",
    "known_conjugator",
    "kron",
    "law_check",
    "law_ids",
    "lift",
    "manifest_records",
    "minkowski_gate",
    "nary_braid_report",
    "nonentangling_locus",
    "numeric_rank",
    "partial_identity_count",
    "partial_inner_product",
    "partial_ternary_reports",
    "partial_ternary_residuals",
    "partial_unitarity",
    "pattern_search",
    "pauli_sigma",
    "penrose_check",
    "permutation_search",
    "polyadic_identity_check",
    "product_state",
    "q_conjugate",
    "querelement",
    "qubit_state",
    "random_member",
    "sample_params",
    "support",
    "ternary_chain_values",
    "transformed_concurrence",
    "verify_conjugation",
    "verify_meta",
]
