"""Finite BCK-algebras: validation, exact commuting degrees, constructions,
and enumeration of isomorphism classes at small orders."""

from .bckfile import ParseError, emit_bck, emit_hasse_dot, parse_bck
from .classify import (
    UniqueMinimumReport,
    canonical_form,
    degree_census,
    enumerate_algebras,
    find_isomorphism,
    find_maximal_subalgebra,
    is_isomorphic,
    relabel,
    subalgebra,
    verify_unique_minimum,
)
from .construct import (
    ConstructionExpr,
    ExprParseError,
    FamilyEntry,
    FamilyLevel,
    SynthesisResult,
    b_star,
    cd_numerators,
    cd_set,
    extend_top,
    family,
    m_chain,
    parse_expr,
    predict_extend_degree,
    predict_union2_degree,
    synthesize,
    trace_family_index,
    triangular,
    union,
)
from .core import (
    PI,
    TC,
    TWO,
    AxiomViolation,
    BckAlgebra,
    CayleyTable,
    CommutingReport,
    FormatError,
    find_violation,
    standard_algebras,
    validate,
)

__all__ = [
    "AxiomViolation",
    "BckAlgebra",
    "CayleyTable",
    "CommutingReport",
    "ConstructionExpr",
    "ExprParseError",
    "FamilyEntry",
    "FamilyLevel",
    "FormatError",
    "ParseError",
    "PI",
    "SynthesisResult",
    "TC",
    "TWO",
    "UniqueMinimumReport",
    "b_star",
    "canonical_form",
    "cd_numerators",
    "cd_set",
    "degree_census",
    "emit_bck",
    "emit_hasse_dot",
    "enumerate_algebras",
    "extend_top",
    "family",
    "find_isomorphism",
    "find_maximal_subalgebra",
    "find_violation",
    "is_isomorphic",
    "m_chain",
    "parse_bck",
    "parse_expr",
    "predict_extend_degree",
    "predict_union2_degree",
    "relabel",
    "standard_algebras",
    "subalgebra",
    "synthesize",
    "trace_family_index",
    "triangular",
    "union",
    "validate",
    "verify_unique_minimum",
]
