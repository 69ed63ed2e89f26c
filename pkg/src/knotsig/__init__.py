"""Exact abelian concordance invariants from Seifert matrices."""

from .enclosures import arccos_bounds, cos_bounds, pi_bounds
from .family import FamilyParams, NonPositive, params_from_primes, twist_jump_cos, twist_rho, twist_seifert
from .fields import (
    MismatchedField,
    MultiQuadElement,
    QuadReal,
    ZeroInput,
    quad_sign,
    square_class_rank,
    symmetric_signature,
)
from .genus1 import (
    AlexanderTrivial,
    MetabolizerClass,
    MissingAssignment,
    NotAlgebraicallySlice,
    ObstructionReport,
    WrongGenus,
    is_algebraically_slice_g1,
    metabolizer_classes,
    obstruction_report,
    self_linking,
)
from .independence import (
    FieldMismatch,
    LengthMismatch,
    UnitAlgebraic,
    exhaustive_independence,
    galois_degree_check,
    infection_rho_contribution,
    is_real_product,
    obstruction_ledger,
    power_product,
    root_of_unity_check,
    unit_z,
)
from .roots import Abscissa
from .seifert import (
    LaurentPolynomial,
    NonUnimodularSkewPart,
    OddDimension,
    SeifertMatrix,
    alexander,
    arf,
    connected_sum,
    determinant,
    infection_alexander,
    inverse,
    ordinary_signature,
    validate,
)
from .signatures import (
    HermitianForm,
    InternalInconsistency,
    RhoValue,
    SignatureProfile,
    circle_roots,
    hermitian_form,
    jump_angle_enclosures,
    rho,
    signature_at,
    signature_profile,
)

__version__ = "0.1.0"

__all__ = [
    "Abscissa",
    "AlexanderTrivial",
    "FamilyParams",
    "FieldMismatch",
    "HermitianForm",
    "InternalInconsistency",
    "LaurentPolynomial",
    "LengthMismatch",
    "MetabolizerClass",
    "MismatchedField",
    "MissingAssignment",
    "MultiQuadElement",
    "NonPositive",
    "NonUnimodularSkewPart",
    "NotAlgebraicallySlice",
    "ObstructionReport",
    "OddDimension",
    "QuadReal",
    "RhoValue",
    "SeifertMatrix",
    "SignatureProfile",
    "UnitAlgebraic",
    "WrongGenus",
    "ZeroInput",
    "alexander",
    "arccos_bounds",
    "arf",
    "circle_roots",
    "connected_sum",
    "cos_bounds",
    "determinant",
    "exhaustive_independence",
    "galois_degree_check",
    "hermitian_form",
    "infection_alexander",
    "infection_rho_contribution",
    "inverse",
    "is_algebraically_slice_g1",
    "is_real_product",
    "jump_angle_enclosures",
    "metabolizer_classes",
    "obstruction_ledger",
    "obstruction_report",
    "ordinary_signature",
    "params_from_primes",
    "pi_bounds",
    "power_product",
    "quad_sign",
    "rho",
    "root_of_unity_check",
    "self_linking",
    "signature_at",
    "signature_profile",
    "square_class_rank",
    "symmetric_signature",
    "twist_jump_cos",
    "twist_rho",
    "twist_seifert",
    "unit_z",
    "validate",
]
