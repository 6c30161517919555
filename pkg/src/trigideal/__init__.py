"""Exact relation ideals of cosines and sines at algebraic points.

The pipeline: write the input angles over a ℚ-linearly independent
angle basis with integer coordinates, expand each cos/sin through the
angle-addition formulas, eliminate the basis variables from the
resulting substitution ideal with a Groebner basis, and certify every
surviving generator numerically with interval arithmetic.
"""

from .algebraic import (
    AlgebraicNumber,
    AngleBasis,
    alg_combination,
    alg_parse,
    angle_basis,
    find_dependence,
    is_zero,
)
from .errors import (
    CertificationFailure,
    ConstantPolynomial,
    ExponentOverflow,
    NonConvergence,
    NotIsolating,
    ParseError,
    PrecisionExhausted,
    RegistryMismatch,
    ResourceLimit,
    TrigIdealError,
    WrongOrder,
)
from .exprparse import parse_expression
from .groebner import GroebnerBasis, buchberger, eliminate, member, s_polynomial
from .numerics import ComplexBox, Precision, trig_enclosure
from .polyring import (
    MonomialOrder,
    MPoly,
    VariableRegistry,
    format_poly,
    leading_term,
    monic,
    multidivide,
    normal_form,
    order_compare,
    primitive_part,
)
from .trig import (
    CertificationRecord,
    ExpansionPair,
    RelationIdeal,
    canonical_form,
    certify_numeric,
    exclusion_box,
    expand_multiple,
    expand_point,
    relation_ideal,
    verify_relation,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber",
    "AngleBasis",
    "CertificationFailure",
    "CertificationRecord",
    "ComplexBox",
    "ConstantPolynomial",
    "ExpansionPair",
    "ExponentOverflow",
    "GroebnerBasis",
    "MonomialOrder",
    "MPoly",
    "NonConvergence",
    "NotIsolating",
    "ParseError",
    "Precision",
    "PrecisionExhausted",
    "RegistryMismatch",
    "RelationIdeal",
    "ResourceLimit",
    "TrigIdealError",
    "VariableRegistry",
    "WrongOrder",
    "alg_combination",
    "alg_parse",
    "angle_basis",
    "buchberger",
    "canonical_form",
    "certify_numeric",
    "eliminate",
    "exclusion_box",
    "expand_multiple",
    "expand_point",
    "find_dependence",
    "format_poly",
    "is_zero",
    "leading_term",
    "member",
    "monic",
    "multidivide",
    "normal_form",
    "order_compare",
    "parse_expression",
    "primitive_part",
    "relation_ideal",
    "s_polynomial",
    "trig_enclosure",
    "verify_relation",
]
