"""Monotone operator calculus in finite dimension.

Subspace graphs of R^n x R^n, the symmetric pairing and its annihilator,
Fitzpatrick-function evaluation, enlargement membership, quadratic convex
calculus, and a decision procedure classifying affine maximal monotone
operators as non-enlargeable (with a self-cancelling pre-dual) or
enlargeable (with an explicit witness point and parameter).
"""

from .arithmetic import EXACT, FLOAT, ExtReal, FloatMode, MINUS_INF, PLUS_INF
from .config import default_mode, mode_from_name
from .enlargeability import (
    Enlargeable,
    NonEnlargeable,
    Sign,
    Verdict,
    annihilator_monotone,
    construct_from_self_cancelling,
    decide_non_enlargeable,
    disambiguate_sign,
    fitz_zero_on_annihilator,
    max_self_cancelling_part,
)
from .errors import (
    DimensionMismatchError,
    DimensionTooLargeError,
    DocumentError,
    DualNotMonotoneError,
    MaxmonoError,
    ModeMismatchError,
    NotMaximalMonotoneError,
    NotMaximalSelfCancellingError,
    NotMonotoneError,
    NotSelfCancellingError,
)
from .fitzpatrick import (
    GramData,
    QuadFunc,
    conjugate_quad,
    conjugate_quadfunc,
    effective_domain_fitz,
    fenchel_young,
    fenchel_young_functional,
    fitz_finite,
    fitz_functional,
    fitz_linear,
    in_enlargement_def,
    in_enlargement_fitz,
    in_eps_subdifferential,
    represents_check,
    subdifferential,
)
from .monotone_ops import (
    AffineRelation,
    FiniteOperator,
    LinearRelation,
    OperatorRep,
    adjoint,
    affine,
    from_matrix,
    is_maximal_monotone_linear,
    is_maximal_self_cancelling,
    is_monotone,
    is_self_cancelling,
    is_skew,
    linear_part,
    negate,
    negate_subspace,
    operator_contains,
    translate,
    translation_of,
)
from .relation_core import (
    PairedPoint,
    Subspace,
    canonicalize,
    combination,
    contains,
    duality,
    full_space,
    gram_matrix,
    intersect,
    member,
    pairing,
    point,
    span_of_points,
    subspace_equal,
    subspace_sum,
    vdash,
    zero_point,
    zero_subspace,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
