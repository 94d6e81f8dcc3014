"""Exact Riordan-array algebra and the restricted Chebyshev-Boubaker polynomials."""

from .exactalg import (
    DEFAULT_ORDER,
    AlgebraError,
    BadConstantTerm,
    BadLowOrderTerms,
    NonUnitConstantTerm,
    NonZeroRemainder,
    NonzeroInnerConstant,
    OutOfOrder,
    ParamPoly,
    Series,
    as_rat,
    catalan,
    poly_arith,
    poly_divexact,
    poly_eval,
    series_arith,
    series_compose,
    series_derivative,
    series_divide,
    series_revert,
    series_sqrt,
)
from .family import (
    CheckReport,
    FamilyContext,
    central,
    central_hankel_report,
    central_plus,
    central_via_gf,
    check_three_term,
    coeff_closed_form,
    coefficient_array,
    generalized_chebyshev_array,
    moment_hankel,
    moment_matrix,
    moments,
    polynomial,
    qpoly_recurrence_check,
    row_sum_sequence,
    rowsum_coeffarray_identities,
    rowsum_hankel,
)
from .fixtures import ReferenceClaim, UnknownClaim, lookup, verify_all
from .hankel import (
    InsufficientTerms,
    JFraction,
    NotAerated,
    SFraction,
    ZeroHankelBlock,
    ZeroPivot,
    aerate,
    chebyshev_u,
    det_fraction_free,
    hankel_from_jfraction,
    hankel_matrix,
    hankel_transform,
    jfraction_extract,
    jfraction_to_gf,
    sfraction_extract,
    sfraction_to_gf,
    unaerate,
)
from .kernels import BACKEND
from .riordan import (
    RiordanPair,
    SeqVec,
    TriMatrix,
    a_sequence,
    check_az_recurrences,
    entry,
    ftra_apply,
    inverse,
    multiply,
    production_matrix,
    row_sums,
    to_matrix,
    z_sequence,
)

__version__ = "0.1.0"
