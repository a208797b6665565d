"""Riordan arrays (1/(1 - t^(d+1)), t p(t)), their periodic columns and circulant orbits."""

from .errors import (
    CompositionOrderError,
    DiagonalizationError,
    DomainError,
    IdentityViolation,
    ImproperArrayError,
    OEISUnavailable,
    ParseError,
    ReversionDomainError,
    SingularSeriesError,
    TheoremViolation,
    TruncationError,
    VerificationError,
)
from .series import ParamPoly, Poly, Series, format_poly, geometric, parse_poly, parse_rational
from .riordan import (
    PeriodReport,
    RiordanArray,
    build,
    column_gf,
    head_sum,
    head_sums,
    periodic_block,
    periodic_start,
    verify_theorem1,
)
from .circulant import (
    CirculantMatrix,
    EigenData,
    circulant_of,
    closed_form_orbit,
    eigenvalues,
    fourier_matrix,
    matrix_order,
    orbit,
    orbit_period,
    shift,
    verify_diagonalization,
    verify_theorem2,
)
from .dynamics import (
    AbbreviatedArray,
    OrbitClassification,
    OrbitKind,
    abbreviated_array,
    classify_linear,
    classify_quadratic,
    curve_constant_linear,
    helix_points,
    rotated_orbit_linear,
    rotated_orbit_quadratic,
    verify_prop5,
)
from .azseq import (
    AZPair,
    az_sequences,
    catalan,
    csum_expansion,
    theorem6_check,
    verify_catalan_forms,
    verify_rogers,
)
from .oeis import BFile, MatchReport, OEISClient, check_sequence, parse_bfile
from .reports import Report

__version__ = "0.1.0"
