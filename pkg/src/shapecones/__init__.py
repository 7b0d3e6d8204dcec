"""Exact construction, decomposition and verification of shape cones.

The cones are the nonnegative, monotone, convex and concave vectors in R^n
and their intersections.  All arithmetic is exact (``fractions.Fraction``).
"""
from ._kernels import BACKEND
from .decompose import (
    ConvexCanonicalForm,
    Decomposition,
    MembershipCertificate,
    Violation,
    convex_canonical_by_support,
    decompose,
    decompose_concave_greedy,
    decompose_convex_canonical,
    decompose_decreasing_convex_greedy,
    decompose_increasing_convex_greedy,
    decompose_via_matrix,
    membership,
)
from .errors import (
    ConeError,
    DimensionMismatch,
    IndexOutOfRange,
    MalformedEntry,
    NonPositiveEntry,
    NotInCone,
    ScaleLimitExceeded,
    SingularMatrix,
    StructuralViolation,
    ZeroDenominator,
)
from .exactnum import RMatrix, Rational, invert, parse_rational, solve, solve_left
from .generators import (
    ConeKind,
    GeneratorSet,
    generators,
    standard_concave,
    standard_decreasing_concave,
    standard_decreasing_convex,
    standard_increasing_concave,
    standard_increasing_convex,
    step_vector,
)
from .matrices import (
    StructureReport,
    matrix_M,
    matrix_M_inverse,
    matrix_N,
    matrix_N_inverse,
    matrix_Z,
    matrix_Z_inverse,
    structure_report,
)
from .oracle import (
    ExtremeRayReport,
    FeasibilityResult,
    brute_force_membership,
    conic_feasibility,
    sample_in_cone,
    verify_extreme_rays,
)
from .shapes import ShapeReport, classify, forward_differences, predicate, second_differences

__version__ = "0.1.0"
