"""Exact frieze patterns from polygon dissections.

Friezes over Q(√2) and Q(√3) built from 4- and 6-angulations, integer
Conway-Coxeter friezes built from triangulations, the correspondence
between quadrangulations and noncrossing trees, and exhaustive checks of
how the two frieze families coincide.
"""

from .exact import LAMBDA_RADICAND, QuadNum, RadicandMismatchError, lambda_value
from .polygon import (
    CrossingDiagonalError,
    DegenerateDiagonalError,
    Dissection,
    DualTree,
    InvalidDissectionError,
    NotAnEarError,
    VertexRangeError,
    crosses,
    cut_ear,
    dual_tree,
    ears,
    enumerate_p_angulations,
    faces,
    fuss_catalan,
    is_p_angulation,
    quiddity_counts,
    rotate,
)
from .bijection import (
    InvalidTreeError,
    NoncrossingTree,
    NotPAngulationError,
    NotTriangulationError,
    Triangulation,
    associated_triangulation,
    associated_triangulation_p4,
    associated_triangulation_p6,
    color,
    quad_to_tree,
    tree_to_quad,
    triangle_counts,
)
from .frieze import (
    ClosureError,
    Frieze,
    FriezeError,
    IntegralityError,
    InternalAssertionError,
    QuiddityPositivityError,
    cc_frieze,
    from_quiddity,
    lambda_frieze,
    render_ascii,
    render_csv,
    validate,
)
from .verify import (
    CheckResult,
    DeepUniquenessResult,
    EvenScalingResult,
    FirstViolation,
    SweepSummary,
    VerificationReport,
    check_even_scaling,
    check_lemma,
    check_odd_rows,
    deep_uniqueness,
    even_rows_scaled,
    odd_rows_coincide,
    sweep,
    verify_dissection,
)

__version__ = "0.1.0"

__all__ = [
    "LAMBDA_RADICAND",
    "QuadNum",
    "RadicandMismatchError",
    "lambda_value",
    "CrossingDiagonalError",
    "DegenerateDiagonalError",
    "Dissection",
    "DualTree",
    "InvalidDissectionError",
    "NotAnEarError",
    "VertexRangeError",
    "crosses",
    "cut_ear",
    "dual_tree",
    "ears",
    "enumerate_p_angulations",
    "faces",
    "fuss_catalan",
    "is_p_angulation",
    "quiddity_counts",
    "rotate",
    "InvalidTreeError",
    "NoncrossingTree",
    "NotPAngulationError",
    "NotTriangulationError",
    "Triangulation",
    "associated_triangulation",
    "associated_triangulation_p4",
    "associated_triangulation_p6",
    "color",
    "quad_to_tree",
    "tree_to_quad",
    "triangle_counts",
    "ClosureError",
    "Frieze",
    "FriezeError",
    "IntegralityError",
    "InternalAssertionError",
    "QuiddityPositivityError",
    "cc_frieze",
    "from_quiddity",
    "lambda_frieze",
    "render_ascii",
    "render_csv",
    "validate",
    "CheckResult",
    "DeepUniquenessResult",
    "EvenScalingResult",
    "FirstViolation",
    "SweepSummary",
    "VerificationReport",
    "check_even_scaling",
    "check_lemma",
    "check_odd_rows",
    "deep_uniqueness",
    "even_rows_scaled",
    "odd_rows_coincide",
    "sweep",
    "verify_dissection",
]
