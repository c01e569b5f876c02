"""Roots of the classical orthogonal polynomials, the inverse covariance
matrices of their freezing-limit Gaussians, and verified root-gap bounds."""

from .errors import (
    ConvergenceError,
    EmptyProblemError,
    FamilyMismatchError,
    InternalConsistencyError,
    MagnitudeError,
    ParameterDomainError,
    RootgapsError,
    SingularConfigurationError,
)
from .families import (
    FamilyKind,
    PolynomialFamily,
    SymTridiagonal,
    evaluate_with_derivative,
    hermite,
    jacobi,
    jacobi_matrix,
    laguerre,
)
from .eigensolve import (
    DenseSymmetric,
    Spectrum,
    dense_eigenvalues,
    trace_power,
    tridiag_eigenvalues,
)
from .roots import (
    GapStatistics,
    RootOrdering,
    RootVector,
    SqrtRootVector,
    compute_roots,
    gap_statistics,
    to_sqrt_coordinates,
)
from .covariance import (
    CoordinateForm,
    DiagOfSquare,
    InverseCovariance,
    diag_of_square,
    hermite_S,
    jacobi_S,
    laguerre_S,
    max_eigenvalue,
    predicted_spectrum,
)
from .bounds import (
    BoundReport,
    SharpnessSummary,
    hermite_diag_bound,
    jacobi_bounds,
    jacobi_comparator,
    laguerre_bounds,
    laguerre_comparators,
    sharpness_summary,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ConvergenceError",
    "CoordinateForm",
    "DenseSymmetric",
    "DiagOfSquare",
    "EmptyProblemError",
    "FamilyKind",
    "FamilyMismatchError",
    "GapStatistics",
    "InternalConsistencyError",
    "InverseCovariance",
    "MagnitudeError",
    "ParameterDomainError",
    "PolynomialFamily",
    "RootOrdering",
    "RootVector",
    "RootgapsError",
    "SharpnessSummary",
    "SingularConfigurationError",
    "Spectrum",
    "SqrtRootVector",
    "SymTridiagonal",
    "compute_roots",
    "dense_eigenvalues",
    "diag_of_square",
    "evaluate_with_derivative",
    "gap_statistics",
    "hermite",
    "hermite_S",
    "hermite_diag_bound",
    "jacobi",
    "jacobi_S",
    "jacobi_bounds",
    "jacobi_comparator",
    "jacobi_matrix",
    "laguerre",
    "laguerre_S",
    "laguerre_bounds",
    "laguerre_comparators",
    "max_eigenvalue",
    "predicted_spectrum",
    "sharpness_summary",
    "to_sqrt_coordinates",
    "trace_power",
    "tridiag_eigenvalues",
]
