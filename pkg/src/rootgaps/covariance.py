"""Inverse covariance matrices of the freezing-limit Gaussians.

For each family the matrix ``S_N`` is built entrywise from the roots of
``P_N`` and carries a closed-form spectrum:

* Hermite:   ``s_ii = 1 + sum_{l!=i} (z_i - z_l)^-2``,
  ``s_ij = -(z_i - z_j)^-2``; eigenvalues ``1, 2, ..., N``.
* Laguerre:  ``s_ii = 1 + nu/z_i + 2 sum_{l!=i} (z_i + z_l)/(z_i - z_l)^2``,
  ``s_ij = -4 sqrt(z_i z_j)/(z_i - z_j)^2``; eigenvalues ``2, 4, ..., 2N``.
  An equivalent form on the scale ``r_i = sqrt(2 z_i)`` is available and
  must agree entrywise.
* Jacobi:    ``s_ii = 4 sum_{l!=i} (1 - z_i^2)/(z_i - z_l)^2
  + 2(alpha+1)(1+z_i)/(1-z_i) + 2(beta+1)(1-z_i)/(1+z_i)``,
  ``s_ij = -4 sqrt((1-z_i^2)(1-z_j^2))/(z_i - z_j)^2``; eigenvalues
  ``2j(2N + alpha + beta + 1 - j)``.

The Hermite and Laguerre ``N = 1`` matrices are the natural trivial
extensions ``[[1]]`` and ``[[2]]`` with spectra ``{1}`` and ``{2}``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    FamilyMismatchError,
    InternalConsistencyError,
    ParameterDomainError,
    SingularConfigurationError,
)
from .eigensolve import DenseSymmetric
from .families import FamilyKind, PolynomialFamily
from .roots import RootVector

_TINY = float(np.finfo(float).tiny)


class CoordinateForm(Enum):
    Z = "z"
    SQRT_R = "sqrt-r"


@dataclass(frozen=True)
class InverseCovariance:
    """``S_N`` with its predicted spectrum and the roots it was built from."""

    family: PolynomialFamily
    n: int
    matrix: DenseSymmetric
    predicted: np.ndarray
    coordinate: CoordinateForm
    roots: RootVector

    def __post_init__(self):
        predicted = np.asarray(self.predicted, dtype=float)
        object.__setattr__(self, "predicted", predicted)
        if self.matrix.n != self.n or predicted.size != self.n:
            raise InternalConsistencyError("matrix, spectrum, and N sizes disagree")
        if np.any(predicted <= 0.0) or np.any(np.diff(predicted) < 0.0):
            raise InternalConsistencyError("predicted spectrum must be positive and ascending")
        predicted.setflags(write=False)


@dataclass(frozen=True)
class DiagOfSquare:
    """Diagonal of the squared (shifted) matrix.

    ``values`` holds the closed-form route; ``residual`` is the worst
    relative disagreement against the matrix-multiplication route.
    """

    values: np.ndarray
    residual: float


def _pair_differences(z: np.ndarray) -> np.ndarray:
    """Pairwise ``z_i - z_l`` with the diagonal set to ``inf``.

    The infinite diagonal turns every self-interaction term into an exact
    zero, so row sums over ``l != i`` need no masking.
    """
    diff = z[:, None] - z[None, :]
    if np.any((diff == 0.0) & ~np.eye(z.size, dtype=bool)):
        raise SingularConfigurationError("coincident roots")
    np.fill_diagonal(diff, math.inf)
    return diff


def hermite_interaction_sums(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Row sums ``sum_{l!=i} (z_i-z_l)^-2`` and ``sum_{l!=i} (z_i-z_l)^-4``."""
    diff = _pair_differences(np.asarray(z, dtype=float))
    inv2 = 1.0 / (diff * diff)
    return inv2.sum(axis=1), (inv2 * inv2).sum(axis=1)


def laguerre_interaction_sums(z: np.ndarray, nu: float) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal of ``S_N - I`` and row sums of its squared off-diagonal.

    Returns ``(lin, cross)`` with
    ``lin_i = nu/z_i + 2 sum_{l!=i} (z_i+z_l)/(z_i-z_l)^2`` and
    ``cross_i = 16 sum_{l!=i} z_i z_l / (z_i-z_l)^4``.
    """
    z = np.asarray(z, dtype=float)
    diff = _pair_differences(z)
    inv2 = 1.0 / (diff * diff)
    lin = nu / z + 2.0 * ((z[:, None] + z[None, :]) * inv2).sum(axis=1)
    cross = 16.0 * (np.outer(z, z) * inv2 * inv2).sum(axis=1)
    return lin, cross


def jacobi_interaction_sums(
    z: np.ndarray, alpha: float, beta: float
) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal of the Jacobi ``S_N`` and row sums of its squared off-diagonal."""
    z = np.asarray(z, dtype=float)
    diff = _pair_differences(z)
    w = 1.0 - z * z
    inv2 = 1.0 / (diff * diff)
    lin = (
        4.0 * (w[:, None] * inv2).sum(axis=1)
        + 2.0 * (alpha + 1.0) * (1.0 + z) / (1.0 - z)
        + 2.0 * (beta + 1.0) * (1.0 - z) / (1.0 + z)
    )
    cross = 16.0 * (np.outer(w, w) * inv2 * inv2).sum(axis=1)
    return lin, cross


def _require_kind(z: RootVector, kind: FamilyKind) -> None:
    if z.family.kind is not kind:
        raise FamilyMismatchError(f"expected a {kind.value} root vector, got {z.family.kind.value}")


def hermite_S(z: RootVector) -> InverseCovariance:
    """Hermite inverse covariance with predicted spectrum ``1..N``."""
    _require_kind(z, FamilyKind.HERMITE)
    n = z.n
    diff = _pair_differences(z.roots)
    inv2 = 1.0 / (diff * diff)
    matrix = -inv2
    np.fill_diagonal(matrix, 1.0 + inv2.sum(axis=1))
    return InverseCovariance(
        z.family,
        n,
        DenseSymmetric(matrix),
        np.arange(1.0, n + 1.0),
        CoordinateForm.Z,
        z,
    )


def laguerre_S(z: RootVector, coordinate: CoordinateForm = CoordinateForm.Z) -> InverseCovariance:
    """Laguerre inverse covariance with predicted spectrum ``2, 4, ..., 2N``.

    ``coordinate`` selects the entry formulas: ``Z`` writes them in the
    roots themselves, ``SQRT_R`` in ``r_i = sqrt(2 z_i)``.  The two forms
    are algebraically identical entry by entry.
    """
    _require_kind(z, FamilyKind.LAGUERRE)
    if not isinstance(coordinate, CoordinateForm):
        raise ParameterDomainError(f"unknown coordinate form {coordinate!r}")
    n = z.n
    nu = float(z.family.nu)
    roots = z.roots
    if np.any(roots <= 0.0):
        raise SingularConfigurationError("Laguerre roots must be positive")
    if coordinate is CoordinateForm.Z:
        diff = _pair_differences(roots)
        inv2 = 1.0 / (diff * diff)
        matrix = -4.0 * np.sqrt(np.outer(roots, roots)) * inv2
        np.fill_diagonal(
            matrix, 1.0 + nu / roots + 2.0 * ((roots[:, None] + roots[None, :]) * inv2).sum(axis=1)
        )
    else:
        r = np.sqrt(2.0 * roots)
        dminus = _pair_differences(r)
        inv_minus = 1.0 / (dminus * dminus)
        dplus = r[:, None] + r[None, :]
        inv_plus = 1.0 / (dplus * dplus)
        matrix = 2.0 * (inv_plus - inv_minus)
        pair = inv_minus + inv_plus
        np.fill_diagonal(pair, 0.0)
        np.fill_diagonal(matrix, 1.0 + 2.0 * nu / (r * r) + 2.0 * pair.sum(axis=1))
    return InverseCovariance(
        z.family,
        n,
        DenseSymmetric(matrix),
        2.0 * np.arange(1.0, n + 1.0),
        coordinate,
        z,
    )


def jacobi_S(z: RootVector) -> InverseCovariance:
    """Jacobi inverse covariance with spectrum ``2j(2N+alpha+beta+1-j)``."""
    _require_kind(z, FamilyKind.JACOBI)
    n = z.n
    alpha, beta = float(z.family.alpha), float(z.family.beta)
    roots = z.roots
    if np.any(np.abs(roots) >= 1.0):
        raise SingularConfigurationError("Jacobi roots must lie strictly inside (-1, 1)")
    diff = _pair_differences(roots)
    inv2 = 1.0 / (diff * diff)
    w = 1.0 - roots * roots
    matrix = -4.0 * np.sqrt(np.outer(w, w)) * inv2
    np.fill_diagonal(
        matrix,
        4.0 * (w[:, None] * inv2).sum(axis=1)
        + 2.0 * (alpha + 1.0) * (1.0 + roots) / (1.0 - roots)
        + 2.0 * (beta + 1.0) * (1.0 - roots) / (1.0 + roots),
    )
    return InverseCovariance(
        z.family,
        n,
        DenseSymmetric(matrix),
        predicted_spectrum(z.family, n),
        CoordinateForm.Z,
        z,
    )


def predicted_spectrum(family: PolynomialFamily, n: int) -> np.ndarray:
    """Closed-form spectrum of ``S_N``, ascending."""
    if n < 1:
        raise ParameterDomainError(f"N must be positive, got {n}")
    if family.kind is FamilyKind.HERMITE:
        return np.arange(1.0, n + 1.0)
    if family.kind is FamilyKind.LAGUERRE:
        return 2.0 * np.arange(1.0, n + 1.0)
    j = np.arange(1.0, n + 1.0)
    lam = 2.0 * j * (2.0 * n + family.alpha + family.beta + 1.0 - j)
    return np.sort(lam)


def max_eigenvalue(alpha: float, beta: float, n: int) -> float:
    """Spectral radius ``M = max_j 2j(2N+alpha+beta+1-j)`` by direct scan.

    Coincides with ``2N(N+alpha+beta+1)`` whenever ``alpha+beta+1 >= 0``
    and never exceeds ``2(N+(alpha+beta+1)/2)^2``.
    """
    if not (alpha > -1.0 and beta > -1.0):
        raise ParameterDomainError("max_eigenvalue requires alpha, beta > -1")
    if n < 1:
        raise ParameterDomainError(f"N must be positive, got {n}")
    j = np.arange(1.0, n + 1.0)
    return float(np.max(2.0 * j * (2.0 * n + alpha + beta + 1.0 - j)))


def shifted_matrix(s: InverseCovariance) -> np.ndarray:
    """``S - I`` for Hermite and Laguerre, ``S`` itself for Jacobi.

    This is the shift under which the diagonal-of-square quantities are
    stated for each family.
    """
    if s.family.kind is FamilyKind.JACOBI:
        return s.matrix.entries.copy()
    return s.matrix.entries - np.eye(s.n)


def _closed_form_diag_square(s: InverseCovariance) -> np.ndarray:
    roots = s.roots.roots
    if s.family.kind is FamilyKind.HERMITE:
        inv2, inv4 = hermite_interaction_sums(roots)
        return inv2 * inv2 + inv4
    if s.family.kind is FamilyKind.LAGUERRE:
        lin, cross = laguerre_interaction_sums(roots, float(s.family.nu))
        return lin * lin + cross
    lin, cross = jacobi_interaction_sums(roots, float(s.family.alpha), float(s.family.beta))
    return lin * lin + cross


def diag_of_square(s: InverseCovariance) -> DiagOfSquare:
    """Diagonal of the squared shifted matrix, validated two ways.

    The closed-form route (sums over root differences) and the matrix
    route (explicit symmetric square) must agree to relative ``1e-10``;
    disagreement signals a transcription bug and raises.
    """
    shifted = shifted_matrix(s)
    matrix_route = (shifted * shifted).sum(axis=1)
    closed_route = _closed_form_diag_square(s)
    scale = np.maximum(np.maximum(np.abs(matrix_route), np.abs(closed_route)), _TINY)
    residual = float(np.max(np.abs(matrix_route - closed_route) / scale))
    if residual > 1e-10:
        raise InternalConsistencyError(
            f"diagonal-of-square routes disagree by relative {residual:.3e}"
        )
    return DiagOfSquare(closed_route, residual)
