"""Classical orthogonal polynomial families and their recurrence machinery.

Covers the three classical weights in their standard normalization:

* Hermite, orthogonal w.r.t. ``exp(-x^2)`` on the real line,
* generalized Laguerre ``L_N^(nu-1)`` with ``nu > 0``, orthogonal w.r.t.
  ``exp(-x) * x^(nu-1)`` on ``(0, inf)``,
* Jacobi ``P_N^(alpha,beta)`` with ``alpha, beta > -1``, orthogonal w.r.t.
  ``(1-x)^alpha * (1+x)^beta`` on ``(-1, 1)``.

The module provides the symmetric tridiagonal recurrence (Jacobi) matrix
whose eigenvalues are the polynomial roots, and pointwise evaluation of
``P_N`` together with its derivative via the differentiated three-term
recurrence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import EmptyProblemError, MagnitudeError, ParameterDomainError


class FamilyKind(Enum):
    HERMITE = "hermite"
    LAGUERRE = "laguerre"
    JACOBI = "jacobi"


@dataclass(frozen=True)
class PolynomialFamily:
    """Tagged parameter record selecting one classical family.

    ``nu`` is the Laguerre weight exponent (the polynomial is
    ``L_N^(nu-1)``); ``alpha`` and ``beta`` are the Jacobi exponents.
    Parameters not belonging to the selected family must stay ``None``.
    """

    kind: FamilyKind
    nu: float | None = None
    alpha: float | None = None
    beta: float | None = None

    def __post_init__(self):
        if self.kind is FamilyKind.HERMITE:
            if self.nu is not None or self.alpha is not None or self.beta is not None:
                raise ParameterDomainError("Hermite takes no parameters")
        elif self.kind is FamilyKind.LAGUERRE:
            if self.nu is None or self.alpha is not None or self.beta is not None:
                raise ParameterDomainError("Laguerre takes exactly the parameter nu")
            if not (float(self.nu) > 0.0) or not math.isfinite(self.nu):
                raise ParameterDomainError(f"Laguerre requires nu > 0, got {self.nu}")
        elif self.kind is FamilyKind.JACOBI:
            if self.alpha is None or self.beta is None or self.nu is not None:
                raise ParameterDomainError("Jacobi takes exactly the parameters alpha, beta")
            for name, value in (("alpha", self.alpha), ("beta", self.beta)):
                if not (float(value) > -1.0) or not math.isfinite(value):
                    raise ParameterDomainError(f"Jacobi requires {name} > -1, got {value}")
        else:
            raise ParameterDomainError(f"unknown family kind {self.kind!r}")

    def label(self) -> str:
        """Short deterministic text form, e.g. ``laguerre(nu=2.0)``."""
        if self.kind is FamilyKind.HERMITE:
            return "hermite"
        if self.kind is FamilyKind.LAGUERRE:
            return f"laguerre(nu={self.nu!r})"
        return f"jacobi(alpha={self.alpha!r} beta={self.beta!r})"


def hermite() -> PolynomialFamily:
    return PolynomialFamily(FamilyKind.HERMITE)


def laguerre(nu: float) -> PolynomialFamily:
    return PolynomialFamily(FamilyKind.LAGUERRE, nu=float(nu))


def jacobi(alpha: float, beta: float) -> PolynomialFamily:
    return PolynomialFamily(FamilyKind.JACOBI, alpha=float(alpha), beta=float(beta))


@dataclass(frozen=True)
class SymTridiagonal:
    """Symmetric tridiagonal matrix stored as diagonal and off-diagonal.

    Off-diagonal entries must be strictly positive, which guarantees
    simple eigenvalues.
    """

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        offdiag = np.asarray(self.offdiag, dtype=float)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)
        if diag.ndim != 1 or offdiag.ndim != 1:
            raise ParameterDomainError("diag and offdiag must be one-dimensional")
        if diag.size == 0:
            raise EmptyProblemError("empty tridiagonal matrix")
        if offdiag.size != diag.size - 1:
            raise ParameterDomainError(
                f"length mismatch: {diag.size} diagonal vs {offdiag.size} off-diagonal entries"
            )
        if not np.all(np.isfinite(diag)) or not np.all(np.isfinite(offdiag)):
            raise ParameterDomainError("non-finite tridiagonal entries")
        if offdiag.size and not np.all(offdiag > 0.0):
            raise ParameterDomainError("off-diagonal entries must be strictly positive")
        diag.setflags(write=False)
        offdiag.setflags(write=False)

    @property
    def n(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        full = np.diag(self.diag)
        idx = np.arange(self.n - 1)
        full[idx, idx + 1] = self.offdiag
        full[idx + 1, idx] = self.offdiag
        return full


def jacobi_matrix(family: PolynomialFamily, n: int) -> SymTridiagonal:
    """Recurrence matrix whose eigenvalues are the roots of ``P_n``.

    Uses the monic three-term recurrence coefficients of the selected
    family (the Golub-Welsch construction, without the weight vector).
    """
    _check_order(n)
    if family.kind is FamilyKind.HERMITE:
        diag = np.zeros(n)
        k = np.arange(1.0, n)
        offdiag = np.sqrt(k / 2.0)
    elif family.kind is FamilyKind.LAGUERRE:
        nu = float(family.nu)
        k = np.arange(float(n))
        diag = 2.0 * k + nu
        k = np.arange(1.0, n)
        offdiag = np.sqrt(k * (k + nu - 1.0))
    else:
        alpha, beta = float(family.alpha), float(family.beta)
        ab = alpha + beta
        diag = np.empty(n)
        diag[0] = (beta - alpha) / (ab + 2.0)
        k = np.arange(1.0, n)
        diag[1:] = (beta - alpha) * (beta + alpha) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0))
        b = np.empty(n - 1)
        if n > 1:
            # k = 1 has its own closed form; the generic one is 0/0 at ab = -1
            b[0] = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) ** 2 * (ab + 3.0))
            k = np.arange(2.0, n)
            s = 2.0 * k + ab
            b[1:] = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s * s - 1.0))
        offdiag = np.sqrt(b)
    return SymTridiagonal(diag, offdiag)


# Rescaling threshold for the forward recurrences.  Only sign and the
# Newton ratio value/derivative survive a rescale, which is all the root
# polish consumes.
_RESCALE_LIMIT = 2.0**500
_RESCALE_EXP = 500


def _evaluate_scaled(family: PolynomialFamily, n: int, x: float) -> tuple[float, float, int]:
    """Evaluate ``(P_n, P_n')`` at ``x``, returning ``(p, dp, exp2)``.

    The true values are ``p * 2**exp2`` and ``dp * 2**exp2``; the pair is
    kept inside the representable range by power-of-two rescaling.
    """
    _check_order(n)
    x = float(x)
    if not math.isfinite(x):
        raise ParameterDomainError(f"evaluation point must be finite, got {x}")
    exp2 = 0
    if family.kind is FamilyKind.HERMITE:
        pm1, dm1 = 1.0, 0.0
        p, dp = 2.0 * x, 2.0
        for k in range(1, n):
            p, dp, pm1, dm1 = (
                2.0 * x * p - 2.0 * k * pm1,
                2.0 * x * dp + 2.0 * p - 2.0 * k * dm1,
                p,
                dp,
            )
            if abs(p) > _RESCALE_LIMIT or abs(dp) > _RESCALE_LIMIT:
                p, dp, pm1, dm1 = (v * 2.0**-_RESCALE_EXP for v in (p, dp, pm1, dm1))
                exp2 += _RESCALE_EXP
    elif family.kind is FamilyKind.LAGUERRE:
        a = float(family.nu) - 1.0
        pm1, dm1 = 1.0, 0.0
        p, dp = 1.0 + a - x, -1.0
        for k in range(1, n):
            c = 2.0 * k + 1.0 + a - x
            p, dp, pm1, dm1 = (
                (c * p - (k + a) * pm1) / (k + 1.0),
                (c * dp - p - (k + a) * dm1) / (k + 1.0),
                p,
                dp,
            )
            if abs(p) > _RESCALE_LIMIT or abs(dp) > _RESCALE_LIMIT:
                p, dp, pm1, dm1 = (v * 2.0**-_RESCALE_EXP for v in (p, dp, pm1, dm1))
                exp2 += _RESCALE_EXP
    else:
        alpha, beta = float(family.alpha), float(family.beta)
        ab = alpha + beta
        pm1, dm1 = 1.0, 0.0
        p = 0.5 * (ab + 2.0) * x + 0.5 * (alpha - beta)
        dp = 0.5 * (ab + 2.0)
        for k in range(2, n + 1):
            c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0)
            c2 = (2.0 * k + ab - 1.0) * (2.0 * k + ab) * (2.0 * k + ab - 2.0)
            c3 = (2.0 * k + ab - 1.0) * (alpha - beta) * (alpha + beta)
            c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab)
            p, dp, pm1, dm1 = (
                ((c2 * x + c3) * p - c4 * pm1) / c1,
                (c2 * p + (c2 * x + c3) * dp - c4 * dm1) / c1,
                p,
                dp,
            )
            if abs(p) > _RESCALE_LIMIT or abs(dp) > _RESCALE_LIMIT:
                p, dp, pm1, dm1 = (v * 2.0**-_RESCALE_EXP for v in (p, dp, pm1, dm1))
                exp2 += _RESCALE_EXP
    return p, dp, exp2


def evaluate_with_derivative(family: PolynomialFamily, n: int, x: float) -> tuple[float, float]:
    """Return ``(P_n(x), P_n'(x))`` in the standard normalization.

    Raises :class:`MagnitudeError` when the true values exceed the double
    range; the error carries an approximate base-2 exponent so callers can
    tell how far out of range the request was.
    """
    p, dp, exp2 = _evaluate_scaled(family, n, x)
    if exp2 == 0:
        return p, dp
    try:
        value = math.ldexp(p, exp2)
        derivative = math.ldexp(dp, exp2)
    except OverflowError:
        value = derivative = math.inf
    if not (math.isfinite(value) and math.isfinite(derivative)):
        hint = exp2 + math.log2(max(abs(p), abs(dp), 1.0))
        raise MagnitudeError(
            f"|P_{n}| near 2**{hint:.0f} at x={x!r} exceeds the floating-point range",
            scale_hint=hint,
        )
    return value, derivative


def _check_order(n: int) -> None:
    if not isinstance(n, (int, np.integer)):
        raise ParameterDomainError(f"polynomial order must be an integer, got {n!r}")
    if n == 0:
        raise EmptyProblemError("polynomial order N = 0 gives an empty problem")
    if n < 0:
        raise ParameterDomainError(f"polynomial order must be positive, got {n}")
