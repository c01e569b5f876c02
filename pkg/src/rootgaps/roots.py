"""Ordered root vectors with Newton polishing and per-family orderings.

Each family keeps its conventional ordering so that index-based formulas
downstream can be transcribed literally: Hermite and Laguerre roots are
stored descending (``z_1`` largest), Jacobi roots ascending (``z_1``
smallest).  The ordering is tagged on the vector to rule out silent
index flips.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import FamilyMismatchError, InternalConsistencyError
from .families import FamilyKind, PolynomialFamily, _evaluate_scaled, jacobi_matrix
from .eigensolve import _tridiag_eigenvalues_only

_EPS = float(np.finfo(float).eps)


class RootOrdering(Enum):
    HERMITE_DESCENDING = "descending-hermite"
    LAGUERRE_DESCENDING = "descending-laguerre"
    JACOBI_ASCENDING = "ascending-jacobi"


_ORDERING_FOR_KIND = {
    FamilyKind.HERMITE: RootOrdering.HERMITE_DESCENDING,
    FamilyKind.LAGUERRE: RootOrdering.LAGUERRE_DESCENDING,
    FamilyKind.JACOBI: RootOrdering.JACOBI_ASCENDING,
}

# Orthogonality interval per family; roots must stay strictly inside.
_DOMAIN = {
    FamilyKind.HERMITE: (-math.inf, math.inf),
    FamilyKind.LAGUERRE: (0.0, math.inf),
    FamilyKind.JACOBI: (-1.0, 1.0),
}


@dataclass(frozen=True)
class RootVector:
    """Ordered roots of ``P_n`` for one family.

    ``polish_skipped`` lists stored-order indices whose Newton refinement
    was rejected (the raw eigenvalue was kept instead).
    """

    family: PolynomialFamily
    n: int
    roots: np.ndarray
    ordering: RootOrdering
    polish_skipped: tuple[int, ...] = ()

    def __post_init__(self):
        roots = np.asarray(self.roots, dtype=float)
        object.__setattr__(self, "roots", roots)
        if roots.size != self.n:
            raise InternalConsistencyError(f"expected {self.n} roots, got {roots.size}")
        if self.ordering is not _ORDERING_FOR_KIND[self.family.kind]:
            raise FamilyMismatchError(
                f"ordering {self.ordering} does not match family {self.family.kind}"
            )
        diffs = np.diff(roots)
        if self.ordering is RootOrdering.JACOBI_ASCENDING:
            if np.any(diffs <= 0.0):
                raise InternalConsistencyError("Jacobi roots must be strictly ascending")
        elif np.any(diffs >= 0.0):
            raise InternalConsistencyError("roots must be strictly descending")
        lo, hi = _DOMAIN[self.family.kind]
        if np.any(roots <= lo) or np.any(roots >= hi):
            raise InternalConsistencyError(
                f"roots left the orthogonality interval ({lo}, {hi})"
            )
        roots.setflags(write=False)


@dataclass(frozen=True)
class SqrtRootVector:
    """Laguerre roots mapped to the scale ``r_i = sqrt(2 z_i)``, descending."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if np.any(values <= 0.0) or np.any(np.diff(values) >= 0.0):
            raise InternalConsistencyError("sqrt-scale roots must be positive and strictly descending")
        values.setflags(write=False)


class GapStatistics(NamedTuple):
    """``None`` marks an undefined statistic, not a zero or an infinity."""

    min_gap: float | None
    boundary_low: float | None
    boundary_high: float | None


_POLISH_STEPS = 3


def compute_roots(family: PolynomialFamily, n: int) -> RootVector:
    """Roots of ``P_n`` via the recurrence matrix plus Newton polishing.

    Each eigenvalue gets up to three Newton steps; a step that would leave
    the midpoint bracket around its eigenvalue (or the orthogonality
    interval) rejects the polish for that root and keeps the eigenvalue.
    """
    eigs = _tridiag_eigenvalues_only(jacobi_matrix(family, n))
    lo_dom, hi_dom = _DOMAIN[family.kind]
    polished = np.empty(n)
    skipped: list[int] = []
    for i in range(n):
        lo = 0.5 * (eigs[i - 1] + eigs[i]) if i > 0 else lo_dom
        hi = 0.5 * (eigs[i] + eigs[i + 1]) if i < n - 1 else hi_dom
        x = float(eigs[i])
        ok = True
        for _ in range(_POLISH_STEPS):
            p, dp, _ = _evaluate_scaled(family, n, x)
            if p == 0.0:
                break
            if dp == 0.0:
                ok = False
                break
            step = p / dp
            candidate = x - step
            if not (lo < candidate < hi):
                ok = False
                break
            if candidate == x:
                break
            x = candidate
            if abs(step) <= 2.0 * _EPS * abs(x):
                break
        if ok:
            polished[i] = x
        else:
            polished[i] = eigs[i]
            skipped.append(i)
    ordering = _ORDERING_FOR_KIND[family.kind]
    if ordering is RootOrdering.JACOBI_ASCENDING:
        roots = polished
        flags = tuple(skipped)
    else:
        roots = polished[::-1].copy()
        flags = tuple(sorted(n - 1 - i for i in skipped))
    return RootVector(family, n, roots, ordering, flags)


def to_sqrt_coordinates(rv: RootVector) -> SqrtRootVector:
    """Map a Laguerre root vector to ``r_i = sqrt(2 z_i)``, order preserved."""
    if rv.family.kind is not FamilyKind.LAGUERRE:
        raise FamilyMismatchError("sqrt coordinates are defined for Laguerre roots only")
    return SqrtRootVector(np.sqrt(2.0 * rv.roots))


def gap_statistics(rv: RootVector) -> GapStatistics:
    """Minimal consecutive gap and distances to the orthogonality boundary.

    ``min_gap`` is ``None`` for ``n = 1``; boundary distances are ``None``
    on sides where the orthogonality interval is unbounded.
    """
    roots = rv.roots
    if rv.n == 1:
        min_gap = None
    elif rv.ordering is RootOrdering.JACOBI_ASCENDING:
        min_gap = float(np.min(roots[1:] - roots[:-1]))
    else:
        min_gap = float(np.min(roots[:-1] - roots[1:]))
    if rv.family.kind is FamilyKind.HERMITE:
        return GapStatistics(min_gap, None, None)
    if rv.family.kind is FamilyKind.LAGUERRE:
        return GapStatistics(min_gap, float(roots[-1]), None)
    return GapStatistics(min_gap, float(1.0 + roots[0]), float(1.0 - roots[-1]))
