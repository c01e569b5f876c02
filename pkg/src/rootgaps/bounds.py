"""Root-gap and boundary-distance bounds, evaluated against computed roots.

Every report is normalized to the direction ``observed_value >=
bound_value``: for a lower bound the formula lands in ``bound_value`` and
the measured quantity in ``observed_value``; for an upper bound (the
diagonal-of-square caps) the measured left-hand side is the smaller
quantity and therefore lands in ``bound_value`` while the cap is
``observed_value``.  ``slack = observed - bound`` is then nonnegative
exactly when the inequality holds, and ``sharpness = observed / bound``
equals 1 at an equality case.

Bound identifiers, with the family ordering conventions (Hermite and
Laguerre descending, Jacobi ascending; indices are 1-based):

Hermite (derived):
  hermite-diag-sq     (sum_l (z_i-z_l)^-2)^2 + sum_l (z_i-z_l)^-4 <= (N-1)^3/N
  hermite-inv4-sum    sum_l (z_i-z_l)^-4 <= (N-1)^3/(2N)
  hermite-inv2-sum    sum_l (z_i-z_l)^-2 <= (N-1)^(3/2)/sqrt(N)
  hermite-gap         z_i - z_{i+1} >= (2N)^(1/4)/(N-1)^(3/4)
Hermite (comparator):
  hermite-gap-comparator          z_i - z_{i+1} >= 2/sqrt(N)

Laguerre (derived):
  laguerre-diag-sq    (nu/z_i + 2 sum_l (z_i+z_l)/(z_i-z_l)^2)^2
                        + 16 sum_l z_i z_l/(z_i-z_l)^4 <= (2N-1)^2
  laguerre-min-root   z_N >= nu/(2N-1)
  laguerre-gap-strong z_i - z_{i+1} >= sqrt(2(1+sqrt(1+8 nu^2)))/(2N-1)
  laguerre-gap-weak   z_i - z_{i+1} >= 2*2^(1/4) sqrt(nu)/(2N-1)
  laguerre-gap-bessel-strong  (nu >= 1)
      z_i - z_{i+1} >= sqrt(2)/(2N-1) *
        sqrt(2 + sqrt(2) sqrt(2 + (2N-1)^2 (nu^2-1)^2/(N+nu/2)^2))
  laguerre-gap-bessel-weak    (nu >= 1)
      z_i - z_{i+1} >= 2^(3/4) sqrt(nu^2-1)/sqrt((2N-1)(N+nu/2))
  laguerre-sqrt-gap   sqrt(z_i) - sqrt(z_{i+1}) >= 1/sqrt(2N-1)
Laguerre (comparators, from the literature):
  laguerre-min-root-bessel    z_N >= (nu^2-1)/(4(N+nu/2))
  laguerre-gap-comparator-1   z_i - z_{i+1} >= (nu-1)/sqrt((N+nu-1)N)
  laguerre-gap-comparator-2   z_i - z_{i+1} >= 2 sqrt(2) nu/sqrt((N+nu)N)
  laguerre-gap-comparator-3   z_i - z_{i+1} >= pi sqrt(2)/sqrt(2 nu N + nu + 2N^2)

Jacobi (derived; M is the spectral radius from ``max_eigenvalue``):
  jacobi-diag-sq      (s_ii closed form)^2 + 16 sum_l (1-z_i^2)(1-z_l^2)/(z_i-z_l)^4 <= M^2
  jacobi-upper-edge-strong  1 - z_N >= 8(alpha+1)/(M + 4(alpha+1) + sqrt(M^2 - 16(alpha+1)(beta+1)))
  jacobi-upper-edge-weak    1 - z_N >= 4(alpha+1)/(M + 2(alpha+1))
  jacobi-lower-edge-strong  1 + z_1 >= 8(beta+1)/(M + 4(beta+1) + sqrt(M^2 - 16(alpha+1)(beta+1)))
  jacobi-lower-edge-weak    1 + z_1 >= 4(beta+1)/(M + 2(beta+1))
  jacobi-boundary-product   1 - z_i^2 >= 2 min(alpha+1, beta+1)/M
  jacobi-boundary-product-symmetric  (alpha = beta)  1 - z_i^2 >= 8(alpha+1)/(M + 4(alpha+1))
  jacobi-gap          z_{i+1} - z_i >= 2^(7/4) sqrt(min(alpha+1, beta+1))/M
  jacobi-gap-symmetric (alpha = beta)
      z_{i+1} - z_i >= 2^(11/4) sqrt(alpha+1)/sqrt(M(M+4(alpha+1)))
Jacobi (comparator, asymptotic leading term, alpha, beta > -1/2):
  jacobi-upper-edge-asymptotic  1 - z_N >= alpha(alpha+2)/(2(N+(alpha+beta+1)/2)^2)

Comparator reports never gate anything; a nonpositive comparator bound is
marked ``vacuous`` and a formula outside its parameter domain is marked
``not-applicable``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .covariance import (
    hermite_interaction_sums,
    jacobi_interaction_sums,
    laguerre_interaction_sums,
    max_eigenvalue,
)
from .errors import FamilyMismatchError, ParameterDomainError
from .families import FamilyKind, PolynomialFamily
from .roots import RootVector

_HOLDS_RTOL = 1e-10


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality at one sweep point.

    ``index`` is the 1-based root or gap index, ``None`` for bounds that
    involve a single extreme root.  ``note`` is empty for a regular
    report, ``"not-applicable"`` when the formula is undefined at the
    given parameters, and ``"vacuous"`` when a comparator bound carries no
    information (nonpositive).
    """

    bound_id: str
    family: PolynomialFamily
    n: int
    index: int | None
    bound_value: float
    observed_value: float
    slack: float
    holds: bool
    sharpness: float
    comparator: bool = False
    note: str = ""


def _report(
    bound_id: str,
    family: PolynomialFamily,
    n: int,
    index: int | None,
    bound_value: float,
    observed_value: float,
    comparator: bool = False,
    note: str = "",
) -> BoundReport:
    bound_value = float(bound_value)
    observed_value = float(observed_value)
    slack = observed_value - bound_value
    if math.isnan(bound_value) or math.isnan(observed_value):
        holds = False
    else:
        holds = slack >= -_HOLDS_RTOL * max(abs(bound_value), 1.0)
    sharpness = observed_value / bound_value if bound_value > 0.0 else math.nan
    if comparator and not note and bound_value <= 0.0:
        note = "vacuous"
    return BoundReport(
        bound_id, family, n, index, bound_value, observed_value, slack, holds, sharpness,
        comparator, note,
    )


def _per_index(
    bound_id: str,
    family: PolynomialFamily,
    n: int,
    bounds: Iterable[float],
    observed: Iterable[float],
    comparator: bool = False,
    note: str = "",
) -> list[BoundReport]:
    return [
        _report(bound_id, family, n, i, b, o, comparator, note)
        for i, (b, o) in enumerate(zip(bounds, observed), start=1)
    ]


def _constant(value: float, count: int) -> list[float]:
    return [value] * count


def hermite_diag_bound(z: RootVector) -> list[BoundReport]:
    """Hermite diagonal-of-square caps, their corollaries, and the
    literature gap comparator; one report per applicable index."""
    if z.family.kind is not FamilyKind.HERMITE:
        raise FamilyMismatchError("hermite_diag_bound needs a Hermite root vector")
    n = z.n
    if n < 2:
        raise ParameterDomainError("Hermite bounds need N >= 2")
    fam = z.family
    inv2, inv4 = hermite_interaction_sums(z.roots)
    diag_sq = inv2 * inv2 + inv4
    gaps = z.roots[:-1] - z.roots[1:]
    reports = []
    reports += _per_index("hermite-diag-sq", fam, n, diag_sq, _constant((n - 1) ** 3 / n, n))
    reports += _per_index("hermite-inv4-sum", fam, n, inv4, _constant((n - 1) ** 3 / (2 * n), n))
    reports += _per_index(
        "hermite-inv2-sum", fam, n, inv2, _constant((n - 1) ** 1.5 / math.sqrt(n), n)
    )
    gap_floor = (2.0 * n) ** 0.25 / (n - 1) ** 0.75
    reports += _per_index("hermite-gap", fam, n, _constant(gap_floor, n - 1), gaps)
    reports += _per_index(
        "hermite-gap-comparator", fam, n, _constant(2.0 / math.sqrt(n), n - 1), gaps,
        comparator=True,
    )
    return reports


def laguerre_bounds(z: RootVector) -> list[BoundReport]:
    """Derived Laguerre bounds: diagonal caps, smallest-root floor, and the
    three gap floors (plain, Bessel-assisted for nu >= 1, sqrt scale)."""
    if z.family.kind is not FamilyKind.LAGUERRE:
        raise FamilyMismatchError("laguerre_bounds needs a Laguerre root vector")
    n = z.n
    fam = z.family
    nu = float(fam.nu)
    lin, cross = laguerre_interaction_sums(z.roots, nu)
    diag_sq = lin * lin + cross
    two_n1 = 2.0 * n - 1.0
    reports = _per_index("laguerre-diag-sq", fam, n, diag_sq, _constant(two_n1**2, n))
    reports.append(
        _report("laguerre-min-root", fam, n, None, nu / two_n1, float(z.roots[-1]))
    )
    if n >= 2:
        gaps = z.roots[:-1] - z.roots[1:]
        strong = math.sqrt(2.0 * (1.0 + math.sqrt(1.0 + 8.0 * nu * nu))) / two_n1
        weak = 2.0 * 2.0**0.25 * math.sqrt(nu) / two_n1
        reports += _per_index("laguerre-gap-strong", fam, n, _constant(strong, n - 1), gaps)
        reports += _per_index("laguerre-gap-weak", fam, n, _constant(weak, n - 1), gaps)
        if nu >= 1.0:
            q = two_n1**2 * (nu * nu - 1.0) ** 2 / (n + nu / 2.0) ** 2
            bessel_strong = (
                math.sqrt(2.0) / two_n1
                * math.sqrt(2.0 + math.sqrt(2.0) * math.sqrt(2.0 + q))
            )
            bessel_weak = (
                2.0**0.75 * math.sqrt(nu * nu - 1.0) / math.sqrt(two_n1 * (n + nu / 2.0))
            )
            note = ""
        else:
            # sqrt(nu^2 - 1) is imaginary below nu = 1; the source floor is
            # vacuous there, so the report carries no values
            bessel_strong = bessel_weak = math.nan
            note = "not-applicable"
        reports += _per_index(
            "laguerre-gap-bessel-strong", fam, n, _constant(bessel_strong, n - 1), gaps, note=note
        )
        reports += _per_index(
            "laguerre-gap-bessel-weak", fam, n, _constant(bessel_weak, n - 1), gaps, note=note
        )
        sqrt_gaps = np.sqrt(z.roots[:-1]) - np.sqrt(z.roots[1:])
        reports += _per_index(
            "laguerre-sqrt-gap", fam, n, _constant(1.0 / math.sqrt(two_n1), n - 1), sqrt_gaps
        )
    return reports


def laguerre_comparators(z: RootVector) -> list[BoundReport]:
    """Literature comparator bounds for Laguerre roots (informational)."""
    if z.family.kind is not FamilyKind.LAGUERRE:
        raise FamilyMismatchError("laguerre_comparators needs a Laguerre root vector")
    n = z.n
    fam = z.family
    nu = float(fam.nu)
    reports = [
        _report(
            "laguerre-min-root-bessel", fam, n, None,
            (nu * nu - 1.0) / (4.0 * (n + nu / 2.0)), float(z.roots[-1]), comparator=True,
        )
    ]
    if n >= 2:
        gaps = z.roots[:-1] - z.roots[1:]
        cmp1 = (nu - 1.0) / math.sqrt((n + nu - 1.0) * n)
        cmp2 = 2.0 * math.sqrt(2.0) * nu / math.sqrt((n + nu) * n)
        cmp3 = math.pi * math.sqrt(2.0) / math.sqrt(2.0 * nu * n + nu + 2.0 * n * n)
        for bound_id, value in (
            ("laguerre-gap-comparator-1", cmp1),
            ("laguerre-gap-comparator-2", cmp2),
            ("laguerre-gap-comparator-3", cmp3),
        ):
            reports += _per_index(bound_id, fam, n, _constant(value, n - 1), gaps, comparator=True)
    return reports


def jacobi_bounds(z: RootVector) -> list[BoundReport]:
    """Derived Jacobi bounds: diagonal caps, the two boundary-distance
    floors, the boundary-product floors, and the gap floors."""
    if z.family.kind is not FamilyKind.JACOBI:
        raise FamilyMismatchError("jacobi_bounds needs a Jacobi root vector")
    n = z.n
    fam = z.family
    alpha, beta = float(fam.alpha), float(fam.beta)
    big_m = max_eigenvalue(alpha, beta, n)
    lin, cross = jacobi_interaction_sums(z.roots, alpha, beta)
    diag_sq = lin * lin + cross
    reports = _per_index("jacobi-diag-sq", fam, n, diag_sq, _constant(big_m**2, n))
    disc = math.sqrt(big_m**2 - 16.0 * (alpha + 1.0) * (beta + 1.0))
    upper = 1.0 - float(z.roots[-1])
    lower = 1.0 + float(z.roots[0])
    reports.append(
        _report(
            "jacobi-upper-edge-strong", fam, n, None,
            8.0 * (alpha + 1.0) / (big_m + 4.0 * (alpha + 1.0) + disc), upper,
        )
    )
    reports.append(
        _report(
            "jacobi-upper-edge-weak", fam, n, None,
            4.0 * (alpha + 1.0) / (big_m + 2.0 * (alpha + 1.0)), upper,
        )
    )
    reports.append(
        _report(
            "jacobi-lower-edge-strong", fam, n, None,
            8.0 * (beta + 1.0) / (big_m + 4.0 * (beta + 1.0) + disc), lower,
        )
    )
    reports.append(
        _report(
            "jacobi-lower-edge-weak", fam, n, None,
            4.0 * (beta + 1.0) / (big_m + 2.0 * (beta + 1.0)), lower,
        )
    )
    width = 1.0 - z.roots * z.roots
    floor = 2.0 * min(alpha + 1.0, beta + 1.0) / big_m
    reports += _per_index("jacobi-boundary-product", fam, n, _constant(floor, n), width)
    if alpha == beta:
        floor_sym = 8.0 * (alpha + 1.0) / (big_m + 4.0 * (alpha + 1.0))
        reports += _per_index(
            "jacobi-boundary-product-symmetric", fam, n, _constant(floor_sym, n), width
        )
    if n >= 2:
        gaps = z.roots[1:] - z.roots[:-1]
        gap_floor = 2.0**1.75 * math.sqrt(min(alpha + 1.0, beta + 1.0)) / big_m
        reports += _per_index("jacobi-gap", fam, n, _constant(gap_floor, n - 1), gaps)
        if alpha == beta:
            gap_sym = (
                2.0**2.75 * math.sqrt(alpha + 1.0)
                / math.sqrt(big_m * (big_m + 4.0 * (alpha + 1.0)))
            )
            reports += _per_index(
                "jacobi-gap-symmetric", fam, n, _constant(gap_sym, n - 1), gaps
            )
    return reports


def jacobi_comparator(z: RootVector) -> BoundReport:
    """Asymptotic leading-term comparator for the upper boundary distance.

    Only meaningful for ``alpha, beta > -1/2``; the dropped ``o(1/N^2)``
    term means this never gates anything.
    """
    if z.family.kind is not FamilyKind.JACOBI:
        raise FamilyMismatchError("jacobi_comparator needs a Jacobi root vector")
    fam = z.family
    alpha, beta = float(fam.alpha), float(fam.beta)
    upper = 1.0 - float(z.roots[-1])
    if alpha <= -0.5 or beta <= -0.5:
        return _report(
            "jacobi-upper-edge-asymptotic", fam, z.n, None, math.nan, upper,
            comparator=True, note="not-applicable",
        )
    value = alpha * (alpha + 2.0) / (2.0 * (z.n + (alpha + beta + 1.0) / 2.0) ** 2)
    return _report("jacobi-upper-edge-asymptotic", fam, z.n, None, value, upper, comparator=True)


@dataclass(frozen=True)
class SharpnessSummary:
    """Aggregate sharpness per bound id for one family and order.

    ``diag_square_identity_ratio`` is the summed diagonal-of-square left
    side divided by its exact trace value; it must be 1 up to rounding for
    Hermite and Laguerre.  ``comparator_ratios`` maps
    ``"<comparator-id>/<own-id>"`` to the ratio of the two bound values.
    """

    family: PolynomialFamily | None
    n: int | None
    worst: dict[str, float]
    mean: dict[str, float]
    diag_square_identity_ratio: float | None
    comparator_ratios: dict[str, float]
    empty: bool = False


_COMPARATOR_PAIRS = (
    ("hermite-gap-comparator", "hermite-gap"),
    ("laguerre-min-root-bessel", "laguerre-min-root"),
    ("laguerre-gap-comparator-1", "laguerre-gap-strong"),
    ("laguerre-gap-comparator-2", "laguerre-gap-strong"),
    ("laguerre-gap-comparator-3", "laguerre-gap-strong"),
    ("laguerre-gap-comparator-1", "laguerre-gap-bessel-strong"),
    ("laguerre-gap-comparator-2", "laguerre-gap-bessel-strong"),
    ("laguerre-gap-comparator-3", "laguerre-gap-bessel-strong"),
    ("jacobi-upper-edge-asymptotic", "jacobi-upper-edge-strong"),
)


def sharpness_summary(reports: Sequence[BoundReport]) -> SharpnessSummary:
    """Aggregate a list of reports from a single family and order."""
    if not reports:
        return SharpnessSummary(None, None, {}, {}, None, {}, empty=True)
    fam = reports[0].family
    n = reports[0].n
    for rep in reports:
        if rep.family != fam or rep.n != n:
            raise FamilyMismatchError("sharpness_summary needs reports from one family and N")
    worst: dict[str, float] = {}
    mean: dict[str, float] = {}
    by_id: dict[str, list[BoundReport]] = {}
    for rep in reports:
        by_id.setdefault(rep.bound_id, []).append(rep)
    for bound_id, group in by_id.items():
        values = [r.sharpness for r in group if not r.note and math.isfinite(r.sharpness)]
        if values:
            worst[bound_id] = min(values)
            mean[bound_id] = sum(values) / len(values)
    ratio = None
    if fam.kind is FamilyKind.HERMITE and "hermite-diag-sq" in by_id:
        total = sum(r.bound_value for r in by_id["hermite-diag-sq"])
        ratio = total / (n * (n - 1) * (2 * n - 1) / 6.0)
    elif fam.kind is FamilyKind.LAGUERRE and "laguerre-diag-sq" in by_id:
        total = sum(r.bound_value for r in by_id["laguerre-diag-sq"])
        ratio = total / (n * (2 * n - 1) * (2 * n + 1) / 3.0)
    comparator_ratios: dict[str, float] = {}
    for cmp_id, own_id in _COMPARATOR_PAIRS:
        if cmp_id in by_id and own_id in by_id:
            cmp_value = by_id[cmp_id][0].bound_value
            own_value = by_id[own_id][0].bound_value
            if math.isfinite(cmp_value) and own_value > 0.0:
                comparator_ratios[f"{cmp_id}/{own_id}"] = cmp_value / own_value
    return SharpnessSummary(fam, n, worst, mean, ratio, comparator_ratios)
