"""Scans of the correct digits of the acceleration values at a fixed budget of orders,
and comparisons between the semi-extracted and the fully extracted diagonals."""

import logging
import math
import warnings
from fractions import Fraction
from typing import Optional

import numpy as np

from ..accel.extractors import ExtractorSpec
from ..accel.kernels import w_extracted, w_zeta_value
from ..core.limits import DEFAULT_LIMITS, Limits
from ..core.series import SeriesParams
from ..oracle.cache import ReferenceCache
from ..oracle.reference import digits_correct, resolve_errors
from ._parallel import pmap
from .rates import _accel_value
from .reports import BudgetScan, ExtractionComparison, ScanPoint

_logger = logging.getLogger(__name__)

DIGITS_REL_TOL = Fraction(1, 10**6)
"""Relative width of the error intervals used when counting correct digits."""


def _is_unimodal(digits: list[int], max_plateau: int) -> bool:
    """Internal utility checking that ``digits`` first (weakly) increases and then
    (weakly) decreases, with at most ``max_plateau`` maximizers, all adjacent."""
    if not digits:
        return False
    top = max(digits)
    peaks = [i for i, d in enumerate(digits) if d == top]
    if peaks[-1] - peaks[0] + 1 != len(peaks) or len(peaks) > max_plateau:
        return False
    rising = digits[: peaks[0] + 1]
    falling = digits[peaks[-1] :]
    return all(a <= b for a, b in zip(rising, rising[1:])) and all(
        a >= b for a, b in zip(falling, falling[1:])
    )


def budget_scan(
    params: SeriesParams,
    N: int,
    max_plateau: int = 2,
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
    n_jobs: int = 1,
    scale: int = 1,
) -> BudgetScan:
    """Computes the correct digits of the acceleration values at partial-sum orders
    ``n = 1, ..., N`` and reduite orders ``m = N - n``, i.e., at a fixed total budget
    ``N`` of orders.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    N : int
        The even, positive budget.
    max_plateau : int, optional
        Largest number of maximizers for the profile to be deemed unimodal. By default,
        ``2``.
    limits : Limits, optional
        Resource guards.
    cache : ReferenceCache, optional
        On-disk cache of references.
    n_jobs : int, optional
        Number of :mod:`joblib` workers. By default, ``1``.
    scale : int, optional
        Scaling factor of values and sum. By default, ``1``.

    Returns
    -------
    BudgetScan
        The profile, its maximizers and whether it is unimodal. A non-unimodal profile
        for ``p > q`` and ``N >= 20`` is reported as a warning.

    Raises
    ------
    ValueError
        Raises if ``N`` is not even and positive.
    """
    if N < 2 or N % 2:
        raise ValueError(f"Budget must be an even positive integer; got {N}.")
    ns = list(range(1, N + 1))
    values = pmap(
        _accel_value, [(N - n, n) for n in ns], n_jobs, params=params, limits=limits
    )
    ref, _ = resolve_errors(
        params,
        values,
        rel_tol=DIGITS_REL_TOL,
        start_digits=math.ceil(2.5 * N) + 10,
        limits=limits,
        cache=cache,
        scale=scale,
    )
    points = [
        ScanPoint(n, N - n, digits_correct(v, ref, scale)) for n, v in zip(ns, values)
    ]
    profile = np.asarray([-1 if pt.digits is None else pt.digits for pt in points])
    argmax = [ns[i] for i in np.flatnonzero(profile == profile.max())]
    known = [pt.digits for pt in points if pt.digits is not None]
    unimodal = _is_unimodal(known, max_plateau)
    if not unimodal and params.p > params.q and N >= 20:
        warnings.warn(
            f"Digits profile of {params} at budget N={N} is not unimodal "
            f"(maximizers {argmax}).",
            RuntimeWarning,
        )
    _logger.debug("Budget scan of %s at N=%d peaks at n=%s", params, N, argmax)
    return BudgetScan(params, N, points, argmax, unimodal, ref.guaranteed_digits)


def semi_vs_full_extraction(
    params: SeriesParams,
    zeta: ExtractorSpec,
    n: int,
    k: int,
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
    scale: int = 1,
) -> ExtractionComparison:
    """Compares the correct digits of the semi-extracted value at ``n``, i.e., at
    orders ``(n, zeta(n))``, with those of the fully extracted diagonal value at ``k``,
    i.e., at orders ``(zeta(k), zeta(k))``."""
    semi = w_zeta_value(params, zeta, n, limits)
    full = w_extracted(params, zeta, k, limits)
    ref, _ = resolve_errors(
        params,
        [semi, full],
        rel_tol=DIGITS_REL_TOL,
        limits=limits,
        cache=cache,
        scale=scale,
    )
    return ExtractionComparison(
        params,
        str(zeta),
        n,
        k,
        semi,
        digits_correct(semi, ref, scale),
        full,
        digits_correct(full, ref, scale),
        ref.guaranteed_digits,
    )
