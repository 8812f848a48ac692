r"""Empirical checks of the rates of convergence of the partial sums and of the
acceleration sequences.

Each check computes the certified errors of a sequence w.r.t. the oracle, and compares
them to an asymptotic equivalent (normalized errors should approach ``1``), to a
predicted power of ``n`` (via a log-log fit) or to a bracket of linear rates. All
logarithms are in base 10.

Checks assert nothing: they return reports whose tolerance bands are left to the
caller."""

import logging
import math
import warnings
from collections.abc import Sequence
from fractions import Fraction
from typing import Optional

import numpy as np

from ..accel.aitken import aitken_sequence
from ..accel.extractors import ExtractorSpec
from ..accel.kernels import V, AccelKind, accel_value, u_sequence, v_sequence
from ..contfrac.enclosures import closed_form_bounds
from ..core.limits import DEFAULT_LIMITS, Limits
from ..core.rendering import floor_log10, log10
from ..core.series import SeriesParams, partial_sums_at
from ..oracle.cache import ReferenceCache
from ..oracle.reference import DEFAULT_REL_TOL, resolve_errors
from ._parallel import pmap
from .reports import (
    THEOREM5_LOWER,
    THEOREM5_UPPER,
    AitkenRow,
    EquivalentCheck,
    RatePoint,
    RateReport,
    RatioPoint,
    Theorem3Fit,
    Theorem4Report,
    Theorem5Report,
    Theorem6Report,
    log10_interval,
    normalize,
    ratio_points,
)

_logger = logging.getLogger(__name__)

LOG10_4E2 = math.log10(4.0) + 2.0 * math.log10(math.e)
"""Base-10 log of :math:`4e^2`."""


def _check_indices(name: str, indices: Sequence[int], minimum: int) -> list[int]:
    """Internal utility validating a non-empty, strictly increasing list of indices."""
    indices = list(indices)
    if not indices:
        raise ValueError(f"`{name}` must contain at least one index.")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError(f"`{name}` must be strictly increasing; got {indices}.")
    if indices[0] < minimum:
        raise ValueError(f"`{name}` must start at {minimum} or above; got {indices}.")
    return indices


def _start_digits(log10_smallest_error: float, rel_tol: float) -> int:
    """Internal utility guessing the oracle precision resolving the smallest error."""
    slack = -floor_log10(Fraction(rel_tol)) + 3
    return max(30, math.ceil(-log10_smallest_error) + slack)


def _kernel_value(index: int, params: SeriesParams, kind: AccelKind, limits: Limits):
    return kind.values(params, [index], limits)[0]


def _accel_value(mn: tuple[int, int], params: SeriesParams, limits: Limits):
    return accel_value(params, mn[0], mn[1], limits)


def sequence_values(
    params: SeriesParams,
    kind: Optional[AccelKind],
    indices: Sequence[int],
    limits: Limits = DEFAULT_LIMITS,
    n_jobs: int = 1,
) -> list[Fraction]:
    """Computes the terms of the sequence at the given indices, i.e., the partial sums
    if ``kind`` is ``None``. Independent indices are spread over ``n_jobs`` workers,
    except for the V sequence that is computed in a single stream."""
    if kind is None:
        return partial_sums_at(params, indices)
    if n_jobs == 1 or isinstance(kind, V):
        return kind.values(params, indices, limits)
    return pmap(_kernel_value, indices, n_jobs, params=params, kind=kind, limits=limits)


def rate_report(
    params: SeriesParams,
    kind: Optional[AccelKind],
    indices: Sequence[int],
    rel_tol: float = float(DEFAULT_REL_TOL),
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
    n_jobs: int = 1,
    scale: int = 1,
) -> RateReport:
    """Computes the certified errors and the one-step error ratios of a sequence.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    kind : AccelKind or None
        The acceleration sequence, or ``None`` for the partial sums.
    indices : sequence of int
        Strictly increasing indices of the sequence. Ratios are taken between
        consecutive entries.
    rel_tol : float, optional
        Relative width under which an error is deemed resolved. By default, ``1e-3``.
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
    RateReport
        The report, whose uncertified points carry ``None`` ratios.
    """
    indices = _check_indices("indices", indices, 0)
    values = sequence_values(params, kind, indices, limits, n_jobs)
    ref, errors = resolve_errors(
        params, values, rel_tol=rel_tol, limits=limits, cache=cache, scale=scale
    )
    name = "partial-sums" if kind is None else str(kind)
    points = ratio_points(indices, errors, rel_tol)
    return RateReport(name, params, points, ref.guaranteed_digits)


def theorem1_check(
    params: SeriesParams,
    ns: Sequence[int],
    rel_tol: float = float(DEFAULT_REL_TOL),
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
) -> EquivalentCheck:
    """Normalizes the errors of the partial sums by their equivalent :math:`1/(2pn)`,
    i.e., computes :math:`2pn |S_{p,q}^{(n)} - S_{p,q}|`.

    Raises
    ------
    ValueError
        Raises if ``ns`` is not strictly increasing from ``1`` or above.
    """
    ns = _check_indices("ns", ns, 1)
    values = partial_sums_at(params, ns)
    log_equiv = [-math.log10(2 * params.p * n) for n in ns]
    ref, errors = resolve_errors(
        params,
        values,
        start_digits=_start_digits(min(log_equiv) - 1, rel_tol),
        rel_tol=rel_tol,
        limits=limits,
        cache=cache,
    )
    points = [normalize(n, e, le, rel_tol) for n, e, le in zip(ns, errors, log_equiv)]
    return EquivalentCheck("theorem1", "1/(2pn)", params, points, ref.guaranteed_digits)


def theorem2_check(
    params: SeriesParams,
    m: int,
    ns: Sequence[int],
    rel_tol: float = float(DEFAULT_REL_TOL),
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
    n_jobs: int = 1,
) -> EquivalentCheck:
    """Normalizes the errors of the U sequence of order ``m`` by their equivalent
    :math:`(m+1)!^2 / ((2n)^{2m+3} p)`. Each point also records whether its certified
    error lies within :func:`chaccel.contfrac.closed_form_bounds`.

    Raises
    ------
    ValueError
        Raises if ``m > 6`` or ``ns`` does not start at ``m + 2`` or above.
    """
    if not 0 <= m <= 6:
        raise ValueError(f"Reduite order must be in [0, 6]; got {m}.")
    ns = _check_indices("ns", ns, m + 2)
    if n_jobs == 1:
        values = u_sequence(params, m, ns, limits)
    else:
        values = pmap(
            _accel_value, [(m, n) for n in ns], n_jobs, params=params, limits=limits
        )
    log_fact2 = 2.0 * math.log10(math.factorial(m + 1))
    log_equiv = [
        log_fact2 - (2 * m + 3) * math.log10(2 * n) - math.log10(params.p) for n in ns
    ]
    ref, errors = resolve_errors(
        params,
        values,
        start_digits=_start_digits(min(log_equiv) - 1, rel_tol),
        rel_tol=rel_tol,
        limits=limits,
        cache=cache,
    )
    points = []
    for n, err, le in zip(ns, errors, log_equiv):
        lo, hi = closed_form_bounds(params, n, m)
        inside = lo <= err.lo and (hi is None or err.hi <= hi)
        points.append(normalize(n, err, le, rel_tol, inside))
    return EquivalentCheck(
        f"theorem2(m={m})",
        "(m+1)!^2/((2n)^(2m+3) p)",
        params,
        points,
        ref.guaranteed_digits,
    )


def theorem3_fit(
    params: SeriesParams,
    n: int,
    ms: Sequence[int],
    spread_tol: float = 0.1,
    rel_tol: float = float(DEFAULT_REL_TOL),
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
) -> Theorem3Fit:
    """Estimates the constant :math:`\\omega` such that the error of the V sequence of
    order ``n`` behaves as :math:`\\omega / m^{2n+1+2q/p}`, by normalizing the errors
    by :math:`m^{-(2n+1+2q/p)}` and averaging the last third of them.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order of the V sequence.
    ms : sequence of int
        Strictly increasing reduite orders, from ``1`` or above.
    spread_tol : float, optional
        Threshold on the relative spread (peak-to-peak over mean) of the last third
        under which a plateau is declared. By default, ``0.1``.
    rel_tol : float, optional
        Relative width under which an error is deemed resolved.
    limits : Limits, optional
        Resource guards.
    cache : ReferenceCache, optional
        On-disk cache of references.

    Returns
    -------
    Theorem3Fit
        The estimate, with the normalized values it is based on.
    """
    ms = _check_indices("ms", ms, 1)
    exponent = 2 * n + 1 + 2 * params.q / params.p
    values = v_sequence(params, n, ms, limits)
    log_equiv = [-exponent * math.log10(m) for m in ms]
    ref, errors = resolve_errors(
        params,
        values,
        start_digits=_start_digits(min(log_equiv) - 2, rel_tol),
        rel_tol=rel_tol,
        limits=limits,
        cache=cache,
    )
    points = [normalize(m, e, le, rel_tol) for m, e, le in zip(ms, errors, log_equiv)]
    check = EquivalentCheck(
        f"theorem3(n={n})",
        "omega/m^(2n+1+2q/p)",
        params,
        points,
        ref.guaranteed_digits,
    )
    tail = check.values()[-max(1, len(ms) // 3) :]
    if np.isnan(tail).any():
        return Theorem3Fit(None, False, None, exponent, check)
    omega = float(tail.mean())
    spread = float(np.ptp(tail) / omega)
    return Theorem3Fit(omega, spread < spread_tol, spread, exponent, check)


def _trend(slope: Optional[float], threshold: float) -> str:
    if slope is None:
        return "unknown"
    if slope < -threshold:
        return "decreasing"
    if slope > threshold:
        return "increasing"
    return "bounded"


def theorem4_check(
    params: SeriesParams,
    m: int,
    ns: Sequence[int],
    trend_threshold: float = 0.2,
    rel_tol: float = float(DEFAULT_REL_TOL),
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
) -> Theorem4Report:
    """Compares the U sequence of order ``m``, i.e., the values at orders
    ``(m, n)``, with the V sequence of order ``m`` read at reduite order ``n``, i.e.,
    the values at orders ``(n, m)``, as ``n`` grows. Here, the varying index is always
    the subscript, i.e., the reduite order for V and the partial-sum order for U.

    The ratio of their errors should behave as :math:`n^{2(q/p - 1)}`, hence vanish if
    ``p > q``, diverge if ``p < q`` and stay bounded if ``p == q``. The slope of the
    ratio is fitted in log-log scale on the last half of ``ns``.

    Raises
    ------
    ValueError
        Raises if ``m > 6`` or ``ns`` does not start at ``m + 2`` or above.
    """
    if not 0 <= m <= 6:
        raise ValueError(f"Reduite order must be in [0, 6]; got {m}.")
    ns = _check_indices("ns", ns, m + 2)
    u_values = u_sequence(params, m, ns, limits)
    v_values = v_sequence(params, m, ns, limits)
    ref, errors = resolve_errors(
        params,
        u_values + v_values,
        rel_tol=rel_tol,
        limits=limits,
        cache=cache,
    )
    u_errors, v_errors = errors[: len(ns)], errors[len(ns) :]
    points = []
    for n, ue, ve in zip(ns, u_errors, v_errors):
        ul, vl = log10_interval(ue), log10_interval(ve)
        resolved = ue.resolved(rel_tol) and ve.resolved(rel_tol)
        if ul is None or vl is None or not resolved:
            points.append(RatioPoint(n, None, None))
            continue
        lo, hi = ul[0] - vl[1], ul[1] - vl[0]
        points.append(RatioPoint(n, (lo + hi) / 2, (hi - lo) / 2))
    tail = [pt for pt in points[len(points) // 2 :] if pt.log10_ratio is not None]
    slope = None
    if len(tail) >= 2:
        x = np.log10([pt.index for pt in tail])
        y = np.asarray([pt.log10_ratio for pt in tail])
        slope = float(np.polyfit(x, y, 1)[0])
    p, q = params.p, params.q
    expected = "decreasing" if p > q else "increasing" if p < q else "bounded"
    return Theorem4Report(
        params,
        m,
        points,
        slope,
        2.0 * (q / p - 1.0),
        _trend(slope, trend_threshold),
        expected,
        ref.guaranteed_digits,
    )


def theorem5_check(
    params: SeriesParams,
    ns: Sequence[int],
    rel_tol: float = float(DEFAULT_REL_TOL),
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
    n_jobs: int = 1,
) -> Theorem5Report:
    """Computes the one-step log ratio :math:`\\log_{10} |w^{(n+1)} - S| / |w^{(n)} -
    S|` of the W sequence at each ``n`` in ``ns``, to be compared with the bracket
    :math:`(\\log_{10} (1/9e^2), \\log_{10} (1/4e^2))`."""
    ns = _check_indices("ns", ns, 1)
    needed = sorted(set(ns) | {n + 1 for n in ns})
    values = pmap(
        _accel_value, [(n, n) for n in needed], n_jobs, params=params, limits=limits
    )
    lowest = closed_form_bounds(params, needed[-1], needed[-1])[0]
    ref, errors = resolve_errors(
        params,
        values,
        start_digits=_start_digits(log10(lowest), rel_tol),
        rel_tol=rel_tol,
        limits=limits,
        cache=cache,
    )
    by_index = dict(zip(needed, errors))
    points = []
    for n in ns:
        (point, _) = ratio_points([n, n + 1], [by_index[n], by_index[n + 1]], rel_tol)
        points.append(point)
    return Theorem5Report(
        params, points, THEOREM5_LOWER, THEOREM5_UPPER, ref.guaranteed_digits
    )


def _w_zeta_value(n: int, params: SeriesParams, zeta: ExtractorSpec, limits: Limits):
    return accel_value(params, n, zeta(n), limits)


def theorem6_check(
    params: SeriesParams,
    zeta: ExtractorSpec,
    ns: Sequence[int],
    rel_tol: float = float(DEFAULT_REL_TOL),
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
    n_jobs: int = 1,
) -> Theorem6Report:
    """Normalizes the errors of the semi-extracted diagonal sequence by their equivalent
    :math:`\\frac{\\pi}{4p} \\left(\\frac{1}{4e^2}\\right)^n
    \\left(\\frac{n}{\\zeta(n)}\\right)^{2n+3}`, and checks that the one-step error
    ratios strictly decrease, i.e., that convergence is superlinear.

    A warning is raised if the extractor is not superlinear, in which case no
    superlinear convergence is to be expected.
    """
    ns = _check_indices("ns", ns, 1)
    if not zeta.is_superlinear:
        warnings.warn(
            f"Extractor '{zeta}' is not superlinear; the semi-extracted sequence "
            "is not expected to converge superlinearly.",
            RuntimeWarning,
        )
    values = pmap(_w_zeta_value, ns, n_jobs, params=params, zeta=zeta, limits=limits)
    log_pi = math.log10(math.pi / (4 * params.p))
    log_equiv = [
        log_pi - n * LOG10_4E2 + (2 * n + 3) * math.log10(n / zeta(n)) for n in ns
    ]
    ref, errors = resolve_errors(
        params,
        values,
        start_digits=_start_digits(min(log_equiv) - 2, rel_tol),
        rel_tol=rel_tol,
        limits=limits,
        cache=cache,
    )
    points = [normalize(n, e, le, rel_tol) for n, e, le in zip(ns, errors, log_equiv)]
    check = EquivalentCheck(
        f"theorem6(zeta={zeta})",
        "(pi/4p) (1/4e^2)^n (n/zeta(n))^(2n+3)",
        params,
        points,
        ref.guaranteed_digits,
    )
    ratios = ratio_points(ns, errors, rel_tol)
    return Theorem6Report(
        check, ratios, zeta.is_superlinear, _strictly_decreasing(ratios[:-1])
    )


def _strictly_decreasing(points: Sequence[RatePoint]) -> bool:
    """Internal utility checking that certified log ratios strictly decrease, bars
    included."""
    if len(points) < 2:
        return False
    for a, b in zip(points, points[1:]):
        if a.log10_ratio is None or b.log10_ratio is None:
            return False
        if b.log10_ratio + b.log10_bar >= a.log10_ratio - a.log10_bar:  # type: ignore
            return False
    return True


def aitken_check(params: SeriesParams, ns: Sequence[int]) -> list[AitkenRow]:
    """Compares the Aitken extrapolation of the partial sums at each ``n >= 2`` with
    the U sequence of order ``0`` at ``n - 1``, as exact rationals."""
    ns = list(ns)
    aitken = aitken_sequence(params, ns)
    u_values = u_sequence(params, 0, [n - 1 for n in ns])
    rows = [AitkenRow(n, a, u) for n, a, u in zip(ns, aitken, u_values)]
    _logger.debug(
        "Aitken identity of %s holds at %d/%d orders",
        params,
        sum(r.equal for r in rows),
        len(rows),
    )
    return rows

