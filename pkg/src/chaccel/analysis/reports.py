"""Records returned by the empirical checks of the rates of convergence.

Every value derived from an error carries certified bars, i.e., it is computed from both
ends of the certified :class:`chaccel.oracle.ErrorInterval`, and points whose errors
could not be resolved by the oracle are kept with ``None`` values instead of being
dropped."""

import math
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from ..core.rendering import log10
from ..core.series import SeriesParams
from ..oracle.reference import ErrorInterval


def log10_interval(err: ErrorInterval) -> Optional[tuple[float, float]]:
    """Base-10 logarithms of the ends of a positive error interval, or ``None`` if its
    lower bound is zero."""
    if err.lo <= 0:
        return None
    return log10(err.lo), log10(err.hi)


class RatePoint(NamedTuple):
    """One-step error ratio :math:`|x_{i'} - S| / |x_i - S|` between the point at
    ``index`` and the next one in the report."""

    index: int
    error: ErrorInterval
    log10_ratio: Optional[float] = None
    """Midpoint of the certified interval of the base-10 log of the ratio."""
    log10_bar: Optional[float] = None
    """Half-width of the certified interval of the base-10 log of the ratio."""

    @property
    def ratio(self) -> Optional[float]:
        return None if self.log10_ratio is None else 10.0**self.log10_ratio

    @property
    def certified(self) -> bool:
        return self.log10_ratio is not None


def ratio_points(
    indices: list[int], errors: list[ErrorInterval], rel_tol: float
) -> list[RatePoint]:
    """Builds the one-step ratios between consecutive entries of ``indices``. The last
    point has no successor, hence no ratio."""
    points = []
    for i, (index, err) in enumerate(zip(indices, errors)):
        if i + 1 == len(errors):
            points.append(RatePoint(index, err))
            continue
        succ = errors[i + 1]
        this_log, succ_log = log10_interval(err), log10_interval(succ)
        if (
            this_log is None
            or succ_log is None
            or not err.resolved(rel_tol)
            or not succ.resolved(rel_tol)
        ):
            points.append(RatePoint(index, err))
            continue
        lo = succ_log[0] - this_log[1]
        hi = succ_log[1] - this_log[0]
        points.append(RatePoint(index, err, (lo + hi) / 2, (hi - lo) / 2))
    return points


class RateReport(NamedTuple):
    """Errors and one-step ratios of a sequence approximating :math:`S_{p,q}`."""

    kind: str
    """Name of the sequence, e.g., ``"w"`` or ``"partial-sums"``."""
    params: SeriesParams
    points: list[RatePoint]
    oracle_digits: int


class EquivalentPoint(NamedTuple):
    """Error at ``index`` divided by its asymptotic equivalent."""

    index: int
    error: ErrorInterval
    normalized: Optional[float] = None
    """Midpoint of the certified interval of the normalized error."""
    bar: Optional[float] = None
    """Half-width of the certified interval of the normalized error."""
    within_bounds: Optional[bool] = None
    """Whether the error lies within the closed-form bounds, when these are known."""

    @property
    def certified(self) -> bool:
        return self.normalized is not None


def normalize(
    index: int,
    err: ErrorInterval,
    log10_equivalent: float,
    rel_tol: float,
    within_bounds: Optional[bool] = None,
) -> EquivalentPoint:
    """Divides the error interval by the equivalent, given by its base-10 logarithm."""
    logs = log10_interval(err)
    if logs is None or not err.resolved(rel_tol):
        return EquivalentPoint(index, err, within_bounds=within_bounds)
    lo = 10.0 ** (logs[0] - log10_equivalent)
    hi = 10.0 ** (logs[1] - log10_equivalent)
    return EquivalentPoint(index, err, (lo + hi) / 2, (hi - lo) / 2, within_bounds)


class EquivalentCheck(NamedTuple):
    """Normalized errors of a sequence against an asymptotic equivalent, which should
    approach ``target``."""

    name: str
    formula: str
    """The equivalent, for auditability."""
    params: SeriesParams
    points: list[EquivalentPoint]
    oracle_digits: int
    target: float = 1.0

    def within(self, tol: float, start: Optional[int] = None) -> bool:
        """Whether every point with ``index >= start`` is certified and its whole
        normalized interval lies within ``[target - tol, target + tol]``."""
        tail = [pt for pt in self.points if start is None or pt.index >= start]
        if not tail:
            return False
        for pt in tail:
            if pt.normalized is None or pt.bar is None:
                return False
            if abs(pt.normalized - self.target) + pt.bar > tol:
                return False
        return True

    def values(self) -> np.ndarray:
        """Normalized values as an array, with ``nan`` for uncertified points."""
        return np.asarray(
            [np.nan if pt.normalized is None else pt.normalized for pt in self.points],
            dtype=float,
        )


class Theorem3Fit(NamedTuple):
    """Estimate of the constant :math:`\\omega` such that the error of the V sequence
    behaves as :math:`\\omega / m^{2n+1+2q/p}`."""

    omega: Optional[float]
    """Mean of the normalized errors on the last third of the orders."""
    plateau: bool
    """Whether the relative spread of the last third is below the threshold."""
    spread: Optional[float]
    exponent: float
    check: EquivalentCheck


class RatioPoint(NamedTuple):
    """Base-10 log of the ratio of the errors of two sequences at ``index``."""

    index: int
    log10_ratio: Optional[float]
    bar: Optional[float]


class Theorem4Report(NamedTuple):
    """Trend of the ratio of the errors of the U sequence of order ``m`` and of the V
    sequences at partial-sum order ``m``."""

    params: SeriesParams
    m: int
    points: list[RatioPoint]
    slope: Optional[float]
    """Fitted log-log slope of the ratio on the tail."""
    predicted_slope: float
    """The predicted power :math:`2(q/p - 1)`."""
    trend: str
    """One of ``"decreasing"``, ``"increasing"`` or ``"bounded"``."""
    expected_trend: str
    oracle_digits: int

    @property
    def agrees(self) -> bool:
        return self.trend == self.expected_trend


class Theorem5Report(NamedTuple):
    """One-step base-10 log ratios of the errors of the W sequence against the bracket
    :math:`(\\log_{10} (1/9e^2), \\log_{10} (1/4e^2))`."""

    params: SeriesParams
    points: list[RatePoint]
    lower: float
    upper: float
    oracle_digits: int

    def inside(self, point: RatePoint) -> Optional[bool]:
        """Whether the certified interval of the ratio lies inside the bracket."""
        if point.log10_ratio is None or point.log10_bar is None:
            return None
        return (
            self.lower < point.log10_ratio - point.log10_bar
            and point.log10_ratio + point.log10_bar < self.upper
        )

    @property
    def all_inside(self) -> bool:
        return all(self.inside(pt) for pt in self.points if pt.certified) and any(
            pt.certified for pt in self.points
        )


class ChiEstimate(NamedTuple):
    """Estimate of the base-10 log of the linear rate of the W sequence at ``n``."""

    params: SeriesParams
    n: int
    log10_ratio: float
    error_bar: float
    oracle_digits: int

    @property
    def chi(self) -> float:
        """The rate itself, i.e., ``10 ** log10_ratio``."""
        return 10.0**self.log10_ratio


class Theorem6Report(NamedTuple):
    """Superlinear convergence of the semi-extracted diagonal sequence."""

    check: EquivalentCheck
    ratios: list[RatePoint]
    superlinear_extractor: bool
    strictly_decreasing: bool


class ScanPoint(NamedTuple):
    """Correct digits of the acceleration value at reduite order ``m = N - n``."""

    n: int
    m: int
    digits: Optional[int]


class BudgetScan(NamedTuple):
    """Profile of the correct digits at fixed total order ``N = n + m``."""

    params: SeriesParams
    N: int
    points: list[ScanPoint]
    argmax: list[int]
    unimodal: bool
    oracle_digits: int


class ExtractionComparison(NamedTuple):
    """Correct digits of the semi-extracted value at ``n`` and of the fully extracted
    value at ``k``."""

    params: SeriesParams
    zeta: str
    n: int
    k: int
    semi_value: Fraction
    semi_digits: Optional[int]
    full_value: Fraction
    full_digits: Optional[int]
    oracle_digits: int


class AitkenRow(NamedTuple):
    """Aitken extrapolation of the partial sums at ``n`` against the U sequence of
    order ``0`` at ``n - 1``."""

    n: int
    aitken: Fraction
    u_value: Fraction

    @property
    def equal(self) -> bool:
        return self.aitken == self.u_value


THEOREM5_LOWER = -math.log10(9.0) - 2.0 * math.log10(math.e)
THEOREM5_UPPER = -math.log10(4.0) - 2.0 * math.log10(math.e)
