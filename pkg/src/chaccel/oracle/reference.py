r"""Certified reference values of the sums :math:`S_{p,q}`, and certified errors of
approximations w.r.t. them.

References are diagonal enclosures, i.e., :func:`chaccel.contfrac.sum_enclosure` at
``n = m = k``, whose width shrinks by roughly one and a half digits per unit of ``k``.
No floating point is involved in certifying them."""

import logging
import math
import warnings
from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, NamedTuple, Optional, Union

from ..contfrac.enclosures import Enclosure, sum_enclosure
from ..core.limits import DEFAULT_LIMITS, Limits, ResourceLimitError
from ..core.rendering import floor_log10, precision
from ..core.series import SeriesParams

if TYPE_CHECKING:
    from .cache import ReferenceCache

_logger = logging.getLogger(__name__)

DIGITS_PER_ORDER = 1.4
"""Conservative number of certified digits gained per unit of the diagonal order."""

ORDER_MARGIN = 8
"""Extra orders added to the initial guess of the diagonal order."""

DEFAULT_REL_TOL = Fraction(1, 1000)
"""Default relative width under which an error interval is deemed resolved."""


class ReferenceSum(NamedTuple):
    """A certified enclosure of :math:`S_{p,q}` with a guaranteed number of digits."""

    params: SeriesParams
    """Parameters of the series."""

    enclosure: Enclosure
    """Interval containing the sum, of width smaller than ``10**-guaranteed_digits``."""

    guaranteed_digits: int
    """Number of digits after the decimal point guaranteed by the enclosure."""

    order_used: int
    """Diagonal order ``k`` of the enclosure."""

    def refine(self, other: "ReferenceSum") -> "ReferenceSum":
        """Intersects this reference with another one of the same series.

        Raises
        ------
        ValueError
            Raises if the references concern different series or do not intersect,
            which would mean one of them is not certified.
        """
        if self.params != other.params:
            raise ValueError(
                f"Cannot refine references of {self.params} and {other.params}."
            )
        a, b = self.enclosure, other.enclosure
        if not a.intersects(b):
            raise ValueError(f"Disjoint references for {self.params}: {a} and {b}.")
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        enclosure = Enclosure(lo, hi, a.target)
        return ReferenceSum(
            self.params,
            enclosure,
            _guaranteed_digits(enclosure.width),
            max(self.order_used, other.order_used),
        )


def _guaranteed_digits(width: Fraction) -> int:
    """Internal utility returning the largest ``d`` such that ``width < 10**-d``."""
    return -floor_log10(width) - 1


def initial_order(digits: int) -> int:
    """Initial guess of the diagonal order needed to certify ``digits`` digits."""
    return math.ceil(digits / DIGITS_PER_ORDER) + ORDER_MARGIN


@lru_cache(maxsize=128)
def _diagonal_reference(
    params: SeriesParams, digits: int, limits: Limits
) -> ReferenceSum:
    """Internal, cached computation of :func:`reference_sum`."""
    threshold = Fraction(1, 10**digits)
    k = initial_order(digits)
    while True:
        enclosure = sum_enclosure(params, k, k, limits)
        if enclosure.width < threshold:
            break
        _logger.debug(
            "Diagonal enclosure of %s at order %d is too wide for %d digits; doubling",
            params,
            k,
            digits,
        )
        k *= 2
    return ReferenceSum(params, enclosure, _guaranteed_digits(enclosure.width), k)


def reference_sum(
    params: SeriesParams,
    digits: int,
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional["ReferenceCache"] = None,
) -> ReferenceSum:
    """Computes a certified enclosure of :math:`S_{p,q}` that guarantees ``digits``
    digits after the decimal point.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    digits : int
        Target number of guaranteed digits.
    limits : Limits, optional
        Resource guards; ``digits`` cannot exceed ``limits.max_digits`` and the
        diagonal order cannot exceed ``limits.max_order``.
    cache : ReferenceCache, optional
        An on-disk cache to look the reference up in, and to store it to. Results are
        identical with or without it.

    Returns
    -------
    ReferenceSum
        The certified reference.

    Raises
    ------
    ValueError
        Raises if ``digits`` is not positive.
    ResourceLimitError
        Raises if the required precision or order exceed the configured maxima.
    """
    if digits < 1:
        raise ValueError(f"Number of digits must be positive; got {digits}.")
    limits.check_digits(digits)
    if cache is not None:
        cached = cache.get(params, digits)
        if cached is not None:
            return cached
    _logger.debug("Computing reference of %s at %d digits", params, digits)
    ref = _diagonal_reference(params, digits, limits)
    if cache is not None:
        cache.put(ref, digits)
    return ref


class ErrorInterval(NamedTuple):
    """Exact interval ``[lo, hi]`` of the possible values of an absolute error."""

    lo: Fraction
    hi: Fraction

    @property
    def relative_width(self) -> Optional[Fraction]:
        """``(hi - lo) / lo``, or ``None`` if the lower bound is zero."""
        return (self.hi - self.lo) / self.lo if self.lo > 0 else None

    def resolved(self, rel_tol: Union[Fraction, float] = DEFAULT_REL_TOL) -> bool:
        """Whether the interval is positive and relatively narrower than ``rel_tol``."""
        rw = self.relative_width
        return rw is not None and rw < rel_tol


def certified_error(
    x: Union[int, Fraction], ref: ReferenceSum, scale: int = 1
) -> ErrorInterval:
    """Computes the exact interval of the possible values of :math:`|x - S|`, given
    that :math:`S` lies in the enclosure of ``ref``.

    Parameters
    ----------
    x : int or Fraction
        The approximation of the sum.
    ref : ReferenceSum
        The certified reference.
    scale : int, optional
        A positive integer ``c`` such that the error of ``c * x`` w.r.t. ``c * S`` is
        returned instead, e.g., ``4`` for :math:`\\pi` from :math:`S_{2,1}`. By default,
        ``1``.

    Returns
    -------
    ErrorInterval
        The certified error interval. Its lower bound is zero iff ``x`` lies inside the
        enclosure.
    """
    enclosure = ref.enclosure.scaled(scale)
    y = Fraction(x) * scale
    if y < enclosure.lo:
        return ErrorInterval(enclosure.lo - y, enclosure.hi - y)
    if y > enclosure.hi:
        return ErrorInterval(y - enclosure.hi, y - enclosure.lo)
    return ErrorInterval(Fraction(0), max(y - enclosure.lo, enclosure.hi - y))


def digits_correct(
    x: Union[int, Fraction], ref: ReferenceSum, scale: int = 1
) -> Optional[int]:
    """Computes the number of correct digits after the decimal point of ``x``, i.e.,
    :math:`\\lfloor -\\log_{10} |x - S| \\rfloor` clipped at zero.

    Returns
    -------
    int or None
        The number of correct digits, or ``None`` if the reference is too coarse to
        tell, i.e., the bounds of the error interval lead to different counts.
    """
    err = certified_error(x, ref, scale)
    if err.lo == 0:
        return None
    d = precision(err.hi)
    if precision(err.lo) != d:
        return None
    return max(d, 0)


def resolve_errors(
    params: SeriesParams,
    values: Iterable[Union[int, Fraction]],
    smallest_error: Optional[Fraction] = None,
    rel_tol: Union[Fraction, float] = DEFAULT_REL_TOL,
    start_digits: int = 30,
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional["ReferenceCache"] = None,
    scale: int = 1,
    strict: bool = False,
) -> tuple[ReferenceSum, list[ErrorInterval]]:
    """Computes the certified errors of the given approximations of :math:`S_{p,q}`,
    raising the precision of the reference until every error interval is resolved.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    values : iterable of int or Fraction
        The approximations.
    smallest_error : Fraction, optional
        A known lower bound on the errors, used to pick the initial precision.
    rel_tol : Fraction or float, optional
        Relative width under which an error interval is resolved. By default,
        ``1/1000``.
    start_digits : int, optional
        Minimum initial precision of the reference. By default, ``30``.
    limits : Limits, optional
        Resource guards.
    cache : ReferenceCache, optional
        On-disk cache of references.
    scale : int, optional
        Scaling factor of values and sum (see :func:`certified_error`).
    strict : bool, optional
        If ``True``, raises when the errors cannot be resolved within the guards;
        otherwise, warns and returns the last (partially unresolved) errors. By default,
        ``False``.

    Returns
    -------
    tuple of ReferenceSum and list of ErrorInterval
        The last reference used and the error intervals, in the order of ``values``.

    Raises
    ------
    ResourceLimitError
        Raises in strict mode if the required precision exceeds the guards.
    """
    values = [Fraction(v) for v in values]
    slack = -floor_log10(Fraction(rel_tol)) + 3
    digits = start_digits
    if smallest_error is not None and smallest_error > 0:
        digits = max(digits, -floor_log10(smallest_error * scale) + slack)
    previous: Optional[ReferenceSum] = None
    while True:
        digits = min(digits, limits.max_digits)
        ref = reference_sum(params, digits, limits, cache)
        if previous is not None:
            ref = ref.refine(previous)
        previous = ref
        errors = [certified_error(v, ref, scale) for v in values]
        unresolved = [e for e in errors if not e.resolved(rel_tol)]
        if not unresolved:
            return ref, errors
        smallest = min(e.hi for e in unresolved)
        needed = -floor_log10(smallest) + slack if smallest > 0 else 2 * digits
        if digits >= limits.max_digits:
            msg = (
                f"{len(unresolved)} error(s) of {params} unresolved at the maximum "
                f"oracle precision of {limits.max_digits} digits."
            )
            if strict:
                raise ResourceLimitError(msg)
            warnings.warn(msg, RuntimeWarning)
            return ref, errors
        new_digits = max(needed, 2 * digits)
        if needed > limits.max_digits and strict:
            raise ResourceLimitError(
                f"Resolving the errors of {params} needs an oracle precision of "
                f"{needed} digits, above the configured maximum "
                f"{limits.max_digits}."
            )
        _logger.debug(
            "%d error(s) of %s unresolved at %d digits; raising to %d",
            len(unresolved),
            params,
            digits,
            new_digits,
        )
        digits = new_digits
