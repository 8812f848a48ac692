r"""Integer convergents of the generalized continued fraction of the CHA remainders.

The remainder of rank :math:`n` of a CHA series satisfies

.. math:: R_{p,q}^{(n)} = \cfrac{1}{\alpha + \cfrac{p^2}{\alpha + \cfrac{(2p)^2}{\alpha
   + \dots}}},
   \qquad \alpha = \alpha_{p,q}^{(n)},

whose reduites :math:`\rho_m = A_m / B_m` are generated by the two-term recurrences

.. math:: X_{m+2} = \alpha X_{m+1} + p^2 (m+2)^2 X_m, \qquad X \in \{A, B\},

with :math:`A_0 = 1, A_1 = \alpha, B_0 = \alpha, B_1 = \alpha^2 + p^2`. The integers are
kept as raw values of the recurrence, i.e., they are never reduced by their gcd."""

import math
from collections import deque
from collections.abc import Iterator
from fractions import Fraction
from typing import NamedTuple, Optional

from ..core.limits import DEFAULT_LIMITS, Limits
from ..core.series import SeriesParams, _check_index, alpha


class ConvergentPair(NamedTuple):
    """The raw integers of the reduite of order ``m`` of the remainder of rank ``n``."""

    n: int
    """Partial-sum order (rank of the remainder)."""

    m: int
    """Order of the reduite."""

    A: int
    """Numerator of the reduite, as given by the recurrence."""

    B: int
    """Denominator of the reduite, as given by the recurrence."""

    @property
    def reduite(self) -> Fraction:
        """The reduite :math:`A_m / B_m`, in lowest terms."""
        return Fraction(self.A, self.B)


def convergents(
    params: SeriesParams, n: int, m_max: int, limits: Limits = DEFAULT_LIMITS
) -> Iterator[ConvergentPair]:
    """Streams the convergents of orders ``0, 1, ..., m_max`` of the remainder of rank
    ``n``, retaining only the last two pairs at any time.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order.
    m_max : int
        Last order of the reduites to yield.
    limits : Limits, optional
        Resource guards; ``m_max`` cannot exceed ``limits.max_order``.

    Yields
    ------
    ConvergentPair
        The convergents, in increasing order of ``m``.

    Raises
    ------
    ValueError
        Raises if ``n`` or ``m_max`` are negative.
    ResourceLimitError
        Raises if ``m_max`` exceeds the configured maximum order.
    """
    _check_index("m_max", m_max)
    a = alpha(params, n)
    limits.check_order(m_max)
    p2 = params.p * params.p
    A_prev, B_prev = 1, a
    yield ConvergentPair(n, 0, A_prev, B_prev)
    if m_max == 0:
        return
    A, B = a, a * a + p2
    yield ConvergentPair(n, 1, A, B)
    for k in range(2, m_max + 1):
        c = p2 * k * k
        A, A_prev = a * A + c * A_prev, A
        B, B_prev = a * B + c * B_prev, B
        yield ConvergentPair(n, k, A, B)


def last_convergents(
    params: SeriesParams,
    n: int,
    m: int,
    count: int = 1,
    limits: Limits = DEFAULT_LIMITS,
) -> tuple[ConvergentPair, ...]:
    """Returns the ``count`` convergents of orders ``m, ..., m + count - 1``, computed
    in a single pass of the recurrence."""
    _check_index("m", m)
    if count < 1:
        raise ValueError(f"At least one convergent must be requested; got {count}.")
    return tuple(deque(convergents(params, n, m + count - 1, limits), maxlen=count))


def reduite(
    params: SeriesParams, n: int, m: int, limits: Limits = DEFAULT_LIMITS
) -> Fraction:
    r"""Computes the reduite :math:`\rho_{p,q,m}^{(n)} = A_m / B_m` of order ``m`` of
    the remainder of rank ``n``, in lowest terms.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order.
    m : int
        Order of the reduite.
    limits : Limits, optional
        Resource guards.

    Returns
    -------
    Fraction
        The exact reduite. At ``m = 0``, it is :math:`1/\alpha_{p,q}^{(n)}`.

    Raises
    ------
    ResourceLimitError
        Raises if ``m`` exceeds the configured maximum order.
    """
    (pair,) = last_convergents(params, n, m, 1, limits)
    return pair.reduite


def determinant(
    params: SeriesParams, n: int, m: int, limits: Limits = DEFAULT_LIMITS
) -> int:
    """Computes :math:`A_{m+1} B_m - A_m B_{m+1}` from the convergents themselves.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order.
    m : int
        Order of the first of the two consecutive reduites.
    limits : Limits, optional
        Resource guards.

    Returns
    -------
    int
        The determinant, which equals :func:`determinant_closed_form`.
    """
    this, succ = last_convergents(params, n, m, 2, limits)
    return succ.A * this.B - this.A * succ.B


def determinant_closed_form(params: SeriesParams, m: int) -> int:
    """Closed form :math:`(-1)^{m+1} p^{2m+2} ((m+1)!)^2` of :func:`determinant`, which
    does not depend on ``n`` nor on ``q``."""
    _check_index("m", m)
    sign = 1 if m % 2 else -1
    return sign * params.p ** (2 * m + 2) * math.factorial(m + 1) ** 2


def check_determinants(
    params: SeriesParams, n: int, m_max: int, limits: Limits = DEFAULT_LIMITS
) -> Optional[int]:
    """Checks the determinant identity for every ``m`` in ``[0, m_max]`` in a single
    stream of the recurrence.

    Returns
    -------
    int or None
        The first order ``m`` at which the identity is violated, or ``None`` if it holds
        everywhere.
    """
    p2 = params.p * params.p
    expected = -p2  # closed form at m = 0
    previous: Optional[ConvergentPair] = None
    for pair in convergents(params, n, m_max + 1, limits):
        if previous is not None:
            m = previous.m
            if pair.A * previous.B - previous.A * pair.B != expected:
                return m
            expected *= -p2 * (m + 2) * (m + 2)
        previous = pair
    return None


def b_bounds(params: SeriesParams, n: int, m: int) -> tuple[int, int, int]:
    r"""Computes the bounds on the denominator :math:`B_m` of the reduites.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order.
    m : int
        Order of the reduite.

    Returns
    -------
    tuple of 3 ints
        The lower bound :math:`\alpha^{m+1}`, the refined lower bound
        :math:`\alpha^{m+1} + \frac{m(m+1)(2m+1)}{6} p^2 \alpha^{m-1}` (equal to the
        former at ``m = 0``) and the upper bound :math:`(\alpha + pm)^{m+1}`, where
        :math:`\alpha = \alpha_{p,q}^{(n)}`.
    """
    _check_index("m", m)
    a = alpha(params, n)
    lower = a ** (m + 1)
    refined = lower
    if m > 0:
        refined += m * (m + 1) * (2 * m + 1) // 6 * params.p**2 * a ** (m - 1)
    upper = (a + params.p * m) ** (m + 1)
    return lower, refined, upper


def check_b_bounds(
    params: SeriesParams, n: int, m_max: int, limits: Limits = DEFAULT_LIMITS
) -> Optional[int]:
    """Checks ``lower <= refined <= B_m <= upper`` (see :func:`b_bounds`) for every
    ``m`` in ``[0, m_max]``.

    Returns
    -------
    int or None
        The first order ``m`` at which the bounds are violated, or ``None``.
    """
    for pair in convergents(params, n, m_max, limits):
        lower, refined, upper = b_bounds(params, n, pair.m)
        if not lower <= refined <= pair.B <= upper:
            return pair.m
    return None
