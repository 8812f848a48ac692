r"""Alternating congruo-harmonic (CHA) series, their terms and exact partial sums.

For a pair of positive integers :math:`(p, q)`, the CHA series is

.. math:: S_{p,q} = \sum_{k=0}^{+\infty} \frac{(-1)^k}{pk + q},

and its partial sum of rank :math:`n` is
:math:`S_{p,q}^{(n)} = \sum_{k=0}^{n} \frac{(-1)^k}{pk + q}`. All values are returned as
exact :class:`fractions.Fraction` instances."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

ExactRational = Fraction
"""Exact rational type used throughout the package. Fractions are always stored in
lowest terms with a positive denominator."""

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class SeriesParams:
    """The pair of positive integers :math:`(p, q)` defining a CHA series.

    Parameters
    ----------
    p : int
        The step of the series, i.e., the general term is :math:`(-1)^k / (pk + q)`.
    q : int
        The offset of the series.

    Raises
    ------
    ValueError
        Raises if ``p`` or ``q`` are not positive integers.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        for name in ("p", "q"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"`{name}` must be an integer >= 1; got {value!r}.")

    def __str__(self) -> str:
        return f"(p={self.p}, q={self.q})"


def _check_index(name: str, value: int) -> None:
    """Internal utility to validate non-negative integer indices."""
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"`{name}` must be a non-negative integer; got {value!r}.")


def alpha(params: SeriesParams, n: int) -> int:
    r"""Computes the partial denominator :math:`\alpha_{p,q}^{(n)} = 2pn + p + 2q` of
    the continued fraction of the remainder after rank ``n``.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order.

    Returns
    -------
    int
        The positive integer :math:`2pn + p + 2q`.
    """
    _check_index("n", n)
    p = params.p
    return 2 * p * n + p + 2 * params.q


def term(params: SeriesParams, k: int) -> Fraction:
    """Computes the ``k``-th term :math:`(-1)^k / (pk + q)` of the series.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    k : int
        Index of the term.

    Returns
    -------
    Fraction
        The exact value of the term.
    """
    _check_index("k", k)
    return Fraction(-1 if k % 2 else 1, params.p * k + params.q)


def _split(p: int, q: int, a: int, b: int) -> tuple[int, int]:
    """Internal binary-splitting routine, returning the unreduced numerator and
    denominator of the sum of the terms with indices in ``[a, b)``."""
    if b - a == 1:
        return (-1 if a % 2 else 1), p * a + q
    if b - a == 2:
        d0 = p * a + q
        d1 = d0 + p
        sign = -1 if a % 2 else 1
        return sign * (d1 - d0), d0 * d1
    mid = (a + b) // 2
    num_l, den_l = _split(p, q, a, mid)
    num_r, den_r = _split(p, q, mid, b)
    return num_l * den_r + num_r * den_l, den_l * den_r


def tail_sum(params: SeriesParams, a: int, b: int) -> Fraction:
    """Sums the terms with indices ``a`` to ``b`` (both included) via binary splitting,
    with a single reduction at the end.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    a : int
        First index of the summation.
    b : int
        Last index of the summation. If ``b < a``, the sum is empty and zero.

    Returns
    -------
    Fraction
        The exact value of the sum.
    """
    _check_index("a", a)
    if b < a:
        return Fraction(0)
    num, den = _split(params.p, params.q, a, b + 1)
    return Fraction(num, den)


def partial_sum(params: SeriesParams, n: int) -> Fraction:
    r"""Computes the partial sum :math:`S_{p,q}^{(n)}` of the first ``n + 1`` terms.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Partial-sum order.

    Returns
    -------
    Fraction
        The exact partial sum.

    Examples
    --------
    >>> partial_sum(SeriesParams(2, 1), 1)
    Fraction(2, 3)
    """
    _check_index("n", n)
    return tail_sum(params, 0, n)


def partial_sums(params: SeriesParams, n_max: int) -> Iterator[Fraction]:
    """Yields the partial sums of orders ``0, 1, ..., n_max`` incrementally, i.e., each
    one is obtained from the previous by adding the next term.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n_max : int
        Last partial-sum order to yield.

    Yields
    ------
    Fraction
        The exact partial sums, in increasing order.
    """
    _check_index("n_max", n_max)
    s = Fraction(0)
    for k in range(n_max + 1):
        s += term(params, k)
        yield s


def partial_sums_at(params: SeriesParams, ns: Iterable[int]) -> list[Fraction]:
    """Computes the partial sums at the given (possibly sparse and unsorted) orders,
    jumping from one to the next with :func:`tail_sum`.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    ns : iterable of int
        The partial-sum orders.

    Returns
    -------
    list of Fraction
        The exact partial sums, in the same order as ``ns``.
    """
    ns = list(ns)
    for n in ns:
        _check_index("n", n)
    sums: dict[int, Fraction] = {}
    last = -1
    s = Fraction(0)
    for n in sorted(set(ns)):
        s += tail_sum(params, last + 1, n)
        sums[n] = s
        last = n
    return [sums[n] for n in ns]
