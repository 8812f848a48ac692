r"""The acceleration sequences of CHA series.

All of them are read off the same two-argument kernel

.. math:: (m, n) \mapsto S_{p,q}^{(n)} + (-1)^{n+1} \rho_{p,q,m}^{(n)},

along different axes: U fixes the reduite order ``m`` and lets ``n`` vary, V fixes the
partial-sum order ``n`` and lets ``m`` vary, W walks the diagonal ``m = n`` and
:math:`W_\zeta` pairs the reduite order ``n`` with the partial-sum order
:math:`\zeta(n)`."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..contfrac.convergents import convergents, reduite
from ..core.limits import DEFAULT_LIMITS, Limits
from ..core.series import SeriesParams, _check_index, partial_sum, partial_sums_at
from .extractors import IDENTITY, ExtractorSpec


def _signed(n: int, x: Fraction) -> Fraction:
    """Internal utility returning ``(-1)**(n + 1) * x``."""
    return x if n % 2 else -x


def _nonempty(name: str, indices: Iterable[int]) -> list[int]:
    """Internal utility validating a non-empty list of non-negative indices."""
    indices = list(indices)
    if not indices:
        raise ValueError(f"`{name}` must contain at least one index.")
    for i in indices:
        _check_index(name, i)
    return indices


def accel_value(
    params: SeriesParams, m: int, n: int, limits: Limits = DEFAULT_LIMITS
) -> Fraction:
    r"""Computes the acceleration value
    :math:`S_{p,q}^{(n)} + (-1)^{n+1} \rho_{p,q,m}^{(n)}`.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    m : int
        Order of the reduite.
    n : int
        Partial-sum order.
    limits : Limits, optional
        Resource guards.

    Returns
    -------
    Fraction
        The exact value, whose error w.r.t. :math:`S_{p,q}` is the error of the reduite
        w.r.t. the remainder of rank ``n``.

    Raises
    ------
    ResourceLimitError
        Raises if ``m`` or ``n`` exceed the configured maxima.

    Examples
    --------
    >>> accel_value(SeriesParams(2, 1), 1, 1)
    Fraction(40, 51)
    """
    _check_index("n", n)
    limits.check_sum_order(n)
    return partial_sum(params, n) + _signed(n, reduite(params, n, m, limits))


def u_sequence(
    params: SeriesParams,
    m: int,
    ns: Iterable[int],
    limits: Limits = DEFAULT_LIMITS,
) -> list[Fraction]:
    """Computes the U sequence of order ``m``, i.e., the acceleration values at fixed
    reduite order ``m`` and at the partial-sum orders ``ns``. Partial sums are obtained
    by jumping from one order to the next.

    Raises
    ------
    ValueError
        Raises if ``ns`` is empty or contains negative orders.
    """
    ns = _nonempty("ns", ns)
    limits.check_sum_order(max(ns))
    sums = partial_sums_at(params, ns)
    return [s + _signed(n, reduite(params, n, m, limits)) for n, s in zip(ns, sums)]


def v_sequence(
    params: SeriesParams,
    n: int,
    ms: Iterable[int],
    limits: Limits = DEFAULT_LIMITS,
) -> list[Fraction]:
    """Computes the V sequence of order ``n``, i.e., the acceleration values at fixed
    partial-sum order ``n`` and at the reduite orders ``ms``, all from a single stream
    of convergents.

    Raises
    ------
    ValueError
        Raises if ``ms`` is empty or contains negative orders.
    """
    ms = _nonempty("ms", ms)
    limits.check_sum_order(n)
    s = partial_sum(params, n)
    wanted = set(ms)
    values: dict[int, Fraction] = {}
    for pair in convergents(params, n, max(ms), limits):
        if pair.m in wanted:
            values[pair.m] = s + _signed(n, pair.reduite)
    return [values[m] for m in ms]


def w_value(params: SeriesParams, n: int, limits: Limits = DEFAULT_LIMITS) -> Fraction:
    """Computes the diagonal value of the W sequence at ``n``, i.e.,
    :func:`accel_value` at ``m = n``."""
    return accel_value(params, n, n, limits)


def w_zeta_value(
    params: SeriesParams,
    zeta: ExtractorSpec,
    n: int,
    limits: Limits = DEFAULT_LIMITS,
) -> Fraction:
    r"""Computes the semi-extracted value
    :math:`S_{p,q}^{(\zeta(n))} + (-1)^{\zeta(n)+1} \rho_{p,q,n}^{(\zeta(n))}`.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    zeta : ExtractorSpec
        The extractor giving the partial-sum order.
    n : int
        Order of the reduite.
    limits : Limits, optional
        Resource guards; ``zeta(n)`` cannot exceed ``limits.max_sum_order``.

    Returns
    -------
    Fraction
        The exact value.
    """
    _check_index("n", n)
    return accel_value(params, n, zeta(n), limits)


def w_extracted(
    params: SeriesParams,
    zeta: ExtractorSpec,
    n: int,
    limits: Limits = DEFAULT_LIMITS,
) -> Fraction:
    r"""Computes the fully extracted diagonal value :math:`w_{p,q}^{(\zeta(n))}`."""
    _check_index("n", n)
    return w_value(params, zeta(n), limits)


@dataclass(frozen=True)
class AccelKind:
    """Base class of the iteration policies over the acceleration kernel."""

    @property
    def name(self) -> str:
        """Short name of the sequence, e.g., ``"u"``."""
        raise NotImplementedError

    def values(
        self,
        params: SeriesParams,
        indices: Sequence[int],
        limits: Limits = DEFAULT_LIMITS,
    ) -> list[Fraction]:
        """Computes the terms of the sequence at the given indices."""
        raise NotImplementedError

    def orders(self, index: int) -> tuple[int, int]:
        """Returns the pair ``(m, n)`` of reduite and partial-sum orders of the kernel
        evaluated at the given index of the sequence."""
        raise NotImplementedError

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class U(AccelKind):
    """U sequence of order ``m``, indexed by the partial-sum order."""

    m: int

    @property
    def name(self) -> str:
        return f"u(m={self.m})"

    def values(self, params, indices, limits=DEFAULT_LIMITS):
        return u_sequence(params, self.m, indices, limits)

    def orders(self, index: int) -> tuple[int, int]:
        return self.m, index


@dataclass(frozen=True)
class V(AccelKind):
    """V sequence of order ``n``, indexed by the reduite order."""

    n: int

    @property
    def name(self) -> str:
        return f"v(n={self.n})"

    def values(self, params, indices, limits=DEFAULT_LIMITS):
        return v_sequence(params, self.n, indices, limits)

    def orders(self, index: int) -> tuple[int, int]:
        return index, self.n


@dataclass(frozen=True)
class W(AccelKind):
    """Diagonal W sequence."""

    @property
    def name(self) -> str:
        return "w"

    def values(self, params, indices, limits=DEFAULT_LIMITS):
        return [w_value(params, n, limits) for n in _nonempty("indices", indices)]

    def orders(self, index: int) -> tuple[int, int]:
        return index, index


@dataclass(frozen=True)
class WZeta(AccelKind):
    """Semi-extracted diagonal sequence :math:`W_\\zeta`."""

    zeta: ExtractorSpec = IDENTITY

    @property
    def name(self) -> str:
        return f"wzeta({self.zeta})"

    def values(self, params, indices, limits=DEFAULT_LIMITS):
        return [
            w_zeta_value(params, self.zeta, n, limits)
            for n in _nonempty("indices", indices)
        ]

    def orders(self, index: int) -> tuple[int, int]:
        return index, self.zeta(index)


def parse_kind(
    kind: str,
    m: Union[int, None] = None,
    n: Union[int, None] = None,
    zeta: Union[str, ExtractorSpec, None] = None,
) -> AccelKind:
    """Builds the iteration policy from its short name, i.e., ``"u"`` (which requires
    ``m``), ``"v"`` (which requires ``n``), ``"w"`` or ``"wzeta"`` (which requires
    ``zeta``).

    Raises
    ------
    ValueError
        Raises if the name is unknown or a required order is missing.
    """
    kind = kind.lower()
    if kind == "u":
        if m is None:
            raise ValueError("The U sequence requires a fixed reduite order `m`.")
        return U(m)
    if kind == "v":
        if n is None:
            raise ValueError("The V sequence requires a fixed partial-sum order `n`.")
        return V(n)
    if kind == "w":
        return W()
    if kind == "wzeta":
        if zeta is None:
            raise ValueError("The W_zeta sequence requires an extractor `zeta`.")
        if isinstance(zeta, str):
            zeta = ExtractorSpec.parse(zeta)
        return WZeta(zeta)
    raise ValueError(f"Unknown acceleration kind '{kind}'.")
