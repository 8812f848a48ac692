r"""Estimates of the linear rate :math:`\chi_{p,q}` of the diagonal W sequence, i.e.,
of the limit of :math:`|w^{(n+1)} - S_{p,q}| / |w^{(n)} - S_{p,q}|`, which is known to
lie in :math:`(1/9e^2, 1/4e^2)` and is believed not to depend on ``(p, q)``."""

import logging
from fractions import Fraction
from typing import Optional

from ..accel.kernels import w_value
from ..contfrac.enclosures import closed_form_bounds
from ..core.limits import DEFAULT_LIMITS, Limits, ResourceLimitError
from ..core.rendering import log10
from ..core.series import SeriesParams, _check_index
from ..oracle.cache import ReferenceCache
from ..oracle.reference import resolve_errors
from .rates import _start_digits
from .reports import ChiEstimate, log10_interval

_logger = logging.getLogger(__name__)

CHI_REL_TOL = Fraction(1, 10**7)
"""Relative width of the error intervals required to estimate the rate."""


def chi_estimate(
    params: SeriesParams,
    n: int,
    rel_tol: Fraction = CHI_REL_TOL,
    limits: Limits = DEFAULT_LIMITS,
    cache: Optional[ReferenceCache] = None,
) -> ChiEstimate:
    """Estimates :math:`\\log_{10} (|w^{(n+1)} - S| / |w^{(n)} - S|)`, with certified
    error bars.

    The precision of the oracle is raised automatically until both errors are resolved
    to the relative tolerance, i.e., roughly :math:`1.53 n` digits are needed.

    Parameters
    ----------
    params : SeriesParams
        Parameters of the series.
    n : int
        Order of the diagonal.
    rel_tol : Fraction, optional
        Relative width of the error intervals. By default, ``1e-7``.
    limits : Limits, optional
        Resource guards.
    cache : ReferenceCache, optional
        On-disk cache of references.

    Returns
    -------
    ChiEstimate
        The estimate and its error bar.

    Raises
    ------
    ResourceLimitError
        Raises if the required oracle precision exceeds the guards.
    """
    _check_index("n", n)
    values = [w_value(params, n, limits), w_value(params, n + 1, limits)]
    lowest = closed_form_bounds(params, n + 1, n + 1)[0]
    start = _start_digits(log10(lowest), float(rel_tol))
    if start > limits.max_digits:
        raise ResourceLimitError(
            f"Estimating the rate of {params} at n={n} needs an oracle precision of "
            f"about {start} digits, above the configured maximum {limits.max_digits}."
        )
    _logger.debug("Estimating the rate of %s at n=%d from %d digits", params, n, start)
    ref, (e0, e1) = resolve_errors(
        params,
        values,
        rel_tol=rel_tol,
        start_digits=start,
        limits=limits,
        cache=cache,
        strict=True,
    )
    l0, l1 = log10_interval(e0), log10_interval(e1)
    assert l0 is not None and l1 is not None, "errors must be resolved in strict mode"
    lo, hi = l1[0] - l0[1], l1[1] - l0[0]
    return ChiEstimate(params, n, (lo + hi) / 2, (hi - lo) / 2, ref.guaranteed_digits)
