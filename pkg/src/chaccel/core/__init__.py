r"""This module contains the core components on top of which the package is built.

Overview
========

It contains the following submodules:

- :mod:`chaccel.core.limits`: the resource guards (:class:`Limits`) accepted by every
  guarded computation, together with the exceptions raised when a guard is hit or a
  sequence transformation degenerates.
- :mod:`chaccel.core.series`: the parameters :class:`SeriesParams` of an alternating
  congruo-harmonic (CHA) series, its terms, the partial denominators
  :math:`\alpha_{p,q}^{(n)}` and exact partial sums, either one at a time (via binary
  splitting) or incrementally.
- :mod:`chaccel.core.rendering`: rendering of exact rationals as decimals, parsing of
  decimal strings (with either ``'.'`` or ``','`` as separator) and logarithms of
  rationals that are far outside the range of floats.

Submodules
==========

.. autosummary::
   :toctree: generated
   :template: module.rst

   limits
   rendering
   series
"""

__all__ = [
    "DEFAULT_LIMITS",
    "DecimalRendering",
    "DegenerateTransformError",
    "ExactRational",
    "Limits",
    "ResourceLimitError",
    "SeriesParams",
    "alpha",
    "floor_log10",
    "format_scientific",
    "log10",
    "parse_decimal",
    "partial_sum",
    "partial_sums",
    "partial_sums_at",
    "precision",
    "tail_sum",
    "term",
    "to_decimal",
]

from .limits import (
    DEFAULT_LIMITS,
    DegenerateTransformError,
    Limits,
    ResourceLimitError,
)
from .rendering import (
    DecimalRendering,
    floor_log10,
    format_scientific,
    log10,
    parse_decimal,
    precision,
    to_decimal,
)
from .series import (
    ExactRational,
    SeriesParams,
    alpha,
    partial_sum,
    partial_sums,
    partial_sums_at,
    tail_sum,
    term,
)
