r"""This module contains the acceleration sequences of CHA series.

Overview
========

It contains the following submodules:

- :mod:`chaccel.accel.extractors`: the closed set of extractors :math:`\zeta` (identity,
  square, cube, power, geometric and linear) used by the semi-extracted and extracted
  diagonal sequences, with their textual form.
- :mod:`chaccel.accel.kernels`: the shared kernel :func:`accel_value` and the U, V, W
  and :math:`W_\zeta` sequences, both as functions and as iteration policies
  (:class:`AccelKind`) that the analysis layer can iterate generically.
- :mod:`chaccel.accel.aitken`: Aitken's :math:`\Delta^2` process on exact rationals and
  its application to the partial sums.

Submodules
==========

.. autosummary::
   :toctree: generated
   :template: module.rst

   aitken
   extractors
   kernels
"""

__all__ = [
    "AccelKind",
    "ExtractorSpec",
    "U",
    "V",
    "W",
    "WZeta",
    "accel_value",
    "aitken_delta2",
    "aitken_sequence",
    "parse_kind",
    "u_sequence",
    "v_sequence",
    "w_extracted",
    "w_value",
    "w_zeta_value",
]

from .aitken import aitken_delta2, aitken_sequence
from .extractors import ExtractorSpec
from .kernels import (
    U,
    V,
    W,
    AccelKind,
    WZeta,
    accel_value,
    parse_kind,
    u_sequence,
    v_sequence,
    w_extracted,
    w_value,
    w_zeta_value,
)
