r"""This module contains the empirical checks of the rates of convergence of the partial
sums and of the acceleration sequences, all carried out against the certified oracle.

Overview
========

It contains the following submodules:

- :mod:`chaccel.analysis.reports`: the records returned by the checks, whose values
  all carry certified error bars.
- :mod:`chaccel.analysis.rates`: error ratios of any sequence, normalized errors
  against the asymptotic equivalents of the partial sums, of the U sequences and of the
  semi-extracted diagonal, the estimate of the constant of the V sequences, the
  comparison of U and V, the bracket of the rate of the W sequence and the Aitken
  identity.
- :mod:`chaccel.analysis.chi`: high-precision estimates of the linear rate of the W
  sequence.
- :mod:`chaccel.analysis.scan`: the profile of correct digits at a fixed budget of
  orders, and the comparison of semi-extracted and fully extracted diagonals.

Submodules
==========

.. autosummary::
   :toctree: generated
   :template: module.rst

   chi
   rates
   reports
   scan
"""

__all__ = [
    "aitken_check",
    "budget_scan",
    "chi_estimate",
    "rate_report",
    "semi_vs_full_extraction",
    "theorem1_check",
    "theorem2_check",
    "theorem3_fit",
    "theorem4_check",
    "theorem5_check",
    "theorem6_check",
]

from .chi import chi_estimate
from .rates import (
    aitken_check,
    rate_report,
    theorem1_check,
    theorem2_check,
    theorem3_fit,
    theorem4_check,
    theorem5_check,
    theorem6_check,
)
from .scan import budget_scan, semi_vs_full_extraction
