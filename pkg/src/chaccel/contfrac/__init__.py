r"""This module contains the generalized continued fraction of the remainders of CHA
series, and how it is used to certify the sums.

Overview
========

It contains the following submodules:

- :mod:`chaccel.contfrac.convergents`: the streaming two-term recurrences of the raw
  integers :math:`A_m, B_m` of the reduites, the determinant identity
  :math:`A_{m+1} B_m - A_m B_{m+1} = (-1)^{m+1} p^{2m+2} ((m+1)!)^2` and the bounds on
  :math:`B_m`, together with routines checking them on whole ranges of orders.
- :mod:`chaccel.contfrac.enclosures`: certified :class:`Enclosure` instances of the
  remainders and of the sums, built from consecutive (hence adjacent) reduites, and the
  exact and closed-form brackets of the error of a reduite.

Submodules
==========

.. autosummary::
   :toctree: generated
   :template: module.rst

   convergents
   enclosures
"""

__all__ = [
    "ConvergentPair",
    "Enclosure",
    "b_bounds",
    "check_b_bounds",
    "check_determinants",
    "closed_form_bounds",
    "convergents",
    "determinant",
    "determinant_closed_form",
    "error_bracket",
    "last_convergents",
    "reduite",
    "remainder_enclosure",
    "sum_enclosure",
]

from .convergents import (
    ConvergentPair,
    b_bounds,
    check_b_bounds,
    check_determinants,
    convergents,
    determinant,
    determinant_closed_form,
    last_convergents,
    reduite,
)
from .enclosures import (
    Enclosure,
    closed_form_bounds,
    error_bracket,
    remainder_enclosure,
    sum_enclosure,
)
