r"""This module contains the self-contained oracle of the package, i.e., certified
reference values of the sums :math:`S_{p,q}` used as ground truth by every error and
rate computation.

Overview
========

It contains the following submodules:

- :mod:`chaccel.oracle.reference`: the :class:`ReferenceSum` enclosures built from the
  diagonal continued-fraction enclosures, the certified error intervals of
  approximations, the number of correct digits and :func:`resolve_errors`, which
  raises the precision of the oracle until a set of errors is resolved.
- :mod:`chaccel.oracle.cache`: an on-disk cache of references, one versioned text file
  per series and number of digits.

Submodules
==========

.. autosummary::
   :toctree: generated
   :template: module.rst

   cache
   reference
"""

__all__ = [
    "ErrorInterval",
    "ReferenceCache",
    "ReferenceSum",
    "certified_error",
    "digits_correct",
    "reference_sum",
    "resolve_errors",
]

from .cache import ReferenceCache
from .reference import (
    ErrorInterval,
    ReferenceSum,
    certified_error,
    digits_correct,
    reference_sum,
    resolve_errors,
)
