r"""Command-line interface of the package.

Overview
========

The ``chaccel`` command exposes every computation of the package through subcommands
(``sum``, ``reduite``, ``accel``, ``oracle``, ``rates``, ``chi``, ``aitken``, ``scan``,
``extract`` and ``table``), whose results are emitted as CSV or JSON records.

Submodules
==========

.. autosummary::
   :toctree: generated
   :template: module.rst

   main
   records
   tables
"""

__all__ = ["OutputRecord", "emit", "main", "parse_records"]

from .main import main
from .records import OutputRecord, emit, parse_records
