r"""**CH**\ A-series **accel**\ eration (**chaccel**, for short) is a library that
computes, in exact rational arithmetic, the acceleration sequences U, V, W and
:math:`W_\zeta` of the alternating congruo-harmonic series

.. math:: S_{p,q} = \sum_{k=0}^{+\infty} \frac{(-1)^k}{pk + q},

based on the generalized continued fraction of their remainders. It also provides
certified enclosures of the sums, a self-contained oracle and empirical checks of the
rates of convergence of these sequences.
"""

__version__ = "1.0.0"

__all__ = ["Enclosure", "ExtractorSpec", "Limits", "SeriesParams", "accel_value"]

from .accel.extractors import ExtractorSpec
from .accel.kernels import accel_value
from .contfrac.enclosures import Enclosure
from .core.limits import Limits
from .core.series import SeriesParams
