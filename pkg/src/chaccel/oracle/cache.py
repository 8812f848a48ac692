"""On-disk cache of reference sums.

Each reference is stored in its own text file, named after the parameters of the series
and the requested number of digits, e.g., ``S_p2_q1_d40.ref``::

    chaccel-reference 1
    p=2 q=1 digits=40 guaranteed=41 order=37
    lo=<numerator>/<denominator>
    hi=<numerator>/<denominator>

Files with a different header version are ignored."""

import logging
import os
import warnings
from fractions import Fraction
from typing import Optional

from ..contfrac.enclosures import Enclosure
from ..core.series import SeriesParams
from ..util.io import read_text, write_text
from .reference import ReferenceSum

_logger = logging.getLogger(__name__)

CACHE_VERSION = 1
_HEADER = f"chaccel-reference {CACHE_VERSION}"


class ReferenceCache:
    """Cache of :class:`ReferenceSum` instances in the given directory.

    Parameters
    ----------
    directory : str
        The directory holding the cache files. It is created on the first write.
    """

    def __init__(self, directory: str) -> None:
        self.directory = directory

    def path(self, params: SeriesParams, digits: int) -> str:
        """Path of the file holding the reference of the given series and digits."""
        name = f"S_p{params.p}_q{params.q}_d{digits}.ref"
        return os.path.join(self.directory, name)

    def get(self, params: SeriesParams, digits: int) -> Optional[ReferenceSum]:
        """Loads the reference of the given series and digits, if cached.

        Raises
        ------
        ValueError
            Raises if the file exists but is malformed.
        """
        filename = self.path(params, digits)
        if not os.path.isfile(filename):
            return None
        lines = read_text(filename).splitlines()
        if not lines or lines[0].strip() != _HEADER:
            warnings.warn(
                f"Ignoring cached reference '{filename}' with an unknown header.",
                RuntimeWarning,
            )
            return None
        try:
            meta = dict(field.split("=", 1) for field in lines[1].split())
            bounds = dict(line.split("=", 1) for line in lines[2:4])
            stored = SeriesParams(int(meta["p"]), int(meta["q"]))
            enclosure = Enclosure(Fraction(bounds["lo"]), Fraction(bounds["hi"]), "S")
            ref = ReferenceSum(
                stored, enclosure, int(meta["guaranteed"]), int(meta["order"])
            )
        except (IndexError, KeyError, ValueError) as e:
            raise ValueError(f"Malformed cached reference '{filename}'.") from e
        if stored != params or int(meta["digits"]) != digits:
            raise ValueError(
                f"Cached reference '{filename}' does not match {params} at {digits} "
                "digits."
            )
        _logger.debug("Loaded reference of %s at %d digits from cache", params, digits)
        return ref

    def put(self, ref: ReferenceSum, digits: int) -> str:
        """Stores the reference computed for the given number of digits.

        Returns
        -------
        str
            The path of the written file.
        """
        p, q = ref.params.p, ref.params.q
        enclosure = ref.enclosure
        text = (
            f"{_HEADER}\n"
            f"p={p} q={q} digits={digits} guaranteed={ref.guaranteed_digits} "
            f"order={ref.order_used}\n"
            f"lo={enclosure.lo.numerator}/{enclosure.lo.denominator}\n"
            f"hi={enclosure.hi.numerator}/{enclosure.hi.denominator}\n"
        )
        return write_text(self.path(ref.params, digits), text)
