"""Resource guards and the exceptions raised by the package when one of them is hit.

Every guarded computation in :mod:`chaccel` accepts an optional ``limits`` keyword that
defaults to :data:`DEFAULT_LIMITS`. The guards bound the order of the continued-fraction
reduites (whose integers grow like :math:`(2pn)^{m+1}`), the number of decimals that can
be rendered and the precision of the oracle reference sums."""

import os
from collections.abc import Mapping
from dataclasses import dataclass, fields, replace
from typing import Any, Optional

ENV_MAX_DIGITS = "CHA_MAX_DIGITS"
"""Name of the environment variable overriding the oracle precision guard."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed one of the configured resource guards."""


class DegenerateTransformError(ZeroDivisionError):
    """Raised when a sequence transformation hits a vanishing denominator, e.g., the
    second difference in Aitken's delta-squared process."""


@dataclass(frozen=True)
class Limits:
    """Resource guards of the package.

    Parameters
    ----------
    max_order : int, optional
        Maximum order ``m`` of the continued-fraction reduites (and of the diagonal
        order used by the oracle). By default, ``100_000``.
    max_decimals : int, optional
        Maximum number of decimals for :func:`chaccel.core.rendering.to_decimal`. By
        default, ``100_000``.
    max_sum_order : int, optional
        Maximum order of the partial sums, which can be huge for the extracted
        sequences, e.g., with a geometric extractor. By default, ``10_000_000``.
    max_digits : int, optional
        Maximum number of guaranteed digits an oracle reference sum can be asked for.
        By default, ``5_000``.
    heavy_digits : int, optional
        Oracle precision above which the command-line interface asks for the explicit
        ``--heavy`` flag. By default, ``1_500``.

    Raises
    ------
    ValueError
        Raises if any of the guards is not a positive integer.
    """

    max_order: int = 100_000
    max_decimals: int = 100_000
    max_sum_order: int = 10_000_000
    max_digits: int = 5_000
    heavy_digits: int = 1_500

    def __post_init__(self) -> None:
        for field in fields(self):
            value = getattr(self, field.name)
            if not isinstance(value, int) or value <= 0:
                raise ValueError(
                    f"`{field.name}` must be a positive integer; got {value!r}."
                )

    @classmethod
    def from_env(
        cls, environ: Optional[Mapping[str, str]] = None, **overrides: Any
    ) -> "Limits":
        """Builds the guards from the environment, i.e., honouring
        :data:`ENV_MAX_DIGITS`, and then from the given keyword overrides (``None``
        values are ignored).

        Parameters
        ----------
        environ : mapping of str to str, optional
            The environment to read. By default, :data:`os.environ`.
        overrides
            Explicit values for the fields of this class.

        Returns
        -------
        Limits
            The resulting guards.

        Raises
        ------
        ValueError
            Raises if the environment variable is not an integer.
        """
        if environ is None:
            environ = os.environ
        limits = cls()
        raw = environ.get(ENV_MAX_DIGITS)
        if raw is not None and raw.strip():
            try:
                limits = replace(limits, max_digits=int(raw))
            except ValueError as e:
                raise ValueError(
                    f"{ENV_MAX_DIGITS} must be an integer; got {raw!r}."
                ) from e
        overrides = {k: v for k, v in overrides.items() if v is not None}
        return replace(limits, **overrides) if overrides else limits

    def check_order(self, m: int) -> None:
        """Raises :class:`ResourceLimitError` if ``m`` exceeds :attr:`max_order`."""
        if m > self.max_order:
            raise ResourceLimitError(
                f"Reduite order {m} exceeds the configured maximum {self.max_order}."
            )

    def check_sum_order(self, n: int) -> None:
        """Raises :class:`ResourceLimitError` if ``n`` exceeds :attr:`max_sum_order`."""
        if n > self.max_sum_order:
            raise ResourceLimitError(
                f"Partial-sum order {n} exceeds the configured maximum "
                f"{self.max_sum_order}."
            )

    def check_decimals(self, d: int) -> None:
        """Raises :class:`ResourceLimitError` if ``d`` exceeds :attr:`max_decimals`."""
        if d > self.max_decimals:
            raise ResourceLimitError(
                f"{d} decimals exceed the configured maximum {self.max_decimals}."
            )

    def check_digits(self, d: int) -> None:
        """Raises :class:`ResourceLimitError` if ``d`` exceeds :attr:`max_digits`."""
        if d > self.max_digits:
            raise ResourceLimitError(
                f"Oracle precision of {d} digits exceeds the configured maximum "
                f"{self.max_digits} (see {ENV_MAX_DIGITS})."
            )


DEFAULT_LIMITS = Limits()
"""The default resource guards."""
