r"""Extractors :math:`\zeta`, i.e., strictly increasing maps of the naturals, from a
closed set of forms that can be written as text (e.g., on the command line)."""

from dataclasses import dataclass
from typing import Literal, Optional

ExtractorForm = Literal["identity", "square", "cube", "power", "geometric", "linear"]

_FORMS = ("identity", "square", "cube", "power", "geometric", "linear")
_MIN_ARG: dict[str, int] = {"power": 2, "geometric": 2, "linear": 1}
_SUPERLINEAR = frozenset(("square", "cube", "power", "geometric"))


@dataclass(frozen=True)
class ExtractorSpec:
    """A strictly increasing map :math:`\\zeta : \\mathbb{N} \\to \\mathbb{N}`.

    Parameters
    ----------
    form : {"identity", "square", "cube", "power", "geometric", "linear"}
        Form of the map, i.e., :math:`n`, :math:`n^2`, :math:`n^3`, :math:`n^e`,
        :math:`b^n` or :math:`cn`, respectively.
    arg : int, optional
        The exponent ``e >= 2`` for ``"power"``, the base ``b >= 2`` for
        ``"geometric"`` and the factor ``c >= 1`` for ``"linear"``. Must be ``None`` for
        the other forms.

    Raises
    ------
    ValueError
        Raises if the form is unknown or the argument is missing or invalid.
    """

    form: ExtractorForm
    arg: Optional[int] = None

    def __post_init__(self) -> None:
        if self.form not in _FORMS:
            raise ValueError(f"Unknown extractor form '{self.form}'.")
        min_arg = _MIN_ARG.get(self.form)
        if min_arg is None:
            if self.arg is not None:
                raise ValueError(f"Extractor '{self.form}' takes no argument.")
        elif not isinstance(self.arg, int) or self.arg < min_arg:
            raise ValueError(
                f"Extractor '{self.form}' requires an integer argument >= {min_arg}; "
                f"got {self.arg!r}."
            )

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"Extractors take non-negative integers; got {n}.")
        form = self.form
        if form == "identity":
            return n
        if form == "square":
            return n * n
        if form == "cube":
            return n * n * n
        if form == "power":
            return n**self.arg  # type: ignore[operator]
        if form == "geometric":
            return self.arg**n  # type: ignore[operator]
        return self.arg * n  # type: ignore[operator]

    @property
    def is_superlinear(self) -> bool:
        """Whether :math:`n = o(\\zeta(n))`, which is the case for all forms but
        ``"identity"`` and ``"linear"``."""
        return self.form in _SUPERLINEAR

    def __str__(self) -> str:
        return self.form if self.arg is None else f"{self.form}:{self.arg}"

    @classmethod
    def parse(cls, text: str) -> "ExtractorSpec":
        """Parses the textual form of an extractor, e.g., ``"square"``, ``"power:3"``
        or ``"geometric:2"``, i.e., the inverse of :meth:`__str__`.

        Raises
        ------
        ValueError
            Raises if the text does not describe a valid extractor.
        """
        form, sep, arg = text.strip().lower().partition(":")
        if not sep:
            return cls(form)  # type: ignore[arg-type]
        try:
            value = int(arg)
        except ValueError as e:
            raise ValueError(f"Invalid extractor argument in '{text}'.") from e
        return cls(form, value)  # type: ignore[arg-type]


IDENTITY = ExtractorSpec("identity")
SQUARE = ExtractorSpec("square")
CUBE = ExtractorSpec("cube")
