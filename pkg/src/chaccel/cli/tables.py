"""Fixtures of the published tables, as displayed, with the computations reproducing
them.

Each cell stores the displayed string verbatim (with its ``","`` decimal separator) and
is deemed to match if the computed value lies within :math:`10^{-d}` of it, ``d`` being
the number of displayed decimals. This tolerance holds whether the display was rounded
or truncated."""

from fractions import Fraction
from typing import Literal, NamedTuple, Optional

from ..accel.kernels import accel_value
from ..analysis._parallel import pmap
from ..core.limits import DEFAULT_LIMITS, Limits
from ..core.rendering import parse_decimal
from ..core.series import SeriesParams, partial_sum

CellKind = Literal["sum", "accel"]

TABLE_IDS = (1, 2, 3)


class TableCell(NamedTuple):
    """A displayed cell, i.e., the partial sum at ``n`` or the acceleration value at
    orders ``(m, n)``."""

    table: int
    params: SeriesParams
    kind: CellKind
    n: int
    m: Optional[int]
    expected: str

    @property
    def label(self) -> str:
        p, q = self.params.p, self.params.q
        if self.kind == "sum":
            return f"S_{p},{q}^({self.n})"
        return f"u_{p},{q},{self.m}^({self.n})"

    @property
    def decimals(self) -> int:
        _, _, frac = self.expected.replace(",", ".").partition(".")
        return len(frac)

    @property
    def tolerance(self) -> Fraction:
        return Fraction(1, 10**self.decimals)

    def compute(self, limits: Limits = DEFAULT_LIMITS) -> Fraction:
        """Computes the exact value the cell displays."""
        if self.kind == "sum":
            limits.check_sum_order(self.n)
            return partial_sum(self.params, self.n)
        assert self.m is not None, "acceleration cells need a reduite order"
        return accel_value(self.params, self.m, self.n, limits)


class CellResult(NamedTuple):
    """Outcome of the comparison of a cell with its computed value."""

    cell: TableCell
    value: Fraction
    diff: Fraction
    """Signed difference between the computed and the displayed value."""

    @property
    def ok(self) -> bool:
        return abs(self.diff) <= self.cell.tolerance


_PARTIAL_SUMS = {
    (2, 1): ("0,787873", "0,785647", "0,78542316"),
    (1, 2): ("0,311730", "0,307351", "0,30690280"),
}
_PARTIAL_SUM_ORDERS = (100, 1000, 10000)

# rows are partial-sum orders n = 0, ..., 4, columns reduite orders m = 0, ..., 4
_ACCEL_GRID = (
    ("0,75000", "0,8000000", "0,77777778", "0,790123457", "0,782222222"),
    ("0,79167", "0,7843137", "0,78571429", "0,785276074", "0,785454545"),
    ("0,78333", "0,7855856", "0,78536585", "0,785406302", "0,785395537"),
    ("0,78631", "0,7853480", "0,78540373", "0,785397206", "0,785398385"),
    ("0,78492", "0,7854157", "0,78539682", "0,785398328", "0,785398135"),
)

_DIAGONALS = {
    (1, 1): ("0,66667", "0,693146417445", "0,693147179886527", "0,693147180559356"),
    (10, 1): ("0,91667", "0,938093859970", "0,938094286672162", "0,938094287032576"),
    (1, 10): ("0,05238", "0,052487740006", "0,052487740074957", "0,052487740074975"),
}
_DIAGONAL_ORDERS = (0, 3, 5, 7)


def table_cells(table_id: int) -> list[TableCell]:
    """Returns the cells of the given table, i.e., ``1`` (partial sums), ``2`` (the
    acceleration values of :math:`S_{2,1}` on a grid of orders) or ``3`` (diagonal
    values).

    Raises
    ------
    ValueError
        Raises if the table id is unknown.
    """
    if table_id == 1:
        return [
            TableCell(1, SeriesParams(*pq), "sum", n, None, shown)
            for pq, row in _PARTIAL_SUMS.items()
            for n, shown in zip(_PARTIAL_SUM_ORDERS, row)
        ]
    if table_id == 2:
        params = SeriesParams(2, 1)
        return [
            TableCell(2, params, "accel", n, m, shown)
            for n, row in enumerate(_ACCEL_GRID)
            for m, shown in enumerate(row)
        ]
    if table_id == 3:
        return [
            TableCell(3, SeriesParams(*pq), "accel", n, n, shown)
            for pq, row in _DIAGONALS.items()
            for n, shown in zip(_DIAGONAL_ORDERS, row)
        ]
    raise ValueError(f"Unknown table id {table_id}; expected one of {TABLE_IDS}.")


def _check_cell(cell: TableCell, limits: Limits) -> CellResult:
    value = cell.compute(limits)
    return CellResult(cell, value, value - parse_decimal(cell.expected))


def check_table(
    table_id: int, limits: Limits = DEFAULT_LIMITS, n_jobs: int = 1
) -> list[CellResult]:
    """Computes every cell of the given table and compares it with its displayed
    value, in the order of :func:`table_cells`."""
    return pmap(_check_cell, table_cells(table_id), n_jobs, limits=limits)
