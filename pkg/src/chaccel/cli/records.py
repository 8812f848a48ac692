"""Machine-readable records written by the command-line interface.

All values in the rows are strings, so that a record parsed back from either format is
equal to the one that was emitted. Exact fractions are written as
``"numerator/denominator"`` in base 10."""

from collections.abc import Mapping
from typing import Any, NamedTuple, Optional

from ..core.series import SeriesParams
from ..util.io import OutputFormat, from_csv, from_json, to_csv, to_json, write_output

SCHEMA_VERSION = "1"
"""Version of the layout of the JSON records."""


class OutputRecord(NamedTuple):
    """Output of one run of a subcommand."""

    command: str
    params: Optional[SeriesParams]
    columns: list[str]
    rows: list[dict[str, str]]
    oracle_digits: Optional[int] = None
    timing_ms: Optional[int] = None
    """Elapsed time, or ``None`` when timing is disabled."""
    summary: Optional[dict[str, str]] = None
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        """Converts the record to a JSON-serializable dictionary."""
        params = (
            None
            if self.params is None
            else {"p": self.params.p, "q": self.params.q}
        )
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "params": params,
            "columns": list(self.columns),
            "rows": [{c: row.get(c, "") for c in self.columns} for row in self.rows],
            "oracle_digits": self.oracle_digits,
            "timing_ms": self.timing_ms,
            "summary": dict(self.summary or {}),
        }

    @classmethod
    def from_dict(cls, payload: Mapping[str, Any]) -> "OutputRecord":
        """Rebuilds a record from :meth:`to_dict`'s output.

        Raises
        ------
        ValueError
            Raises if the schema version is unknown or a field is missing.
        """
        version = payload.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"Unsupported record schema version {version!r}.")
        try:
            params = payload["params"]
            return cls(
                command=payload["command"],
                params=(
                    None if params is None else SeriesParams(params["p"], params["q"])
                ),
                columns=list(payload["columns"]),
                rows=[dict(row) for row in payload["rows"]],
                oracle_digits=payload.get("oracle_digits"),
                timing_ms=payload.get("timing_ms"),
                summary=payload.get("summary") or None,
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed record: {e}.") from e

    def dumps(self, format: OutputFormat) -> str:
        """Renders the record as CSV (header and rows only) or as a JSON object."""
        if format == "csv":
            return to_csv(self.columns, self.rows)
        if format == "json":
            return to_json(self.to_dict())
        raise ValueError(f"Unknown output format '{format}'.")


def emit(
    record: OutputRecord, format: OutputFormat, destination: Optional[str] = None
) -> None:
    """Writes the record in the given format to ``destination``, or to the standard
    output if ``None`` or ``"-"``.

    Raises
    ------
    OSError
        Raises if the destination cannot be written, naming its path.
    """
    write_output(record.dumps(format), destination)


def parse_records(text: str, format: OutputFormat) -> OutputRecord:
    """Parses the output of :func:`emit`. CSV carries no metadata, so only the columns
    and rows of the returned record are meaningful in that case."""
    if format == "csv":
        columns, rows = from_csv(text)
        return OutputRecord("", None, columns, rows)
    if format == "json":
        return OutputRecord.from_dict(from_json(text))
    raise ValueError(f"Unknown output format '{format}'.")
