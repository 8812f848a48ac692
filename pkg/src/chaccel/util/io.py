"""A collection of utilities for input/output operations. The goals of this module are:

- rendering tabular data as CSV (``'.'`` decimal separator, header row, LF line
  endings) or JSON, and parsing it back.
- reading and (atomically) writing UTF-8 text files, with errors that name the
  offending path.
"""

import csv
import io as _io
import json
import os
import sys
import tempfile
from collections.abc import Mapping, Sequence
from typing import Any, Literal, Optional, TextIO

OutputFormat = Literal["csv", "json"]


def to_csv(columns: Sequence[str], rows: Sequence[Mapping[str, Any]]) -> str:
    """Renders the rows as CSV text, with a header row and LF line endings.

    Parameters
    ----------
    columns : sequence of str
        Names of the columns, in order.
    rows : sequence of mappings
        The rows; missing columns are left empty.

    Returns
    -------
    str
        The CSV text. With no rows, only the header is returned.
    """
    buffer = _io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=list(columns), lineterminator="\n", restval=""
    )
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def from_csv(text: str) -> tuple[list[str], list[dict[str, str]]]:
    """Parses CSV text written by :func:`to_csv`.

    Returns
    -------
    tuple of list of str and list of dicts
        The column names and the rows, with all values as strings.
    """
    reader = csv.DictReader(_io.StringIO(text))
    rows = list(reader)
    return list(reader.fieldnames or ()), rows


def to_json(payload: Mapping[str, Any]) -> str:
    """Renders the payload as an indented JSON object, with a trailing newline."""
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> dict[str, Any]:
    """Parses a JSON object.

    Raises
    ------
    ValueError
        Raises if the text is not a JSON object.
    """
    payload = json.loads(text)
    if not isinstance(payload, dict):
        raise ValueError(f"Expected a JSON object; got {type(payload).__name__}.")
    return payload


def read_text(filename: str) -> str:
    """Reads a UTF-8 text file.

    Raises
    ------
    OSError
        Raises if the file cannot be read, naming the path.
    """
    try:
        with open(filename, encoding="utf-8", newline="") as f:
            return f.read()
    except OSError as e:
        raise OSError(f"Cannot read '{filename}': {e.strerror or e}.") from e


def write_text(filename: str, text: str) -> str:
    """Writes a UTF-8 text file atomically, i.e., through a temporary file in the same
    directory that replaces the target at the end.

    Returns
    -------
    str
        The name of the written file.

    Raises
    ------
    OSError
        Raises if the file cannot be written, naming the path.
    """
    directory = os.path.dirname(os.path.abspath(filename))
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
                f.write(text)
            os.replace(tmp, filename)
        except BaseException:
            if os.path.exists(tmp):
                os.remove(tmp)
            raise
    except OSError as e:
        raise OSError(f"Cannot write '{filename}': {e.strerror or e}.") from e
    return filename


def write_output(text: str, destination: Optional[str] = None) -> None:
    """Writes the text to the given file, or to the standard output if ``None`` or
    ``"-"``."""
    if destination is None or destination == "-":
        stream: TextIO = sys.stdout
        stream.write(text)
        stream.flush()
    else:
        write_text(destination, text)
