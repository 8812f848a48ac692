"""A collection of utilities, i.e., :mod:`chaccel.util.io` for rendering, parsing,
reading and writing the text files (CSV, JSON and cached references) produced by the
package."""

__all__ = ["io"]

from . import io
