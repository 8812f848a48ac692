"""Entry point of the ``chaccel`` command.

Data are written to the standard output (or to ``--out``) as CSV or JSON records, and
diagnostics to the standard error. The exit code is ``0`` on success, ``1`` on usage
errors, ``2`` if a reproduced table does not match its published values and ``3`` if a
resource guard is hit."""

import argparse
import logging
import os
import sys
import time
from collections.abc import Sequence
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional, Union

from .. import __version__
from ..accel.extractors import ExtractorSpec
from ..accel.kernels import parse_kind
from ..analysis import (
    aitken_check,
    budget_scan,
    chi_estimate,
    semi_vs_full_extraction,
    theorem1_check,
    theorem2_check,
    theorem3_fit,
    theorem4_check,
    theorem5_check,
    theorem6_check,
)
from ..analysis._parallel import pmap
from ..analysis.rates import sequence_values
from ..analysis.reports import EquivalentPoint, RatePoint
from ..contfrac.convergents import convergents
from ..core.limits import (
    ENV_MAX_DIGITS,
    DegenerateTransformError,
    Limits,
    ResourceLimitError,
)
from ..core.rendering import format_scientific, to_decimal
from ..core.series import SeriesParams, partial_sums_at
from ..oracle.cache import ReferenceCache
from ..oracle.reference import digits_correct, reference_sum, resolve_errors
from .records import OutputRecord, emit
from .tables import TABLE_IDS, check_table

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_RESOURCE = 3


class UsageError(ValueError):
    """Raised on malformed command lines, instead of exiting the interpreter."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: error: {message}")


def parse_indices(text: str) -> list[int]:
    """Parses a list of non-negative indices, given as comma-separated integers or
    inclusive ranges ``start:stop[:step]``, e.g., ``"0:4,10,100:1000:100"``.

    Raises
    ------
    argparse.ArgumentTypeError
        Raises if the text is not a valid list.
    """
    indices: list[int] = []
    try:
        for chunk in text.split(","):
            parts = [int(p) for p in chunk.split(":")]
            if len(parts) == 1:
                indices.append(parts[0])
                continue
            if len(parts) > 3:
                raise ValueError
            start, stop = parts[:2]
            step = parts[2] if len(parts) == 3 else 1
            if step < 1 or stop < start:
                raise ValueError
            indices.extend(range(start, stop + 1, step))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid index list '{text}'") from None
    if any(i < 0 for i in indices):
        raise argparse.ArgumentTypeError(f"negative index in '{text}'")
    return indices


def _single(option: str, indices: Optional[list[int]]) -> int:
    if indices is None or len(indices) != 1:
        raise UsageError(f"{option} must be a single order here; got {indices}.")
    return indices[0]


def _required(option: str, indices: Optional[list[int]]) -> list[int]:
    if indices is None:
        raise UsageError(f"{option} is required by this command.")
    return indices


@dataclass(frozen=True)
class _Context:
    """Settings shared by all subcommands."""

    params: SeriesParams
    limits: Limits
    cache: Optional[ReferenceCache]
    decimals: int
    exact: bool
    scale: int
    n_jobs: int

    def value(self, row: dict[str, str], name: str, x: Fraction) -> None:
        """Adds the decimal rendering (and, if requested, the exact fraction) of the
        scaled value ``x`` to the row."""
        x = Fraction(x) * self.scale
        row[name] = str(to_decimal(x, self.decimals, limits=self.limits))
        if self.exact:
            row[f"{name}_exact"] = f"{x.numerator}/{x.denominator}"

    def columns(self, *names: str, values: Sequence[str] = ("value",)) -> list[str]:
        """Column names, followed by the value columns and their exact counterparts."""
        cols = list(names)
        for v in values:
            cols.append(v)
            if self.exact:
                cols.append(f"{v}_exact")
        return cols


def _fmt(x: Union[float, bool, int, None], spec: str = ".10g") -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return format(x, spec)


def _errors(
    args: argparse.Namespace, ctx: _Context, values: list[Fraction], rows: list[dict]
) -> Optional[int]:
    """Adds the certified errors and correct digits of the values to the rows, if
    requested by ``--errors``, and returns the precision of the oracle."""
    if not args.errors:
        return None
    ref, errors = resolve_errors(
        ctx.params, values, limits=ctx.limits, cache=ctx.cache, scale=ctx.scale
    )
    for row, v, e in zip(rows, values, errors):
        row["error"] = format_scientific((e.lo + e.hi) / 2)
        row["digits"] = _fmt(digits_correct(v, ref, ctx.scale))
    return ref.guaranteed_digits


def _cmd_sum(args, ctx: _Context) -> OutputRecord:
    ns = args.n or list(range(11))
    values = partial_sums_at(ctx.params, ns)
    rows: list[dict[str, str]] = []
    for n, v in zip(ns, values):
        row = {"n": str(n)}
        ctx.value(row, "value", v)
        rows.append(row)
    digits = _errors(args, ctx, values, rows)
    extra = ("error", "digits") if args.errors else ()
    return OutputRecord(
        "sum", ctx.params, ctx.columns("n") + list(extra), rows, digits
    )


def _cmd_reduite(args, ctx: _Context) -> OutputRecord:
    ns = _required("--n", args.n)
    ms = _required("--m", args.m)
    wanted = set(ms)
    rows = []
    for n in ns:
        found = {
            pair.m: pair.reduite
            for pair in convergents(ctx.params, n, max(ms), ctx.limits)
            if pair.m in wanted
        }
        for m in ms:
            row = {"n": str(n), "m": str(m)}
            ctx.value(row, "value", found[m])
            rows.append(row)
    return OutputRecord("reduite", ctx.params, ctx.columns("n", "m"), rows)


def _cmd_accel(args, ctx: _Context) -> OutputRecord:
    kind = args.kind
    if kind == "u":
        fixed, indices = _single("--m", args.m), _required("--n", args.n)
        policy = parse_kind(kind, m=fixed)
    elif kind == "v":
        fixed, indices = _single("--n", args.n), _required("--m", args.m)
        policy = parse_kind(kind, n=fixed)
    else:
        indices = _required("--n", args.n)
        policy = parse_kind(kind, zeta=args.zeta)
    values = sequence_values(ctx.params, policy, indices, ctx.limits, ctx.n_jobs)
    rows = []
    for i, v in zip(indices, values):
        m, n = policy.orders(i)
        row = {"index": str(i), "m": str(m), "n": str(n)}
        ctx.value(row, "value", v)
        rows.append(row)
    digits = _errors(args, ctx, values, rows)
    extra = ("error", "digits") if args.errors else ()
    return OutputRecord(
        f"accel {policy}",
        ctx.params,
        ctx.columns("index", "m", "n") + list(extra),
        rows,
        digits,
    )


def _cmd_oracle(args, ctx: _Context) -> OutputRecord:
    ref = reference_sum(ctx.params, args.digits, ctx.limits, ctx.cache)
    row = {
        "digits": str(args.digits),
        "guaranteed": str(ref.guaranteed_digits),
        "order": str(ref.order_used),
    }
    ctx.value(row, "lo", ref.enclosure.lo)
    ctx.value(row, "hi", ref.enclosure.hi)
    columns = ctx.columns("digits", "guaranteed", "order", values=("lo", "hi"))
    return OutputRecord("oracle", ctx.params, columns, [row], ref.guaranteed_digits)


def _equivalent_row(index_name: str, pt: EquivalentPoint) -> dict[str, str]:
    e = pt.error
    return {
        index_name: str(pt.index),
        "error": format_scientific((e.lo + e.hi) / 2),
        "normalized": _fmt(pt.normalized),
        "bar": _fmt(pt.bar, ".3e"),
    }


def _ratio_row(pt: RatePoint) -> dict[str, str]:
    return {
        "n": str(pt.index),
        "log10_ratio": _fmt(pt.log10_ratio),
        "bar": _fmt(pt.log10_bar, ".3e"),
    }


def _cmd_rates(args, ctx: _Context) -> OutputRecord:
    params, theorem = ctx.params, args.theorem
    common = {"limits": ctx.limits, "cache": ctx.cache}
    summary: dict[str, str] = {}
    if theorem == 1:
        check = theorem1_check(params, _required("--n", args.n), **common)
        rows = [_equivalent_row("n", pt) for pt in check.points]
        columns = ["n", "error", "normalized", "bar"]
        digits = check.oracle_digits
    elif theorem == 2:
        m, ns = _single("--m", args.m), _required("--n", args.n)
        check = theorem2_check(params, m, ns, n_jobs=ctx.n_jobs, **common)
        rows = []
        for pt in check.points:
            row = _equivalent_row("n", pt)
            row["within_bounds"] = _fmt(pt.within_bounds)
            rows.append(row)
        columns = ["n", "error", "normalized", "bar", "within_bounds"]
        digits = check.oracle_digits
    elif theorem == 3:
        n, ms = _single("--n", args.n), _required("--m", args.m)
        fit = theorem3_fit(params, n, ms, **common)
        rows = [_equivalent_row("m", pt) for pt in fit.check.points]
        columns = ["m", "error", "normalized", "bar"]
        digits = fit.check.oracle_digits
        summary = {
            "omega": _fmt(fit.omega),
            "plateau": _fmt(fit.plateau),
            "spread": _fmt(fit.spread),
            "exponent": _fmt(fit.exponent),
        }
    elif theorem == 4:
        m, ns = _single("--m", args.m), _required("--n", args.n)
        report4 = theorem4_check(params, m, ns, **common)
        rows = [
            {
                "n": str(pt.index),
                "log10_ratio": _fmt(pt.log10_ratio),
                "bar": _fmt(pt.bar, ".3e"),
            }
            for pt in report4.points
        ]
        columns = ["n", "log10_ratio", "bar"]
        digits = report4.oracle_digits
        summary = {
            "slope": _fmt(report4.slope),
            "predicted_slope": _fmt(report4.predicted_slope),
            "trend": report4.trend,
            "expected_trend": report4.expected_trend,
        }
    elif theorem == 5:
        report5 = theorem5_check(
            params, _required("--n", args.n), n_jobs=ctx.n_jobs, **common
        )
        rows = []
        for pt in report5.points:
            row = _ratio_row(pt)
            row["inside"] = _fmt(report5.inside(pt))
            rows.append(row)
        columns = ["n", "log10_ratio", "bar", "inside"]
        digits = report5.oracle_digits
        summary = {
            "lower": _fmt(report5.lower),
            "upper": _fmt(report5.upper),
            "all_inside": _fmt(report5.all_inside),
        }
    else:
        zeta = ExtractorSpec.parse(args.zeta or "square")
        report6 = theorem6_check(
            params, zeta, _required("--n", args.n), n_jobs=ctx.n_jobs, **common
        )
        rows = []
        for pt, ratio in zip(report6.check.points, report6.ratios):
            row = _equivalent_row("n", pt)
            row["log10_ratio"] = _fmt(ratio.log10_ratio)
            row["ratio_bar"] = _fmt(ratio.log10_bar, ".3e")
            rows.append(row)
        columns = ["n", "error", "normalized", "bar", "log10_ratio", "ratio_bar"]
        digits = report6.check.oracle_digits
        summary = {
            "superlinear_extractor": _fmt(report6.superlinear_extractor),
            "strictly_decreasing": _fmt(report6.strictly_decreasing),
        }
    return OutputRecord(
        f"rates theorem{theorem}", params, columns, rows, digits, summary=summary
    )


def _chi_at(n: int, params: SeriesParams, limits: Limits, cache):
    return chi_estimate(params, n, limits=limits, cache=cache)


def _cmd_chi(args, ctx: _Context) -> OutputRecord:
    ns = _required("--n", args.n)
    estimates = pmap(
        _chi_at, ns, ctx.n_jobs, params=ctx.params, limits=ctx.limits, cache=ctx.cache
    )
    rows = [
        {
            "n": str(est.n),
            "log10_ratio": _fmt(est.log10_ratio, ".12f"),
            "error_bar": _fmt(est.error_bar, ".3e"),
            "chi": _fmt(est.chi, ".12g"),
        }
        for est in estimates
    ]
    return OutputRecord(
        "chi",
        ctx.params,
        ["n", "log10_ratio", "error_bar", "chi"],
        rows,
        max(est.oracle_digits for est in estimates),
    )


def _cmd_aitken(args, ctx: _Context) -> OutputRecord:
    rows = []
    checks = aitken_check(ctx.params, _required("--n", args.n))
    for check in checks:
        row = {"n": str(check.n)}
        ctx.value(row, "aitken", check.aitken)
        ctx.value(row, "u", check.u_value)
        row["equal"] = _fmt(check.equal)
        rows.append(row)
    columns = ctx.columns("n", values=("aitken", "u")) + ["equal"]
    summary = {"all_equal": _fmt(all(c.equal for c in checks))}
    return OutputRecord("aitken", ctx.params, columns, rows, summary=summary)


def _cmd_scan(args, ctx: _Context) -> OutputRecord:
    scan = budget_scan(
        ctx.params,
        args.N,
        limits=ctx.limits,
        cache=ctx.cache,
        n_jobs=ctx.n_jobs,
        scale=ctx.scale,
    )
    rows = [
        {"n": str(pt.n), "m": str(pt.m), "digits": _fmt(pt.digits)}
        for pt in scan.points
    ]
    summary = {
        "N": str(scan.N),
        "argmax": ",".join(map(str, scan.argmax)),
        "unimodal": _fmt(scan.unimodal),
    }
    return OutputRecord(
        "scan",
        ctx.params,
        ["n", "m", "digits"],
        rows,
        scan.oracle_digits,
        summary=summary,
    )


def _cmd_extract(args, ctx: _Context) -> OutputRecord:
    zeta = ExtractorSpec.parse(args.zeta or "square")
    cmp = semi_vs_full_extraction(
        ctx.params,
        zeta,
        _single("--n", args.n),
        args.k,
        limits=ctx.limits,
        cache=ctx.cache,
        scale=ctx.scale,
    )
    rows = []
    for name, index, value, digits in (
        ("semi", cmp.n, cmp.semi_value, cmp.semi_digits),
        ("full", cmp.k, cmp.full_value, cmp.full_digits),
    ):
        row = {"sequence": name, "index": str(index)}
        ctx.value(row, "value", value)
        row["digits"] = _fmt(digits)
        rows.append(row)
    columns = ctx.columns("sequence", "index") + ["digits"]
    return OutputRecord(
        f"extract {zeta}", ctx.params, columns, rows, cmp.oracle_digits
    )


def _cmd_table(args, ctx: _Context) -> OutputRecord:
    results = check_table(args.id, ctx.limits, ctx.n_jobs)
    rows = []
    for res in results:
        cell = res.cell
        rows.append(
            {
                "cell": cell.label,
                "expected": cell.expected,
                "computed": str(to_decimal(res.value, cell.decimals + 3)),
                "diff": format_scientific(res.diff, 3),
                "tolerance": f"1e-{cell.decimals}",
                "ok": _fmt(res.ok),
            }
        )
    mismatches = [res for res in results if not res.ok]
    for res in mismatches:
        print(
            f"mismatch {res.cell.label}: expected {res.cell.expected}, computed "
            f"{to_decimal(res.value, res.cell.decimals + 3)}, diff "
            f"{format_scientific(res.diff, 3)} > 1e-{res.cell.decimals}",
            file=sys.stderr,
        )
    summary = {"cells": str(len(results)), "mismatches": str(len(mismatches))}
    return OutputRecord(
        f"table {args.id}",
        None,
        ["cell", "expected", "computed", "diff", "tolerance", "ok"],
        rows,
        summary=summary,
    )


def _common_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    g = common.add_argument_group("series and output")
    g.add_argument("--p", type=int, default=2, help="Positive step p (default: 2).")
    g.add_argument("--q", type=int, default=1, help="Positive offset q (default: 1).")
    g.add_argument(
        "--decimals", type=int, default=15, help="Decimals of the values (default: 15)."
    )
    g.add_argument("--format", choices=("csv", "json"), default="csv")
    g.add_argument(
        "--exact", action="store_true", help="Also write values as exact fractions."
    )
    g.add_argument("--out", default=None, help="Output file (default: stdout).")
    g.add_argument(
        "--scale",
        type=int,
        default=1,
        help="Multiply values and errors by this integer, e.g., 4 for pi from S_2,1.",
    )
    g = common.add_argument_group("resources")
    g.add_argument("--max-m", type=int, default=None, help="Maximum reduite order.")
    g.add_argument(
        "--max-digits",
        type=int,
        default=None,
        help="Maximum oracle precision; capped at 1500 digits unless --heavy.",
    )
    g.add_argument(
        "--heavy",
        action="store_true",
        help="Allow oracle precisions above the heavy threshold (1500 digits).",
    )
    g.add_argument("--threads", type=int, default=1, help="Number of workers.")
    g.add_argument("--cache-dir", default=None, help="Cache of reference sums.")
    g.add_argument("--no-timing", action="store_true", help="Omit the elapsed time.")
    g.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    return common


_Handler = Callable[[argparse.Namespace, _Context], OutputRecord]


def build_parser() -> argparse.ArgumentParser:
    """Builds the parser of the ``chaccel`` command and of its subcommands."""
    parser = _ArgumentParser(
        prog="chaccel",
        description="Exact convergence acceleration of alternating congruo-harmonic "
        "series sum_k (-1)^k / (pk + q).",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = _common_parser()
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: _Handler, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help, description=help)
        p.set_defaults(handler=handler)
        return p

    def orders(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=parse_indices, help="Partial-sum orders.")
        p.add_argument("--m", type=parse_indices, help="Reduite orders.")

    p = add("sum", _cmd_sum, "Partial sums.")
    p.add_argument("--n", type=parse_indices, help="Orders (default: 0:10).")
    p.add_argument("--errors", action="store_true", help="Add certified errors.")
    p = add("reduite", _cmd_reduite, "Reduites of the remainders.")
    orders(p)
    p = add("accel", _cmd_accel, "Acceleration sequences.")
    p.add_argument("--kind", choices=("u", "v", "w", "wzeta"), required=True)
    orders(p)
    p.add_argument("--zeta", help="Extractor, e.g., square, power:3, geometric:2.")
    p.add_argument("--errors", action="store_true", help="Add certified errors.")
    p = add("oracle", _cmd_oracle, "Certified enclosure of the sum.")
    p.add_argument("--digits", type=int, required=True)
    p = add("rates", _cmd_rates, "Empirical checks of the rates of convergence.")
    p.add_argument("--theorem", type=int, choices=range(1, 7), required=True)
    orders(p)
    p.add_argument("--zeta", help="Extractor of theorem 6 (default: square).")
    p = add("chi", _cmd_chi, "Estimates of the linear rate of the diagonal.")
    p.add_argument("--n", type=parse_indices, required=True)
    p = add("aitken", _cmd_aitken, "Aitken extrapolation against the U sequence.")
    p.add_argument("--n", type=parse_indices, required=True)
    p = add("scan", _cmd_scan, "Correct digits at a fixed budget of orders.")
    p.add_argument("--N", type=int, required=True)
    p = add("extract", _cmd_extract, "Semi against fully extracted diagonals.")
    p.add_argument("--zeta", help="Extractor (default: square).")
    p.add_argument("--n", type=parse_indices, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("table", _cmd_table, "Reproduces a published table.")
    p.add_argument("--id", type=int, choices=TABLE_IDS, required=True)
    return parser


def _limits(args: argparse.Namespace) -> Limits:
    limits = Limits.from_env(max_order=args.max_m, max_digits=args.max_digits)
    if not args.heavy and limits.max_digits > limits.heavy_digits:
        explicit = args.max_digits is not None or ENV_MAX_DIGITS in os.environ
        _logger.log(
            logging.INFO if explicit else logging.DEBUG,
            "Capping the oracle precision of %d digits at %d; pass --heavy to lift it",
            limits.max_digits,
            limits.heavy_digits,
        )
        limits = replace(limits, max_digits=limits.heavy_digits)
    return limits


def run(args: argparse.Namespace) -> int:
    """Runs the subcommand selected by the parsed arguments and emits its record."""
    if args.threads < 1:
        raise UsageError(f"--threads must be positive; got {args.threads}.")
    ctx = _Context(
        SeriesParams(args.p, args.q),
        _limits(args),
        None if args.cache_dir is None else ReferenceCache(args.cache_dir),
        args.decimals,
        args.exact,
        args.scale,
        args.threads,
    )
    _logger.debug("Running '%s' on %s with %s", args.command, ctx.params, ctx.limits)
    start = time.perf_counter()
    record = args.handler(args, ctx)
    if not args.no_timing:
        elapsed = round((time.perf_counter() - start) * 1000)
        record = record._replace(timing_ms=elapsed)
    emit(record, args.format, args.out)
    if args.command == "table" and record.summary["mismatches"] != "0":
        return EXIT_MISMATCH
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Runs the ``chaccel`` command with the given arguments (by default, those of the
    process) and returns its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help and --version
        return EXIT_OK if e.code is None else int(e.code)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logging.captureWarnings(True)
    try:
        return run(args)
    except ResourceLimitError as e:
        hint = "" if args.heavy else " Pass --heavy to lift the default oracle guard."
        print(f"chaccel: resource guard: {e}{hint}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, DegenerateTransformError, OSError) as e:
        print(f"chaccel: error: {e}", file=sys.stderr)
        return EXIT_USAGE
