import argparse
import contextlib
import io
import os
import tempfile
import unittest
from unittest import mock

from parameterized import parameterized

from chaccel.cli import OutputRecord, emit, main, parse_records
from chaccel.cli import tables
from chaccel.cli.main import _limits, parse_indices
from chaccel.core.series import SeriesParams


def run(*argv: str) -> tuple[int, str, str]:
    """Runs the command and returns its exit code, standard output and error."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def run_records(*argv: str) -> tuple[int, OutputRecord]:
    code, out, err = run(*argv, "--format", "json", "--no-timing")
    if code != 0:
        raise AssertionError(f"exit code {code}: {err}")
    return code, parse_records(out, "json")


class TestParseIndices(unittest.TestCase):
    @parameterized.expand(
        [
            ("5", [5]),
            ("0:4", [0, 1, 2, 3, 4]),
            ("1,5,10", [1, 5, 10]),
            ("0:2,10:30:10", [0, 1, 2, 10, 20, 30]),
        ]
    )
    def test_parse_indices__accepts_lists_and_ranges(self, text, expected):
        self.assertListEqual(parse_indices(text), expected)

    @parameterized.expand(
        [("",), ("a",), ("4:1",), ("1:5:0",), ("-1",), ("1:2:3:4",)]
    )
    def test_parse_indices__rejects_malformed_lists(self, text):
        code, out, err = run("sum", "--n", text)
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertIn("index", err)


class TestTables(unittest.TestCase):
    @parameterized.expand([(1, 6), (2, 25), (3, 12)])
    def test_table__reproduces_published_values(self, table_id, cells):
        code, record = run_records("table", "--id", str(table_id))
        self.assertEqual(code, 0)
        self.assertEqual(len(record.rows), cells)
        self.assertTrue(all(row["ok"] == "true" for row in record.rows))
        self.assertEqual(record.summary["mismatches"], "0")

    def test_table__fixtures_are_verbatim_and_tolerances_follow_decimals(self):
        cells = tables.table_cells(3)
        by_label = {cell.label: cell for cell in cells}
        cell = by_label["u_1,1,7^(7)"]
        self.assertEqual(cell.expected, "0,693147180559356")
        self.assertEqual(cell.decimals, 15)
        with self.assertRaises(ValueError):
            tables.table_cells(4)

    def test_table__mismatch_exits_with_per_cell_diff(self):
        grid = [list(row) for row in tables._ACCEL_GRID]
        grid[1][1] = "0,7900000"
        with mock.patch.object(tables, "_ACCEL_GRID", grid):
            code, out, err = run("table", "--id", "2", "--no-timing")
        self.assertEqual(code, 2)
        self.assertIn("u_2,1,1^(1)", err)
        self.assertIn("mismatch", err)
        self.assertIn("false", out)


class TestCommands(unittest.TestCase):
    def test_accel__writes_exact_pi_approximant(self):
        code, out, _ = run(
            "accel", "--kind", "w", "--p", "2", "--q", "1", "--n", "10", "--exact"
        )
        self.assertEqual(code, 0)
        self.assertIn("945428987002880/1203757572990973", out)
        _, record = run_records(
            "accel", "--kind", "w", "--n", "10", "--exact", "--scale", "4"
        )
        self.assertEqual(
            record.rows[0]["value_exact"], "3781715948011520/1203757572990973"
        )
        self.assertTrue(record.rows[0]["value"].startswith("3.14159265358979"))

    def test_reduite__renders_exact_fraction_and_decimal(self):
        _, record = run_records(
            "reduite", "--n", "0", "--m", "0", "--exact", "--decimals", "6"
        )
        self.assertEqual(
            record.rows,
            [{"n": "0", "m": "0", "value": "0.250000", "value_exact": "1/4"}],
        )

    def test_accel__u_and_v_kinds(self):
        _, u = run_records("accel", "--kind", "u", "--m", "1", "--n", "1")
        _, v = run_records("accel", "--kind", "v", "--n", "1", "--m", "1")
        self.assertEqual(u.rows[0]["value"], v.rows[0]["value"])
        self.assertTrue(u.rows[0]["value"].startswith("0.784313725490196"))

    @parameterized.expand(
        [
            (("accel", "--kind", "u", "--n", "1:3"),),
            (("accel", "--kind", "v", "--n", "1,2", "--m", "3"),),
            (("accel", "--kind", "wzeta", "--n", "3"),),
            (("rates", "--theorem", "1"),),
            (("rates", "--theorem", "7", "--n", "10"),),
            (("nope",),),
            (("sum", "--decimals", "-1"),),
            (("sum", "--threads", "0"),),
            (("aitken", "--n", "1:4"),),
        ]
    )
    def test_usage_errors__exit_with_code_one(self, argv):
        code, out, err = run(*argv)
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertNotEqual(err, "")

    def test_resource_guards__exit_with_code_three(self):
        code, out, err = run("oracle", "--digits", "2000")
        self.assertEqual(code, 3)
        self.assertEqual(out, "")
        self.assertIn("--heavy", err)
        code, _, _ = run("chi", "--n", "1000")
        self.assertEqual(code, 3)
        code, _, _ = run("reduite", "--n", "0", "--m", "50", "--max-m", "10")
        self.assertEqual(code, 3)

    def test_limits__caps_explicit_precision_unless_heavy(self):
        args = argparse.Namespace(max_m=None, max_digits=3000, heavy=False)
        with mock.patch.dict(os.environ):
            os.environ.pop("CHA_MAX_DIGITS", None)
            with self.assertLogs("chaccel.cli.main", "INFO") as cm:
                limits = _limits(args)
            heavy = _limits(argparse.Namespace(max_m=None, max_digits=3000, heavy=True))
        self.assertEqual(limits.max_digits, 1500)
        self.assertIn("--heavy", cm.output[0])
        self.assertEqual(heavy.max_digits, 3000)

    def test_oracle__encloses_sum(self):
        _, record = run_records(
            "oracle", "--p", "1", "--q", "1", "--digits", "20", "--decimals", "20"
        )
        row = record.rows[0]
        self.assertGreaterEqual(int(row["guaranteed"]), 20)
        self.assertLessEqual(row["lo"], "0.69314718055994530942")
        self.assertGreaterEqual(row["hi"], "0.69314718055994530941")
        self.assertEqual(record.oracle_digits, int(row["guaranteed"]))

    def test_rates__theorem1_has_one_row_per_point(self):
        _, record = run_records("rates", "--theorem", "1", "--n", "10,100,1000")
        self.assertEqual(len(record.rows), 3)
        for column in ("n", "error", "normalized"):
            self.assertIn(column, record.columns)
        self.assertIsNotNone(record.oracle_digits)

    def test_rates__other_theorems_produce_summaries(self):
        _, r3 = run_records(
            "rates", "--theorem", "3", "--n", "0", "--m", "10:30:10"
        )
        self.assertIn("omega", r3.summary)
        _, r5 = run_records("rates", "--theorem", "5", "--n", "100,200")
        self.assertEqual(r5.summary["all_inside"], "true")
        _, r6 = run_records(
            "rates", "--theorem", "6", "--n", "4:8", "--zeta", "square"
        )
        self.assertEqual(r6.summary["superlinear_extractor"], "true")

    def test_aitken__identity_flag(self):
        _, record = run_records("aitken", "--p", "3", "--q", "5", "--n", "2:20")
        self.assertEqual(len(record.rows), 19)
        self.assertEqual(record.summary["all_equal"], "true")

    def test_sum__with_errors(self):
        _, record = run_records("sum", "--n", "0:3", "--errors")
        self.assertListEqual(record.columns, ["n", "value", "error", "digits"])
        self.assertEqual(record.rows[0]["value"], "1.000000000000000")
        self.assertTrue(all(row["digits"] for row in record.rows))

    def test_scan__and_extract(self):
        _, scan = run_records("scan", "--N", "10")
        self.assertEqual(len(scan.rows), 10)
        self.assertIn("argmax", scan.summary)
        _, cmp = run_records(
            "extract", "--zeta", "square", "--n", "10", "--k", "5", "--scale", "4"
        )
        self.assertGreaterEqual(int(cmp.rows[0]["digits"]), 37)

    def test_help_and_version__exit_with_code_zero(self):
        code, out, _ = run("--version")
        self.assertEqual(code, 0)
        self.assertNotEqual(out, "")


class TestDeterminism(unittest.TestCase):
    @parameterized.expand(
        [
            (("scan", "--N", "12"),),
            (("accel", "--kind", "wzeta", "--zeta", "square", "--n", "1:6"),),
            (("table", "--id", "2"),),
            (("rates", "--theorem", "5", "--n", "10,15,20"),),
        ]
    )
    def test_output__is_identical_across_runs_and_threads(self, argv):
        outputs = []
        for threads in ("1", "1", "2"):
            code, out, _ = run(*argv, "--no-timing", "--threads", threads)
            self.assertEqual(code, 0)
            outputs.append(out)
        self.assertEqual(outputs[0], outputs[1])
        self.assertEqual(outputs[0], outputs[2])

    def test_timing__is_recorded_unless_disabled(self):
        code, out, _ = run("sum", "--n", "3", "--format", "json")
        self.assertEqual(code, 0)
        self.assertIsNotNone(parse_records(out, "json").timing_ms)


class TestRecords(unittest.TestCase):
    def test_emit__empty_rows(self):
        record = OutputRecord("sum", SeriesParams(2, 1), ["n", "value"], [])
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            emit(record, "csv")
        self.assertEqual(out.getvalue(), "n,value\n")
        self.assertEqual(record.to_dict()["rows"], [])

    def test_emit__round_trips_both_formats(self):
        record = OutputRecord(
            "reduite",
            SeriesParams(2, 1),
            ["n", "value", "value_exact"],
            [{"n": "0", "value": "0.250000", "value_exact": "1/4"}],
            oracle_digits=12,
            summary={"note": "a, \"quoted\" value"},
        )
        with tempfile.TemporaryDirectory() as tmpdir:
            for fmt in ("csv", "json"):
                path = os.path.join(tmpdir, f"out.{fmt}")
                emit(record, fmt, path)
                with open(path, encoding="utf-8", newline="") as f:
                    text = f.read()
                self.assertNotIn("\r\n", text)
                parsed = parse_records(text, fmt)
                self.assertListEqual(parsed.columns, record.columns)
                self.assertListEqual(parsed.rows, record.rows)
            self.assertEqual(parsed, record)

    def test_parse_records__raises__with_unknown_schema(self):
        with self.assertRaises(ValueError):
            parse_records('{"schema_version": "0"}', "json")
        with self.assertRaises(ValueError):
            parse_records("", "xml")  # type: ignore[arg-type]

    def test_emit__reports_path_on_failure(self):
        record = OutputRecord("sum", None, ["n"], [])
        with tempfile.TemporaryDirectory() as tmpdir:
            blocker = os.path.join(tmpdir, "file")
            with open(blocker, "w") as f:
                f.write("")
            target = os.path.join(blocker, "out.csv")
            with self.assertRaises(OSError) as cm:
                emit(record, "csv", target)
            self.assertIn(target, str(cm.exception))


if __name__ == "__main__":
    unittest.main()
