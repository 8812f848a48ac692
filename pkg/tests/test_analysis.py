import math
import os
import unittest
import warnings
from fractions import Fraction

import numpy as np
from parameterized import parameterized

from chaccel.accel import W
from chaccel.accel.extractors import IDENTITY, SQUARE
from chaccel.analysis import (
    aitken_check,
    budget_scan,
    chi_estimate,
    rate_report,
    semi_vs_full_extraction,
    theorem1_check,
    theorem2_check,
    theorem3_fit,
    theorem4_check,
    theorem5_check,
    theorem6_check,
)
from chaccel.analysis.reports import (
    THEOREM5_LOWER,
    THEOREM5_UPPER,
    RatePoint,
    Theorem5Report,
)
from chaccel.analysis.scan import _is_unimodal
from chaccel.core.limits import Limits, ResourceLimitError
from chaccel.core.series import SeriesParams
from chaccel.oracle import ErrorInterval

HEAVY = os.environ.get("CHA_HEAVY") == "1"


class TestRateReports(unittest.TestCase):
    def test_rate_report__partial_sums_ratios_approach_one(self):
        report = rate_report(SeriesParams(2, 1), None, [100, 101, 102])
        self.assertEqual(report.kind, "partial-sums")
        self.assertEqual(len(report.points), 3)
        self.assertIsNone(report.points[-1].ratio)
        for pt in report.points[:-1]:
            self.assertTrue(pt.certified)
            self.assertAlmostEqual(pt.ratio, 1.0, delta=0.02)

    def test_rate_report__w_sequence_converges_linearly(self):
        report = rate_report(SeriesParams(1, 1), W(), [10, 20, 30])
        self.assertEqual(report.kind, "w")
        for pt in report.points[:-1]:
            self.assertLess(pt.log10_ratio, -10)

    def test_rate_report__raises__with_unsorted_indices(self):
        with self.assertRaises(ValueError):
            rate_report(SeriesParams(1, 1), W(), [3, 2])

    def test_theorem5_lower_and_upper__are_the_published_bracket(self):
        self.assertAlmostEqual(THEOREM5_LOWER, math.log10(1 / (9 * math.e**2)))
        self.assertAlmostEqual(THEOREM5_UPPER, math.log10(1 / (4 * math.e**2)))
        self.assertAlmostEqual(THEOREM5_LOWER, -1.8228, 3)
        self.assertAlmostEqual(THEOREM5_UPPER, -1.4707, 3)


class TestEquivalents(unittest.TestCase):
    @parameterized.expand([((2, 1),), ((1, 2),)])
    def test_theorem1_check__normalized_errors_close_to_one(self, pq):
        check = theorem1_check(SeriesParams(*pq), [10, 1000])
        self.assertEqual(len(check.points), 2)
        self.assertTrue(check.within(0.01, start=1000))
        pt = check.points[-1]
        self.assertTrue(0.99 <= pt.normalized <= 1.01)

    @parameterized.expand([((p, q), m) for p, q in ((2, 1), (1, 2)) for m in (0, 1, 2)])
    def test_theorem2_check__normalized_errors_close_to_one(self, pq, m):
        check = theorem2_check(SeriesParams(*pq), m, [m + 10, 500])
        self.assertTrue(check.within(0.05, start=500))
        self.assertTrue(all(pt.within_bounds for pt in check.points))

    def test_theorem2_check__raises__outside_valid_orders(self):
        with self.assertRaises(ValueError):
            theorem2_check(SeriesParams(2, 1), 7, [100])
        with self.assertRaises(ValueError):
            theorem2_check(SeriesParams(2, 1), 2, [3, 100])

    def test_theorem2_check__parallel_matches_serial(self):
        params = SeriesParams(1, 2)
        serial = theorem2_check(params, 1, [10, 20, 40])
        parallel = theorem2_check(params, 1, [10, 20, 40], n_jobs=2)
        np.testing.assert_array_equal(serial.values(), parallel.values())

    @parameterized.expand([((1, 1), 0, 3.0), ((2, 1), 1, 4.0)])
    def test_theorem3_fit__finds_plateau(self, pq, n, exponent):
        fit = theorem3_fit(SeriesParams(*pq), n, list(range(50, 401, 50)))
        self.assertEqual(fit.exponent, exponent)
        self.assertTrue(fit.plateau)
        self.assertGreater(fit.omega, 0)

    def test_theorem3_fit__exponent_formula(self):
        fit = theorem3_fit(SeriesParams(2, 1), 0, [10, 20, 30])
        self.assertEqual(fit.exponent, 2.0)

    @parameterized.expand(
        [
            ((2, 1), "decreasing"),
            ((1, 2), "increasing"),
            ((1, 1), "bounded"),
            ((3, 1), "decreasing"),
            ((1, 3), "increasing"),
            ((3, 2), "decreasing"),
        ]
    )
    def test_theorem4_check__slope_matches_prediction(self, pq, trend):
        params = SeriesParams(*pq)
        report = theorem4_check(params, 1, [50, 100, 150, 200, 250, 300])
        self.assertIsNotNone(report.slope)
        self.assertAlmostEqual(report.slope, report.predicted_slope, delta=0.3)
        self.assertEqual(report.expected_trend, trend)
        self.assertTrue(report.agrees)

    @parameterized.expand([((2, 1),), ((1, 1),), ((4, 1),)])
    def test_theorem5_check__ratios_inside_bracket(self, pq):
        report = theorem5_check(SeriesParams(*pq), list(range(100, 301, 25)))
        self.assertEqual(len(report.points), 9)
        self.assertTrue(report.all_inside)
        for pt in report.points:
            self.assertTrue(pt.certified)
            self.assertTrue(report.inside(pt))

    def test_theorem5_report__uncertified_points_are_not_inside(self):
        err = ErrorInterval(Fraction(0), Fraction(1))
        report = Theorem5Report(
            SeriesParams(1, 1), [RatePoint(1, err)], THEOREM5_LOWER, THEOREM5_UPPER, 0
        )
        self.assertIsNone(report.inside(report.points[0]))
        self.assertFalse(report.all_inside)

    def test_theorem6_check__square_extractor_converges_superlinearly(self):
        report = theorem6_check(SeriesParams(2, 1), SQUARE, list(range(4, 13)))
        self.assertTrue(report.superlinear_extractor)
        self.assertTrue(report.strictly_decreasing)
        last = report.check.points[-1]
        self.assertEqual(last.index, 12)
        self.assertTrue(0.8 <= last.normalized <= 1.2)

    def test_theorem6_check__warns_with_identity_extractor(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            report = theorem6_check(SeriesParams(2, 1), IDENTITY, [20, 21, 22, 23])
        self.assertTrue(any(issubclass(w.category, RuntimeWarning) for w in caught))
        self.assertFalse(report.superlinear_extractor)
        ratios = [pt.log10_ratio for pt in report.ratios[:-1]]
        for r in ratios:
            self.assertTrue(THEOREM5_LOWER < r < THEOREM5_UPPER)


class TestChi(unittest.TestCase):
    def test_chi_estimate__lies_in_bracket(self):
        est = chi_estimate(SeriesParams(2, 1), 200)
        self.assertTrue(THEOREM5_LOWER < est.log10_ratio < THEOREM5_UPPER)
        self.assertLess(est.error_bar, 1e-6)
        self.assertAlmostEqual(est.chi, 10**est.log10_ratio)

    def test_chi_estimate__raises__above_the_guard(self):
        with self.assertRaises(ResourceLimitError):
            chi_estimate(SeriesParams(2, 1), 1000, limits=Limits(max_digits=1500))

    @unittest.skipUnless(HEAVY, "set CHA_HEAVY=1 to run heavy reproductions")
    def test_chi_estimate__reproduces_conjectured_rate(self):
        for pq, expected in (((2, 1), -1.531102703), ((4, 1), -1.531102799)):
            est = chi_estimate(SeriesParams(*pq), 1000)
            self.assertAlmostEqual(est.log10_ratio, expected, delta=1e-6)
            self.assertAlmostEqual(est.chi, 0.0294372541, delta=1e-8)

    @unittest.skipUnless(HEAVY, "set CHA_HEAVY=1 to run heavy reproductions")
    def test_chi_estimate__is_stable_in_n(self):
        params = SeriesParams(1, 1)
        a = chi_estimate(params, 500)
        b = chi_estimate(params, 501)
        self.assertLess(abs(a.log10_ratio - b.log10_ratio), 1e-4)


class TestScans(unittest.TestCase):
    def test_budget_scan__peaks_near_half_budget(self):
        scan = budget_scan(SeriesParams(2, 1), 40)
        self.assertEqual(len(scan.points), 40)
        self.assertTrue(all(18 <= n <= 22 for n in scan.argmax))
        ms = [pt.m for pt in scan.points]
        self.assertListEqual(ms, [40 - n for n in range(1, 41)])

    def test_budget_scan__flags_profiles_that_are_not_unimodal(self):
        params = SeriesParams(2, 1)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            small = budget_scan(params, 20)
        self.assertFalse(small.unimodal)
        self.assertTrue(any(issubclass(w.category, RuntimeWarning) for w in caught))
        self.assertTrue(budget_scan(params, 40).unimodal)

    def test_budget_scan__smallest_budget(self):
        scan = budget_scan(SeriesParams(1, 2), 2)
        self.assertEqual(len(scan.points), 2)
        self.assertGreaterEqual(len(scan.argmax), 1)

    @parameterized.expand([(0,), (3,), (-2,)])
    def test_budget_scan__raises__with_odd_or_non_positive_budget(self, N):
        with self.assertRaises(ValueError):
            budget_scan(SeriesParams(2, 1), N)

    @parameterized.expand(
        [
            ([1, 3, 5, 4, 2], 2, True),
            ([1, 3, 5, 5, 2], 2, True),
            ([1, 5, 5, 5, 2], 2, False),
            ([1, 5, 2, 5, 1], 2, False),
            ([4, 3, 5, 2], 2, False),
            ([], 2, False),
        ]
    )
    def test_is_unimodal(self, digits, max_plateau, expected):
        self.assertEqual(_is_unimodal(digits, max_plateau), expected)

    def test_semi_vs_full_extraction__both_reach_37_digits_of_pi(self):
        cmp = semi_vs_full_extraction(SeriesParams(2, 1), SQUARE, 10, 5, scale=4)
        self.assertGreaterEqual(cmp.semi_digits, 37)
        self.assertGreaterEqual(cmp.full_digits, 37)
        self.assertEqual(cmp.zeta, "square")

    def test_semi_vs_full_extraction__coincide_with_identity(self):
        cmp = semi_vs_full_extraction(SeriesParams(2, 1), IDENTITY, 5, 5)
        self.assertEqual(cmp.semi_value, cmp.full_value)
        self.assertEqual(cmp.semi_digits, cmp.full_digits)


class TestAitkenCheck(unittest.TestCase):
    @parameterized.expand([((1, 1),), ((2, 3),), ((5, 2),)])
    def test_aitken_check__identity_holds(self, pq):
        rows = aitken_check(SeriesParams(*pq), range(2, 30))
        self.assertEqual(len(rows), 28)
        self.assertTrue(all(row.equal for row in rows))


if __name__ == "__main__":
    unittest.main()
