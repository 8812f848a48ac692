import unittest
from fractions import Fraction
from itertools import product

import mpmath
from parameterized import parameterized

from chaccel.contfrac import (
    Enclosure,
    b_bounds,
    check_b_bounds,
    check_determinants,
    closed_form_bounds,
    convergents,
    determinant,
    determinant_closed_form,
    error_bracket,
    last_convergents,
    reduite,
    remainder_enclosure,
    sum_enclosure,
)
from chaccel.core.limits import Limits, ResourceLimitError
from chaccel.core.series import SeriesParams, alpha, partial_sum

mpmath.mp.dps = 60
PI_4 = mpmath.pi / 4
LN2 = mpmath.log(2)


def _mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


class TestConvergents(unittest.TestCase):
    def test_convergents__follow_the_recurrence(self):
        pairs = list(convergents(SeriesParams(2, 1), 0, 2))
        self.assertListEqual(
            [(pair.A, pair.B) for pair in pairs], [(1, 4), (4, 20), (32, 144)]
        )
        self.assertListEqual([pair.m for pair in pairs], [0, 1, 2])

    def test_convergents__initial_conditions(self):
        (c0, c1) = list(convergents(SeriesParams(1, 1), 0, 1))
        self.assertEqual(alpha(SeriesParams(1, 1), 0), 3)
        self.assertEqual((c1.A, c1.B), (3, 10))
        self.assertEqual(c0.reduite, Fraction(1, 3))

    def test_convergents__raise__above_the_guard(self):
        with self.assertRaises(ResourceLimitError):
            list(convergents(SeriesParams(1, 1), 0, 11, Limits(max_order=10)))

    def test_last_convergents__returns_consecutive_pairs(self):
        params = SeriesParams(3, 2)
        pairs = last_convergents(params, 4, 7, 3)
        self.assertListEqual([pair.m for pair in pairs], [7, 8, 9])
        all_pairs = list(convergents(params, 4, 9))
        self.assertTupleEqual(pairs, tuple(all_pairs[7:]))

    @parameterized.expand(
        [
            (2, 1, 0, 0, Fraction(1, 4)),
            (2, 1, 0, 1, Fraction(1, 5)),
            (2, 1, 0, 2, Fraction(2, 9)),
            (1, 1, 0, 1, Fraction(3, 10)),
            (1, 1, 0, 2, Fraction(13, 42)),
        ]
    )
    def test_reduite__computes_correct_value(self, p, q, n, m, expected):
        self.assertEqual(reduite(SeriesParams(p, q), n, m), expected)

    @parameterized.expand([(params, n) for params in ((1, 1), (2, 1)) for n in (0, 7)])
    def test_reduite__at_order_zero_is_inverse_of_alpha(self, params, n):
        params = SeriesParams(*params)
        self.assertEqual(reduite(params, n, 0), Fraction(1, alpha(params, n)))


class TestDeterminant(unittest.TestCase):
    @parameterized.expand(
        [
            (2, 1, 0, 0, -4),
            (2, 1, 0, 1, 64),
            (1, 1, 2, 2, -36),
            (3, 5, 4, 0, -9),
        ]
    )
    def test_determinant__computes_correct_value(self, p, q, n, m, expected):
        params = SeriesParams(p, q)
        self.assertEqual(determinant(params, n, m), expected)
        self.assertEqual(determinant_closed_form(params, m), expected)

    @parameterized.expand(
        [
            (SeriesParams(p, q), n)
            for p, q in product((1, 2, 3), repeat=2)
            for n in (0, 1, 5, 20)
        ]
    )
    def test_determinant_identity_and_b_bounds__hold_up_to_order_200(self, params, n):
        self.assertIsNone(check_determinants(params, n, 200))
        self.assertIsNone(check_b_bounds(params, n, 200))

    def test_b_bounds__are_ordered_and_tight_at_order_zero(self):
        params = SeriesParams(2, 1)
        lower, refined, upper = b_bounds(params, 0, 0)
        self.assertEqual(lower, refined)
        self.assertEqual(lower, upper)
        self.assertEqual(lower, 4)
        lower, refined, upper = b_bounds(params, 0, 1)
        self.assertEqual((lower, refined, upper), (16, 20, 36))


class TestEnclosures(unittest.TestCase):
    def test_remainder_enclosure__brackets_remainder(self):
        params = SeriesParams(2, 1)
        enc = remainder_enclosure(params, 0, 0)
        self.assertEqual((enc.lo, enc.hi), (Fraction(1, 5), Fraction(1, 4)))
        self.assertEqual(enc.width, Fraction(2**2, 4 * 20))
        self.assertTrue(_mpf(enc.lo) < 1 - PI_4 < _mpf(enc.hi))

    def test_remainder_enclosure__at_odd_order(self):
        enc = remainder_enclosure(SeriesParams(1, 1), 0, 1)
        self.assertEqual((enc.lo, enc.hi), (Fraction(3, 10), Fraction(13, 42)))
        self.assertTrue(_mpf(enc.lo) < 1 - LN2 < _mpf(enc.hi))

    def test_sum_enclosure__contains_known_sums(self):
        enc = sum_enclosure(SeriesParams(2, 1), 0, 0)
        self.assertEqual((enc.lo, enc.hi), (Fraction(3, 4), Fraction(4, 5)))
        self.assertTrue(_mpf(enc.lo) < PI_4 < _mpf(enc.hi))
        enc = sum_enclosure(SeriesParams(1, 1), 0, 5)
        self.assertTrue(_mpf(enc.lo) < LN2 < _mpf(enc.hi))

    @parameterized.expand(product((0, 1, 4), (0, 1, 6, 9)))
    def test_sum_enclosure__nests_as_order_grows(self, n: int, m: int):
        params = SeriesParams(1, 2)
        outer = sum_enclosure(params, n, m)
        inner = sum_enclosure(params, n, m + 2)
        self.assertTrue(inner.issubset(outer))
        self.assertTrue(inner.width < outer.width)
        self.assertEqual(outer.target, "S")

    def test_sum_enclosures__at_different_orders_intersect(self):
        params = SeriesParams(3, 1)
        encs = [sum_enclosure(params, n, 10) for n in (0, 5, 50)]
        for a, b in product(encs, repeat=2):
            self.assertTrue(a.intersects(b))

    def test_enclosure__scaled_and_contains(self):
        enc = Enclosure(Fraction(1, 5), Fraction(1, 4), "x")
        self.assertTrue(enc.contains(enc.midpoint))
        self.assertFalse(enc.contains(Fraction(1, 3)))
        scaled = enc.scaled(4)
        self.assertEqual((scaled.lo, scaled.hi), (Fraction(4, 5), Fraction(1)))
        self.assertIs(enc.scaled(1), enc)
        with self.assertRaises(ValueError):
            enc.scaled(0)

    @parameterized.expand(product(((2, 1), (1, 3)), (1, 4), (0, 2, 5)))
    def test_error_bracket__contained_in_closed_form_bounds(self, pq, n, m):
        params = SeriesParams(*pq)
        lo, hi = error_bracket(params, n, m)
        clo, chi = closed_form_bounds(params, n, m)
        self.assertLess(lo, hi)
        self.assertLessEqual(clo, lo)
        self.assertLessEqual(hi, chi)
        # the true error of the reduite lies in the bracket
        rho = reduite(params, n, m)
        rem = remainder_enclosure(params, n, m + 10)
        err_lo = min(abs(rho - rem.lo), abs(rho - rem.hi))
        err_hi = max(abs(rho - rem.lo), abs(rho - rem.hi))
        self.assertLessEqual(lo, err_lo)
        self.assertLessEqual(err_hi, hi)

    def test_closed_form_bounds__no_upper_bound_at_order_zero(self):
        _, hi = closed_form_bounds(SeriesParams(2, 1), 0, 3)
        self.assertIsNone(hi)

    def test_sum_enclosure__maps_remainder_with_sign(self):
        params = SeriesParams(2, 3)
        for n in (2, 3):
            rem = remainder_enclosure(params, n, 4)
            enc = sum_enclosure(params, n, 4)
            s = partial_sum(params, n)
            self.assertEqual(enc.width, rem.width)
            expected = (s + rem.lo) if n % 2 else (s - rem.hi)
            self.assertEqual(enc.lo, expected)


if __name__ == "__main__":
    unittest.main()
