"""
Tests for kernel arithmetic helpers.

Covers perfect squares, rational square roots, square-free
decomposition and the exact surd sign tests.
"""

import random
from fractions import Fraction
from math import isqrt

import pytest
from django.test import SimpleTestCase, override_settings

from core.exceptions import PreconditionError
from kernel.arithmetic import (
    compare_sqrt_sums,
    is_perfect_square,
    is_squarefree,
    rational_sqrt,
    squarefree_decompose,
    surd_sign,
)


class PerfectSquareTest(SimpleTestCase):
    """Test is_perfect_square."""

    def test_exact_square(self):
        """49 is 7 squared."""
        self.assertEqual(is_perfect_square(49), 7)

    def test_non_square(self):
        """50 is not a square."""
        self.assertIsNone(is_perfect_square(50))

    def test_zero(self):
        """0 is the square of 0."""
        self.assertEqual(is_perfect_square(0), 0)

    def test_negative_rejected(self):
        """Negative input violates the precondition."""
        with self.assertRaises(PreconditionError):
            is_perfect_square(-4)

    def test_big_integers(self):
        """Arbitrary precision squares are detected exactly."""
        root = 10**40 + 7
        self.assertEqual(is_perfect_square(root * root), root)
        self.assertIsNone(is_perfect_square(root * root + 1))

    def test_round_trip_random(self):
        """r**2 == n whenever a root is reported, on 10**4 random inputs."""
        rng = random.Random(7)
        for _ in range(10_000):
            n = rng.randrange(0, 10**12)
            root = is_perfect_square(n)
            if root is not None:
                self.assertEqual(root * root, n)
            else:
                self.assertNotEqual(isqrt(n) ** 2, n)


class RationalSqrtTest(SimpleTestCase):
    """Test rational_sqrt."""

    def test_square_fraction(self):
        """Test the root of a square fraction."""
        self.assertEqual(rational_sqrt(Fraction(9, 4)), Fraction(3, 2))

    def test_non_square(self):
        """Test that a non-square has no rational root."""
        self.assertIsNone(rational_sqrt(Fraction(2)))

    def test_zero(self):
        """Test the root of zero."""
        self.assertEqual(rational_sqrt(Fraction(0)), Fraction(0))

    def test_negative_rejected(self):
        """Test that negatives are rejected."""
        with self.assertRaises(PreconditionError):
            rational_sqrt(Fraction(-1, 4))

    def test_denominator_must_be_square(self):
        """4/3 has a square numerator but not a square denominator."""
        self.assertIsNone(rational_sqrt(Fraction(4, 3)))

    def test_round_trip_random(self):
        """Test roots of random squared fractions."""
        rng = random.Random(11)
        for _ in range(10_000):
            q = Fraction(rng.randrange(0, 400), rng.randrange(1, 400))
            root = rational_sqrt(q)
            if root is not None:
                self.assertEqual(root * root, q)
                self.assertGreaterEqual(root, 0)


class SquarefreeDecomposeTest(SimpleTestCase):
    """Test squarefree_decompose."""

    def test_examples(self):
        """Test decompositions of small numbers."""
        self.assertEqual(squarefree_decompose(12), (3, 2))
        self.assertEqual(squarefree_decompose(45), (5, 3))
        self.assertEqual(squarefree_decompose(1), (1, 1))

    def test_zero_rejected(self):
        """Test that zero is rejected."""
        with self.assertRaises(PreconditionError):
            squarefree_decompose(0)

    def test_large_prime_cofactor(self):
        """A prime above every trial divisor is kept in the square-free part."""
        prime = 1_000_000_007
        self.assertEqual(squarefree_decompose(prime * 36), (prime, 6))

    @override_settings(DIOPHANTINE_LAB={'TRIAL_DIVISION_BOUND': 3})
    def test_sympy_fallback(self):
        """With a tiny trial bound the cofactor goes through sympy."""
        squarefree_decompose.cache_clear()
        try:
            self.assertEqual(squarefree_decompose(7 * 7 * 11 * 13 * 13 * 13), (11 * 13, 7 * 13))
        finally:
            squarefree_decompose.cache_clear()

    def test_identity_up_to_bound(self):
        """n == s * f**2 with s square-free for n up to 2*10**4."""
        squares = [p * p for p in range(2, 150)]
        for n in range(1, 20_001):
            s, f = squarefree_decompose(n)
            self.assertEqual(s * f * f, n)
            self.assertFalse(any(s % sq == 0 for sq in squares if sq <= s))

    @pytest.mark.slow
    def test_identity_up_to_a_million(self):
        """n == s * f**2 with s square-free for every n up to 10**6."""
        limit = 10 ** 6
        has_square_factor = bytearray(limit + 1)
        for p in range(2, isqrt(limit) + 1):
            has_square_factor[p * p::p * p] = b'\x01' * len(range(p * p, limit + 1, p * p))
        bad = []
        for n in range(1, limit + 1):
            s, f = squarefree_decompose(n)
            if s * f * f != n or has_square_factor[s]:
                bad.append(n)
        self.assertEqual(bad, [])

    def test_is_squarefree(self):
        """Square-free checks on small cases."""
        self.assertTrue(is_squarefree(30))
        self.assertFalse(is_squarefree(18))
        self.assertFalse(is_squarefree(0))


class SurdSignTest(SimpleTestCase):
    """Test exact signs of a + b*sqrt(c)."""

    def test_rational_only(self):
        """Test signs without a surd part."""
        self.assertEqual(surd_sign(Fraction(-3), 0, 5), -1)
        self.assertEqual(surd_sign(0, 0, 5), 0)

    def test_same_signs(self):
        """Test signs when both parts agree."""
        self.assertEqual(surd_sign(1, 1, 2), 1)
        self.assertEqual(surd_sign(-1, -1, 2), -1)

    def test_mixed_signs(self):
        """3 - 2*sqrt(2) > 0 while 2 - 2*sqrt(2) < 0 and 2 - sqrt(4) == 0."""
        self.assertEqual(surd_sign(3, -2, 2), 1)
        self.assertEqual(surd_sign(2, -2, 2), -1)
        self.assertEqual(surd_sign(2, -1, 4), 0)
        self.assertEqual(surd_sign(-3, 2, 2), -1)


class CompareSqrtSumsTest(SimpleTestCase):
    """Test exact comparison of sums of two square roots."""

    def test_equal_sums(self):
        """sqrt(4) + sqrt(9) == sqrt(1) + sqrt(16)."""
        self.assertEqual(compare_sqrt_sums(4, 9, 1, 16), 0)

    def test_diagonals_versus_sides(self):
        """2*sqrt(8) > 2 + 2 for the unit-square crossing example scaled by 2."""
        self.assertEqual(compare_sqrt_sums(8, 8, 4, 4), 1)
        self.assertEqual(compare_sqrt_sums(4, 4, 8, 8), -1)

    def test_close_values(self):
        """sqrt(2) + sqrt(3) < sqrt(10) is decided exactly."""
        self.assertEqual(compare_sqrt_sums(2, 3, 10, 0), -1)
        self.assertEqual(compare_sqrt_sums(2, 3, Fraction(98, 10), 0), 1)

    def test_matches_floats_on_random_inputs(self):
        """Test exact signs against well-separated floats."""
        rng = random.Random(3)
        for _ in range(2000):
            values = [Fraction(rng.randrange(0, 200), rng.randrange(1, 20)) for _ in range(4)]
            exact = compare_sqrt_sums(*values)
            approx = (float(values[0]) ** 0.5 + float(values[1]) ** 0.5) - (
                float(values[2]) ** 0.5 + float(values[3]) ** 0.5
            )
            if abs(approx) > 1e-9:
                self.assertEqual(exact, 1 if approx > 0 else -1)
