"""
Tests for apex enumeration and pairwise compatibility.
"""

from fractions import Fraction

from django.test import SimpleTestCase

from core.exceptions import PreconditionError
from kernel.geometry import QuadPoint
from ngons.candidates import ApexCandidate, Sign, baseline, compatible, enumerate_apexes
from ngons.search import SearchConfig


class EnumerateApexesTest(SimpleTestCase):
    """Test the apex candidate enumeration."""

    def test_unit_baseline_forces_isosceles(self):
        """|a - b| < 1 leaves only a = b."""
        apexes = enumerate_apexes(SearchConfig(k=1, max_dist=3))
        self.assertEqual(
            [apex.label for apex in apexes],
            ['(1,1,+)', '(1,1,-)', '(2,2,+)', '(2,2,-)', '(3,3,+)', '(3,3,-)'],
        )

    def test_unit_apex_coordinates(self):
        """Test the apex of the 1-1-1 triangle."""
        apex = ApexCandidate.build(1, 1, 1, Sign.PLUS)
        self.assertEqual(apex.x, Fraction(1, 2))
        self.assertEqual(apex.s, Fraction(3, 4))
        self.assertEqual(apex.D, 3)

    def test_rational_apex(self):
        """(16 - 25 + 9) / 6 = 0 and y = 4."""
        apex = ApexCandidate.build(3, 4, 5, Sign.PLUS)
        self.assertEqual(apex.x, 0)
        self.assertEqual(apex.s, 16)
        self.assertEqual(apex.D, 1)
        self.assertEqual(apex.point, QuadPoint.of(0, 4))
        self.assertEqual(ApexCandidate.build(3, 4, 5, Sign.MINUS).point, QuadPoint.of(0, -4))

    def test_all_candidates_respect_the_frame(self):
        """Test frame invariants of every enumerated apex."""
        for k, max_dist in ((1, 6), (2, 7), (3, 9)):
            apexes = enumerate_apexes(SearchConfig(k=k, max_dist=max_dist))
            self.assertEqual(len(apexes), len(set(apexes)))
            for apex in apexes:
                self.assertLessEqual(max(apex.a, apex.b), max_dist)
                self.assertLess(abs(apex.a - apex.b), k)
                self.assertLess(k, apex.a + apex.b)
                self.assertGreater(apex.s, 0)

    def test_points_on_baseline_are_rejected(self):
        """Test that a flat triangle is not an apex."""
        with self.assertRaises(PreconditionError):
            ApexCandidate.build(3, 1, 2, Sign.PLUS)
        with self.assertRaises(PreconditionError):
            ApexCandidate.build(3, 5, 2, Sign.PLUS)

    def test_minimal_frame(self):
        """M = k still yields candidates and no crash."""
        apexes = enumerate_apexes(SearchConfig(k=4, max_dist=4))
        self.assertTrue(apexes)


class CompatibleTest(SimpleTestCase):
    """Test the pairwise distance rule between apexes."""

    def test_rectangle_pair(self):
        """Test compatibility of the rectangle apexes."""
        u = ApexCandidate.build(3, 4, 5, Sign.PLUS)
        v = ApexCandidate.build(3, 5, 4, Sign.PLUS)
        self.assertEqual(v.point, QuadPoint.of(3, 4))
        self.assertEqual(compatible(u, v, 3), 3)

    def test_radicand_mismatch(self):
        """Test that different radicands are incompatible."""
        u = ApexCandidate.build(1, 1, 1, Sign.PLUS)
        v = ApexCandidate.build(1, 2, 2, Sign.PLUS)
        self.assertEqual((u.D, v.D), (3, 15))
        self.assertIsNone(compatible(u, v, 1))

    def test_mirror_pair_is_not_natural(self):
        """The two apexes over (1, 1) are sqrt(3) apart."""
        u = ApexCandidate.build(1, 1, 1, Sign.PLUS)
        v = ApexCandidate.build(1, 1, 1, Sign.MINUS)
        self.assertIsNone(compatible(u, v, 1))

    def test_opposite_sides(self):
        """(0, 4) and (0, -4) are 8 apart."""
        u = ApexCandidate.build(3, 4, 5, Sign.PLUS)
        v = ApexCandidate.build(3, 4, 5, Sign.MINUS)
        self.assertEqual(compatible(u, v, 3), 8)

    def test_same_candidate_is_rejected(self):
        """Test that an apex is not compared with itself."""
        u = ApexCandidate.build(3, 4, 5, Sign.PLUS)
        with self.assertRaises(PreconditionError):
            compatible(u, u, 3)

    def test_baseline_mismatch(self):
        """Test that apexes over different baselines are rejected."""
        u = ApexCandidate.build(3, 4, 5, Sign.PLUS)
        v = ApexCandidate.build(3, 5, 4, Sign.PLUS)
        with self.assertRaises(PreconditionError):
            compatible(u, v, 4)

    def test_baseline_points(self):
        """Test the baseline endpoints."""
        P, Q = baseline(5)
        self.assertEqual(P, QuadPoint.of(0, 0))
        self.assertEqual(Q, QuadPoint.of(5, 0))
