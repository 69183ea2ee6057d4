"""
Tests for DiophantineSet construction and certificate checks.
"""

from django.test import SimpleTestCase

from core.exceptions import CertificateError
from kernel.geometry import QuadPoint
from kernel.sets import DiophantineSet, is_certified, verify_certificate


def rectangle():
    return [QuadPoint.of(0, 0), QuadPoint.of(3, 0), QuadPoint.of(3, 4), QuadPoint.of(0, 4)]


class DiophantineSetTest(SimpleTestCase):
    """Test DiophantineSet.from_points and verify_certificate."""

    def test_rectangle_is_certified(self):
        """Test that the 3-4-5 rectangle passes its certificate."""
        dset = DiophantineSet.from_points(rectangle())
        verify_certificate(dset)
        self.assertEqual(dset.distance(0, 2), 5)
        self.assertEqual(dset.distance(1, 2), 4)
        self.assertEqual(len(dset), 4)

    def test_non_integer_pair_rejected(self):
        """Test that an irrational distance fails the certificate."""
        with self.assertRaises(CertificateError):
            DiophantineSet.from_points([QuadPoint.of(0, 0), QuadPoint.of(1, 1)])

    def test_wrong_matrix_detected(self):
        """Test that a wrong stored distance is detected."""
        points = rectangle()[:3]
        bogus = DiophantineSet(tuple(points), ((0, 3, 5), (3, 0, 5), (5, 5, 0)))
        self.assertFalse(is_certified(bogus))

    def test_collinear_points_detected(self):
        """Test that collinear points fail the certificate."""
        points = [QuadPoint.of(0, 0), QuadPoint.of(3, 0), QuadPoint.of(6, 0)]
        dset = DiophantineSet.from_points(points)
        with self.assertRaisesMessage(CertificateError, 'collinear'):
            verify_certificate(dset)

    def test_asymmetric_matrix_detected(self):
        """Test that an asymmetric matrix is detected."""
        points = rectangle()[:2]
        with self.assertRaises(CertificateError):
            verify_certificate(DiophantineSet(tuple(points), ((0, 3), (4, 0))))
