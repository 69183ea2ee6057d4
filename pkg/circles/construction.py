"""
Concyclic integer-distance sets of any size.

Points are placed on the unit circle at angles 2*theta where cos(theta)
and sin(theta) come from a primitive Pythagorean triple, which makes
every chord rational. Scaling by the lcm of the chord denominators then
turns every distance into a natural number.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import List, Optional, Sequence, Tuple

from core.exceptions import CertificateError, PreconditionError
from kernel.geometry import QuadPoint, distance_squared
from kernel.sets import DiophantineSet, verify_certificate
from ngons.polygons import assemble_polygon

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PythagoreanAngle:
    """
    Angle theta with cos(theta) = p/r and sin(theta) = q/r.
    """
    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise PreconditionError(f"Legs must be positive, got ({self.p}, {self.q})")
        if self.p * self.p + self.q * self.q != self.r * self.r:
            raise PreconditionError(f"({self.p}, {self.q}, {self.r}) is not Pythagorean")
        if gcd(self.p, self.q) != 1:
            raise PreconditionError(f"({self.p}, {self.q}, {self.r}) is not primitive")

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.p, self.q, self.r

    @property
    def sort_key(self) -> Tuple[int, int]:
        return self.r, self.p

    def __str__(self) -> str:
        return f"({self.p}, {self.q}, {self.r})"


def _primitive_triples_up_to(r_max: int) -> List[PythagoreanAngle]:
    """Euclid's formula over coprime u > v >= 1 of opposite parity."""
    triples = []
    for u in range(2, isqrt(r_max) + 1):
        for v in range(1 + u % 2, u, 2):
            r = u * u + v * v
            if r > r_max:
                break
            if gcd(u, v) != 1:
                continue
            legs = sorted((u * u - v * v, 2 * u * v))
            triples.append(PythagoreanAngle(legs[0], legs[1], r))
    return sorted(triples, key=lambda angle: angle.sort_key)


def gen_pythagorean_angles(count: int) -> List[PythagoreanAngle]:
    """
    The first count primitive triples ordered by hypotenuse, then by the
    shorter leg. p < q, so every angle lies in (pi/4, pi/2) and the
    doubled angles are pairwise distinct.
    """
    if count < 0:
        raise PreconditionError(f"count must be non-negative, got {count}")
    if count == 0:
        return []
    r_max = 5
    while True:
        triples = _primitive_triples_up_to(r_max)
        if len(triples) >= count:
            return triples[:count]
        r_max *= 2


def chord(u: PythagoreanAngle, v: PythagoreanAngle) -> Fraction:
    """Closed-form chord 2|q_u p_v - p_u q_v| / (r_u r_v) between doubled angles."""
    return Fraction(2 * abs(u.q * v.p - u.p * v.q), u.r * v.r)


def unit_circle_point(angle: PythagoreanAngle) -> QuadPoint:
    """(cos 2theta, sin 2theta) = ((p^2 - q^2)/r^2, 2pq/r^2)."""
    r2 = angle.r * angle.r
    return QuadPoint.of(
        Fraction(angle.p * angle.p - angle.q * angle.q, r2),
        Fraction(2 * angle.p * angle.q, r2),
    )


@dataclass(frozen=True)
class QuasiDiophantineSet:
    """
    Rational points with rational pairwise distances, all on the circle
    of the given radius about the origin.
    """
    points: Tuple[QuadPoint, ...]
    distances: Tuple[Tuple[Fraction, ...], ...]
    radius: Optional[Fraction] = Fraction(1)

    @classmethod
    def from_diophantine(cls, dset: DiophantineSet) -> 'QuasiDiophantineSet':
        distances = tuple(tuple(Fraction(d) for d in row) for row in dset.distance_matrix)
        return cls(tuple(dset.points), distances, None)

    def __len__(self) -> int:
        return len(self.points)


def place_on_circle(angles: Sequence[PythagoreanAngle]) -> QuasiDiophantineSet:
    """
    One unit-circle point per angle with the exact chord matrix.

    Raises:
        PreconditionError: on a repeated angle
    """
    angles = list(angles)
    if len(set(angles)) != len(angles):
        raise PreconditionError("place_on_circle needs pairwise distinct angles")
    points = tuple(unit_circle_point(angle) for angle in angles)
    size = len(angles)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            matrix[i][j] = matrix[j][i] = chord(angles[i], angles[j])
    return QuasiDiophantineSet(points, tuple(tuple(row) for row in matrix))


def homothety_factor(distances: Sequence[Fraction]) -> int:
    """Smallest S > 0 making every distance times S an integer."""
    return lcm(1, *(Fraction(d).denominator for d in distances))


def homothety_scale(qset: QuasiDiophantineSet) -> DiophantineSet:
    """
    Scale coordinates and distances by the lcm S of the distance
    denominators. S is recorded as the set's scale_note.

    Raises:
        PreconditionError: for fewer than 2 points
    """
    size = len(qset.points)
    if size < 2:
        raise PreconditionError("homothety_scale needs at least 2 points")
    off_diagonal = [qset.distances[i][j] for i in range(size) for j in range(i + 1, size)]
    factor = homothety_factor(off_diagonal)
    points = tuple(point.scaled(factor) for point in qset.points)
    matrix = tuple(
        tuple(int(Fraction(qset.distances[i][j]) * factor) for j in range(size))
        for i in range(size)
    )
    logger.debug(f"Homothety factor {factor} for {size} points")
    return DiophantineSet(points, matrix, factor)


def construct_diophantine(n: int) -> DiophantineSet:
    """
    A certified concyclic set of n points with natural pairwise distances.

    Raises:
        PreconditionError: for n < 1
        CertificateError: if the scaled set fails its certificate
    """
    if n < 1:
        raise PreconditionError(f"construct_diophantine needs n >= 1, got {n}")
    angles = gen_pythagorean_angles(n)
    if n == 1:
        return DiophantineSet((unit_circle_point(angles[0]),), ((0,),), 1)

    qset = place_on_circle(angles)
    for i in range(n):
        for j in range(i + 1, n):
            measured = distance_squared(qset.points[i], qset.points[j])
            if not measured.is_rational or measured.rat != qset.distances[i][j] ** 2:
                raise CertificateError(f"Chord formula disagrees with coordinates at ({i}, {j})")

    dset = homothety_scale(qset)
    verify_certificate(dset)
    logger.info(f"Constructed {n}-point Diophantine set with scale {dset.scale_note}")
    return dset


def construct_ngon(n: int) -> List[QuadPoint]:
    """
    Vertices of a simple n-gon with natural side and diagonal lengths,
    ordered around the polygon, for any n >= 3.
    """
    if n < 3:
        raise PreconditionError(f"construct_ngon needs n >= 3, got {n}")
    dset = construct_diophantine(n)
    return assemble_polygon(list(dset.points), dset.points[0], dset.points[1])
