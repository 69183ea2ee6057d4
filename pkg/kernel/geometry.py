"""
Planar points over Q(sqrt D) and exact geometric predicates.

All predicates reduce to the sign of a cross product evaluated in the
shared quadratic field of their arguments, so no tolerance is involved.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from core.exceptions import DegenerateConfigurationError, PreconditionError, RadicandMismatchError

from .arithmetic import rational_sqrt
from .fields import QuadScalar

Coordinate = Union[int, Fraction, QuadScalar]


@dataclass(frozen=True)
class QuadPoint:
    """A point whose coordinates lie in one field Q(sqrt D)."""

    x: QuadScalar
    y: QuadScalar

    def __post_init__(self):
        x = QuadScalar.coerce(self.x)
        y = QuadScalar.coerce(self.y)
        if not (x.is_rational or y.is_rational) and x.radicand != y.radicand:
            raise RadicandMismatchError(
                f"Point coordinates in Q(sqrt {x.radicand}) and Q(sqrt {y.radicand})"
            )
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)

    @classmethod
    def of(cls, x: Coordinate, y: Coordinate) -> 'QuadPoint':
        return cls(QuadScalar.coerce(x), QuadScalar.coerce(y))

    @property
    def radicand(self) -> int:
        if not self.x.is_rational:
            return self.x.radicand
        return self.y.radicand

    @property
    def is_rational(self) -> bool:
        return self.x.is_rational and self.y.is_rational

    def __sub__(self, other: 'QuadPoint') -> 'QuadPoint':
        return QuadPoint(self.x - other.x, self.y - other.y)

    def __add__(self, other: 'QuadPoint') -> 'QuadPoint':
        return QuadPoint(self.x + other.x, self.y + other.y)

    def scaled(self, factor: Union[int, Fraction]) -> 'QuadPoint':
        return QuadPoint(self.x * factor, self.y * factor)

    def as_floats(self) -> tuple:
        return float(self.x), float(self.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def shared_radicand(*points: QuadPoint) -> int:
    """
    The common radicand of the given points.

    Rational points fit any field; two irrational radicands must agree.
    """
    radicand = 1
    for point in points:
        if point.radicand == 1:
            continue
        if radicand == 1:
            radicand = point.radicand
        elif point.radicand != radicand:
            raise RadicandMismatchError(
                f"Points live in Q(sqrt {radicand}) and Q(sqrt {point.radicand})"
            )
    return radicand


def distance_squared(p: QuadPoint, q: QuadPoint) -> QuadScalar:
    """Exact (dx)**2 + (dy)**2 in the shared field."""
    shared_radicand(p, q)
    delta = p - q
    return delta.x * delta.x + delta.y * delta.y


def integer_distance(p: QuadPoint, q: QuadPoint) -> Optional[int]:
    """
    The distance |pq| when it is a natural number, else None.

    A squared distance with a non-zero surd part is never a perfect square.
    """
    squared = distance_squared(p, q)
    if not squared.is_rational:
        return None
    root = rational_sqrt(squared.rat)
    if root is None or root.denominator != 1 or root == 0:
        return None
    return root.numerator


def cross(o: QuadPoint, a: QuadPoint, b: QuadPoint) -> QuadScalar:
    """(a - o) x (b - o)."""
    shared_radicand(o, a, b)
    u = a - o
    v = b - o
    return u.x * v.y - u.y * v.x


def orientation(p1: QuadPoint, p2: QuadPoint, p3: QuadPoint) -> int:
    """+1 for a counter-clockwise turn p1 -> p2 -> p3, -1 clockwise, 0 collinear."""
    return cross(p1, p2, p3).sign()


def collinear(p1: QuadPoint, p2: QuadPoint, p3: QuadPoint) -> bool:
    return cross(p1, p2, p3).is_zero


def find_collinear_triple(points: Sequence[QuadPoint]) -> Optional[tuple]:
    """First collinear triple of indices in lexicographic order, or None."""
    for i, j, l in combinations(range(len(points)), 3):
        if collinear(points[i], points[j], points[l]):
            return i, j, l
    return None


def point_in_triangle(p: QuadPoint, t1: QuadPoint, t2: QuadPoint, t3: QuadPoint) -> bool:
    """True iff p lies strictly inside the triangle; the boundary does not count."""
    turn = orientation(t1, t2, t3)
    if turn == 0:
        raise DegenerateConfigurationError("point_in_triangle needs a non-degenerate triangle")
    return (
        orientation(t1, t2, p) == turn
        and orientation(t2, t3, p) == turn
        and orientation(t3, t1, p) == turn
    )


def interior_point_witness(points: Sequence[QuadPoint]) -> Optional[tuple]:
    """
    Indices (p, t1, t2, t3) of a point strictly inside a triangle of three
    others, or None when the set is in convex position.
    """
    for t1, t2, t3 in combinations(range(len(points)), 3):
        for index, point in enumerate(points):
            if index in (t1, t2, t3):
                continue
            if point_in_triangle(point, points[t1], points[t2], points[t3]):
                return index, t1, t2, t3
    return None


def convex_position(points: Sequence[QuadPoint]) -> bool:
    """
    True iff every point is a vertex of the convex hull.

    In general position a point fails to be a hull vertex exactly when it
    is interior to a triangle of three other points.
    """
    if len(points) < 3:
        raise PreconditionError("convex_position needs at least 3 points")
    if find_collinear_triple(points) is not None:
        raise DegenerateConfigurationError("convex_position needs points with no three collinear")
    return interior_point_witness(points) is None


def segments_cross(a1: QuadPoint, a2: QuadPoint, b1: QuadPoint, b2: QuadPoint) -> bool:
    """True iff the open segments meet in exactly one interior point."""
    return (
        orientation(a1, a2, b1) * orientation(a1, a2, b2) < 0
        and orientation(b1, b2, a1) * orientation(b1, b2, a2) < 0
    )
