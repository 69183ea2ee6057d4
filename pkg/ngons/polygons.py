"""
Polygons on Diophantine point sets.

assemble_polygon builds a simple polygon through every point by a ray
sweep from the baseline endpoint P; the remaining helpers classify and
audit polygons with exact orientation tests.
"""

import logging
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import List, Sequence

from django.db import models

from core.exceptions import DegenerateConfigurationError, InconsistencyError, PreconditionError
from kernel.fields import QuadScalar
from kernel.geometry import (
    QuadPoint,
    collinear,
    find_collinear_triple,
    orientation,
    segments_cross,
)

logger = logging.getLogger(__name__)


class PolygonKind(models.TextChoices):
    CONVEX = 'convex', 'Convex'
    CONCAVE = 'concave', 'Concave'


def angular_order(points: Sequence[QuadPoint], origin: QuadPoint) -> List[QuadPoint]:
    """
    Points of one open half-plane through origin, most counter-clockwise
    first.
    """
    def compare(u: QuadPoint, v: QuadPoint) -> int:
        return -orientation(origin, v, u)

    return sorted(points, key=cmp_to_key(compare))


def split_by_line(points: Sequence[QuadPoint], P: QuadPoint, Q: QuadPoint):
    """(left, right) of the directed line P -> Q; points on it are rejected."""
    left, right = [], []
    for point in points:
        turn = orientation(P, Q, point)
        if turn == 0:
            raise DegenerateConfigurationError(f"{point} lies on the baseline")
        (left if turn > 0 else right).append(point)
    return left, right


def assemble_polygon(points: Sequence[QuadPoint], P: QuadPoint, Q: QuadPoint) -> List[QuadPoint]:
    """
    Order every point into a simple polygon.

    The others are split by the line PQ and each side is swept by rays
    from P; the polygon runs P, the left side, Q, then the right side.
    Every vertex is then visible from P along a ray, so the result is a
    fan around P. Simplicity is still confirmed edge pair by edge pair.

    Raises:
        PreconditionError: when P == Q or P, Q are not in points
        DegenerateConfigurationError: on a collinear triple
        InconsistencyError: when the assembled chain is not simple
    """
    if P == Q:
        raise PreconditionError("assemble_polygon needs P != Q")
    if P not in points or Q not in points:
        raise PreconditionError("P and Q must belong to the point set")
    if len(set(points)) != len(points):
        raise PreconditionError("assemble_polygon needs distinct points")
    if find_collinear_triple(points) is not None:
        raise DegenerateConfigurationError("assemble_polygon needs points with no three collinear")

    others = [point for point in points if point != P and point != Q]
    left, right = split_by_line(others, P, Q)
    ordered = [P] + angular_order(left, P) + [Q] + angular_order(right, P)
    if len(ordered) >= 3 and not is_simple_polygon(ordered):
        logger.error(f"Assembled chain is not simple: {ordered}")
        raise InconsistencyError("assembled polygon has crossing edges")
    return ordered


def _edges(ordered: Sequence[QuadPoint]):
    n = len(ordered)
    return [(ordered[i], ordered[(i + 1) % n]) for i in range(n)]


def _between(value: QuadScalar, low: QuadScalar, high: QuadScalar) -> bool:
    if high < low:
        low, high = high, low
    return low <= value <= high


def on_segment(p: QuadPoint, a: QuadPoint, b: QuadPoint) -> bool:
    """p on the closed segment ab."""
    return collinear(a, b, p) and _between(p.x, a.x, b.x) and _between(p.y, a.y, b.y)


def segments_touch(a1: QuadPoint, a2: QuadPoint, b1: QuadPoint, b2: QuadPoint) -> bool:
    """Closed segments share at least one point."""
    if segments_cross(a1, a2, b1, b2):
        return True
    return (
        on_segment(b1, a1, a2) or on_segment(b2, a1, a2)
        or on_segment(a1, b1, b2) or on_segment(a2, b1, b2)
    )


def is_simple_polygon(ordered: Sequence[QuadPoint]) -> bool:
    """
    True iff the closed chain has at least 3 distinct vertices, no two
    non-adjacent edges meet and no two adjacent edges overlap.
    """
    n = len(ordered)
    if n < 3 or len(set(ordered)) != n:
        return False
    edges = _edges(ordered)
    for i, j in combinations(range(n), 2):
        adjacent = j == i + 1 or (i == 0 and j == n - 1)
        (a1, a2), (b1, b2) = edges[i], edges[j]
        if adjacent:
            shared = a2 if j == i + 1 else a1
            far_a = a1 if shared == a2 else a2
            far_b = b2 if shared == b1 else b1
            if collinear(shared, far_a, far_b) and (
                on_segment(far_a, shared, far_b) or on_segment(far_b, shared, far_a)
            ):
                return False
            continue
        if segments_touch(a1, a2, b1, b2):
            return False
    return True


def point_in_polygon(p: QuadPoint, ordered: Sequence[QuadPoint]) -> bool:
    """
    True iff p lies strictly inside the simple polygon; winding number
    with exact orientation signs, boundary points excluded.
    """
    winding = 0
    for a, b in _edges(ordered):
        if on_segment(p, a, b):
            return False
        if a.y <= p.y:
            if b.y > p.y and orientation(a, b, p) > 0:
                winding += 1
        elif b.y <= p.y and orientation(a, b, p) < 0:
            winding -= 1
    return winding != 0


def classify_polygon(ordered: Sequence[QuadPoint]) -> str:
    """
    PolygonKind.CONVEX when every turn has the same sign, else CONCAVE.

    Raises:
        PreconditionError: for a non-simple polygon
        DegenerateConfigurationError: on three consecutive collinear vertices
    """
    if not is_simple_polygon(ordered):
        raise PreconditionError("classify_polygon needs a simple polygon")
    n = len(ordered)
    turns = set()
    for i in range(n):
        turn = orientation(ordered[i - 1], ordered[i], ordered[(i + 1) % n])
        if turn == 0:
            raise DegenerateConfigurationError(f"Vertices around index {i} are collinear")
        turns.add(turn)
    return PolygonKind.CONVEX if len(turns) == 1 else PolygonKind.CONCAVE


def diagonal_inside(ordered: Sequence[QuadPoint], u: QuadPoint, v: QuadPoint) -> bool:
    """
    True iff segment uv is a polygon edge or an interior diagonal.
    """
    n = len(ordered)
    i, j = ordered.index(u), ordered.index(v)
    if (i - j) % n in (1, n - 1):
        return True
    for a, b in _edges(ordered):
        if a in (u, v) or b in (u, v):
            continue
        if segments_touch(u, v, a, b):
            return False
    for w in ordered:
        if w not in (u, v) and on_segment(w, u, v):
            return False
    midpoint = QuadPoint((u.x + v.x) * Fraction(1, 2), (u.y + v.y) * Fraction(1, 2))
    return point_in_polygon(midpoint, ordered)


def baseline_visibility(ordered: Sequence[QuadPoint], P: QuadPoint, Q: QuadPoint) -> bool:
    """
    True iff every vertex other than P and Q is joined to P or to Q by
    an edge or an interior diagonal.
    """
    return all(
        diagonal_inside(ordered, vertex, P) or diagonal_inside(ordered, vertex, Q)
        for vertex in ordered
        if vertex not in (P, Q)
    )
