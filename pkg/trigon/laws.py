"""
Exact law-of-cosines checks for the triangle comparison lemmas.

Angles are never evaluated. Every comparison is made on exact cosines,
reversed, since cos is strictly decreasing on (0, pi).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from django.db import models

from core.exceptions import DegenerateConfigurationError, PreconditionError
from kernel.arithmetic import compare_sqrt_sums
from kernel.geometry import QuadPoint, distance_squared, segments_cross

logger = logging.getLogger(__name__)


def _require_naturals(**values):
    for name, value in values.items():
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise PreconditionError(f"{name} must be a natural number, got {value!r}")


def is_strict_triangle(x: int, y: int, z: int) -> bool:
    return x + y > z and y + z > x and z + x > y


def cos_angle(adj1: int, adj2: int, opp: int) -> Fraction:
    """
    Exact cosine of the angle between sides adj1 and adj2 opposite opp.

    Raises:
        DegenerateConfigurationError: when the sides violate the strict
            triangle inequality
    """
    _require_naturals(adj1=adj1, adj2=adj2, opp=opp)
    if not is_strict_triangle(adj1, adj2, opp):
        raise DegenerateConfigurationError(
            f"Sides ({adj1}, {adj2}, {opp}) do not form a non-degenerate triangle"
        )
    return Fraction(adj1 * adj1 + adj2 * adj2 - opp * opp, 2 * adj1 * adj2)


@dataclass(frozen=True)
class TriangleCompareInstance:
    """
    Two triangles (s, k, s + k - m) for s = a and s = b sharing k and m.
    """
    a: int
    b: int
    k: int
    m: int

    def __post_init__(self):
        _require_naturals(a=self.a, b=self.b, k=self.k, m=self.m)
        if not self.a < self.b:
            raise PreconditionError(f"Need a < b, got a={self.a}, b={self.b}")
        if not self.m < self.k:
            raise PreconditionError(f"Need m < k, got k={self.k}, m={self.m}")
        for s in (self.a, self.b):
            if not is_strict_triangle(s, self.k, s + self.k - self.m):
                raise DegenerateConfigurationError(
                    f"Triangle ({s}, {self.k}, {s + self.k - self.m}) is degenerate"
                )


class Lemma1Cosines(NamedTuple):
    cos_c1: Fraction
    cos_c2: Fraction
    cos_a1: Fraction
    cos_a2: Fraction


def lemma1_cosines(inst: TriangleCompareInstance) -> Lemma1Cosines:
    """
    The four cosines compared by the first triangle lemma.

    C is the angle between sides k and s + k - m; A the angle between
    sides s and k.
    """
    k, m = inst.k, inst.m

    def cos_c(s):
        return cos_angle(k, s + k - m, s)

    def cos_a(s):
        return cos_angle(s, k, s + k - m)

    return Lemma1Cosines(cos_c(inst.a), cos_c(inst.b), cos_a(inst.a), cos_a(inst.b))


def lemma1_check(inst: TriangleCompareInstance) -> bool:
    """True iff both angles grow strictly from the a-triangle to the b-triangle."""
    cosines = lemma1_cosines(inst)
    return cosines.cos_c1 > cosines.cos_c2 and cosines.cos_a1 > cosines.cos_a2


def cos_c_is_decreasing(k: int, m: int, s_max: int) -> bool:
    """
    Whether cos_angle(k, s + k - m, s) is strictly decreasing over the
    valid s in 1..s_max.
    """
    previous = None
    for s in range(1, s_max + 1):
        if not is_strict_triangle(k, s + k - m, s):
            continue
        current = cos_angle(k, s + k - m, s)
        if previous is not None and not current < previous:
            return False
        previous = current
    return True


class AngleMode(models.TextChoices):
    TASK1 = 'task1', 'c <= b - 1'
    TASK2 = 'task2', 'c = b + m, m >= 1'


@dataclass(frozen=True)
class AngleCompareInstance:
    """
    Triangle with sides a, b, c; alpha is the angle opposite a.
    """
    a: int
    b: int
    c: int
    mode: AngleMode = AngleMode.TASK1

    def __post_init__(self):
        _require_naturals(a=self.a, b=self.b, c=self.c)
        if not is_strict_triangle(self.a, self.b, self.c):
            raise DegenerateConfigurationError(
                f"Sides ({self.a}, {self.b}, {self.c}) do not form a non-degenerate triangle"
            )
        if self.mode == AngleMode.TASK1:
            if not (self.c <= self.b - 1 and self.a >= 2 and self.b >= 3):
                raise PreconditionError(
                    f"Task 1 instance needs c <= b - 1, a >= 2, b >= 3; got {self}"
                )
        elif self.mode == AngleMode.TASK2:
            if not (self.c >= self.b + 1 and self.a >= self.c - self.b + 1):
                raise PreconditionError(
                    f"Task 2 instance needs c >= b + 1 and a >= c - b + 1; got {self}"
                )
        else:
            raise PreconditionError(f"Unknown mode {self.mode!r}")

    @property
    def m(self) -> int:
        return self.c - self.b


def cos_alpha(inst: AngleCompareInstance) -> Fraction:
    return cos_angle(inst.b, inst.c, inst.a)


def task1_cos_beta(b: int) -> Fraction:
    """cos of the angle opposite side 2 in the triangle (b, b - 1, 2)."""
    return Fraction(2 * b * b - 2 * b - 3, 2 * b * (b - 1))


def task2_cos_beta(b: int) -> Fraction:
    """cos of the angle opposite side 2 in the triangle (b, b + 1, 2)."""
    return Fraction(2 * b * (b + 1) - 3, 2 * b * (b + 1))


def task1_check(inst: AngleCompareInstance) -> bool:
    if inst.mode != AngleMode.TASK1:
        raise PreconditionError("task1_check needs a Task 1 instance")
    return cos_alpha(inst) <= task1_cos_beta(inst.b)


def task2_check(inst: AngleCompareInstance) -> bool:
    if inst.mode != AngleMode.TASK2:
        raise PreconditionError("task2_check needs a Task 2 instance")
    return cos_alpha(inst) <= task2_cos_beta(inst.b)


def task2_extremal_side(b: int, m: int) -> int:
    """
    The side a with the largest cos(alpha), i.e. the smallest alpha,
    among all valid Task 2 triangles with sides b and b + m.
    """
    _require_naturals(b=b, m=m)
    c = b + m
    best_side, best_cos = None, None
    for a in range(m + 1, b + c):
        value = cos_alpha(AngleCompareInstance(a, b, c, AngleMode.TASK2))
        if best_cos is None or value > best_cos:
            best_side, best_cos = a, value
    return best_side


class CrossingOrientation(models.TextChoices):
    # A-C2 and B-C1 cross, as drawn
    FIGURE = 'figure', 'A-C2 crosses B-C1'
    # A-C1 and B-C2 cross
    SEGMENTS = 'segments', 'A-C1 crosses B-C2'


@dataclass(frozen=True)
class CrossingInstance:
    """
    Four rational points whose designated segments cross internally.
    """
    A: QuadPoint
    B: QuadPoint
    C1: QuadPoint
    C2: QuadPoint
    orientation: CrossingOrientation = CrossingOrientation.FIGURE

    def __post_init__(self):
        points = (self.A, self.B, self.C1, self.C2)
        if not all(point.is_rational for point in points):
            raise PreconditionError("Crossing instances need rational coordinates")
        if len(set(points)) != 4:
            raise DegenerateConfigurationError("Crossing instance points must be distinct")
        if not segments_cross(*self.crossing_segments):
            first, second = self.crossing_segment_names
            raise DegenerateConfigurationError(f"Segments {first} and {second} do not cross")

    @property
    def crossing_segments(self):
        if self.orientation == CrossingOrientation.FIGURE:
            return self.A, self.C2, self.B, self.C1
        return self.A, self.C1, self.B, self.C2

    @property
    def crossing_segment_names(self):
        if self.orientation == CrossingOrientation.FIGURE:
            return 'A-C2', 'B-C1'
        return 'A-C1', 'B-C2'

    def relabeled(self) -> 'CrossingInstance':
        """Same points with C1 and C2 swapped, in the other orientation."""
        other = (
            CrossingOrientation.SEGMENTS
            if self.orientation == CrossingOrientation.FIGURE
            else CrossingOrientation.FIGURE
        )
        return CrossingInstance(self.A, self.B, self.C2, self.C1, other)


def crossing_inequality(inst: CrossingInstance) -> bool:
    """
    Exact truth of |AC2| + |C1B| > |AC1| + |BC2|.

    Lengths are square roots of rational squared lengths and are compared
    by repeated squaring.
    """
    ac2 = distance_squared(inst.A, inst.C2).rat
    c1b = distance_squared(inst.C1, inst.B).rat
    ac1 = distance_squared(inst.A, inst.C1).rat
    bc2 = distance_squared(inst.B, inst.C2).rat
    return compare_sqrt_sums(ac2, c1b, ac1, bc2) > 0


def lemma2_integer_consequence(b: int, a: int, m: int, t: int) -> bool:
    """
    With |AC2| = b, |C1B| = a + m, |AC1| = a and |BC2| = b + t the
    crossing inequality reads b + (a + m) > a + (b + t), i.e. m > t.
    """
    return m > t


def lemma2_hypothesis(b: int, a: int, m: int, t: int) -> bool:
    return b + (a + m) > a + (b + t)
