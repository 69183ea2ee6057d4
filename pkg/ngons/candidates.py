"""
Apex candidates over a fixed baseline.

The baseline endpoints are P = (0, 0) and Q = (k, 0). An apex at
natural distances a from P and b from Q sits at
x = (a^2 - b^2 + k^2) / 2k with y^2 = s = a^2 - x^2, so its coordinates
live in Q(sqrt D) where D is the square-free part of s.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Tuple

from django.db import models

from core.exceptions import PreconditionError
from kernel.arithmetic import rational_sqrt, squarefree_part
from kernel.fields import QuadScalar
from kernel.geometry import QuadPoint

logger = logging.getLogger(__name__)


class Sign(models.IntegerChoices):
    PLUS = 1, '+'
    MINUS = -1, '-'


def baseline(k: int) -> Tuple[QuadPoint, QuadPoint]:
    return QuadPoint.of(0, 0), QuadPoint.of(k, 0)


@dataclass(frozen=True)
class ApexCandidate:
    """
    A vertex fixed by its distances (a, b) to the baseline and the side
    of line PQ it lies on.
    """
    k: int
    a: int
    b: int
    sign: int
    x: Fraction
    s: Fraction
    D: int

    @classmethod
    def build(cls, k: int, a: int, b: int, sign: int) -> 'ApexCandidate':
        """
        Raises:
            PreconditionError: unless |a - b| < k < a + b
        """
        if not abs(a - b) < k < a + b:
            raise PreconditionError(f"(a={a}, b={b}) is not a proper triangle over baseline {k}")
        if sign not in (Sign.PLUS, Sign.MINUS):
            raise PreconditionError(f"sign must be +1 or -1, got {sign!r}")
        x = Fraction(a * a - b * b + k * k, 2 * k)
        s = a * a - x * x
        return cls(k, a, b, int(sign), x, s, squarefree_part(s.numerator * s.denominator))

    @cached_property
    def y(self) -> QuadScalar:
        return QuadScalar.sqrt_of(self.s) * self.sign

    @cached_property
    def point(self) -> QuadPoint:
        return QuadPoint(QuadScalar(self.x), self.y)

    @property
    def canonical_key(self) -> Tuple[int, Fraction, int, int, int]:
        return self.D, self.x, self.sign, self.a, self.b

    @property
    def label(self) -> str:
        return f"({self.a},{self.b},{Sign(self.sign).label})"

    def __str__(self) -> str:
        return self.label


def enumerate_apexes(cfg) -> List[ApexCandidate]:
    """
    Every candidate with a, b <= M and |a - b| < k < a + b, both signs,
    in (a, b, sign) order with + before -.
    """
    k, max_dist = cfg.k, cfg.max_dist
    apexes = []
    for a in range(1, max_dist + 1):
        for b in range(max(1, a - k + 1), min(max_dist, a + k - 1) + 1):
            if a + b <= k:
                continue
            for sign in (Sign.PLUS, Sign.MINUS):
                apexes.append(ApexCandidate.build(k, a, b, sign))
    logger.debug(f"k={k} M={max_dist}: {len(apexes)} apex candidates")
    return apexes


def compatible(u: ApexCandidate, v: ApexCandidate, k: int) -> Optional[int]:
    """
    The natural distance between two realized apexes, or None.

    Equal radicand classes are necessary: otherwise sqrt(s_u * s_v) is
    irrational and the squared distance carries a surd part.

    Raises:
        PreconditionError: for u == v or a baseline other than k
    """
    if u.k != k or v.k != k:
        raise PreconditionError(f"Candidates built over baselines {u.k}, {v.k}, expected {k}")
    if u == v:
        raise PreconditionError(f"compatible needs two distinct candidates, got {u} twice")
    if u.D != v.D:
        return None

    cross_term = rational_sqrt(u.s * v.s)
    if cross_term is None:
        raise PreconditionError(f"s-product of {u} and {v} is not a square despite D={u.D}")
    epsilon = 1 if u.sign == v.sign else -1
    dx = u.x - v.x
    squared = dx * dx + u.s + v.s - 2 * epsilon * cross_term
    if squared <= 0:
        return None
    root = rational_sqrt(squared)
    if root is None or root.denominator != 1:
        return None
    return root.numerator
