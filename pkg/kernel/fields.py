"""
Elements of real quadratic fields Q(sqrt D).

A QuadScalar is rat + surd * sqrt(D) with rational parts and a
square-free radicand. Rational values are stored with surd = 0 and D = 1
so that equality is structural.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from core.exceptions import PreconditionError, RadicandMismatchError

from .arithmetic import (
    as_rational,
    is_squarefree,
    rational_sqrt,
    squarefree_decompose,
    surd_sign,
)

ScalarLike = Union[int, Fraction, 'QuadScalar']


@dataclass(frozen=True)
class QuadScalar:
    """Exact value rat + surd * sqrt(radicand)."""

    rat: Fraction
    surd: Fraction = Fraction(0)
    radicand: int = 1

    def __post_init__(self):
        rat = as_rational(self.rat)
        surd = as_rational(self.surd)
        radicand = self.radicand
        if radicand < 0:
            raise PreconditionError(f"Radicand must be non-negative, got {radicand}")
        if radicand == 1:
            rat, surd = rat + surd, Fraction(0)
        elif radicand == 0:
            surd = Fraction(0)
        elif not is_squarefree(radicand):
            raise PreconditionError(f"Radicand {radicand} is not square-free")
        if surd == 0:
            radicand = 1
        object.__setattr__(self, 'rat', rat)
        object.__setattr__(self, 'surd', surd)
        object.__setattr__(self, 'radicand', radicand)

    @classmethod
    def coerce(cls, value: ScalarLike) -> 'QuadScalar':
        if isinstance(value, QuadScalar):
            return value
        return cls(as_rational(value))

    @classmethod
    def sqrt_of(cls, q: Union[int, Fraction]) -> 'QuadScalar':
        """
        Exact sqrt(q) for a rational q >= 0.

        With q = n/d reduced, sqrt(q) = sqrt(n*d)/d and n*d = s*f**2, so the
        result is (f/d) * sqrt(s).
        """
        q = as_rational(q)
        if q < 0:
            raise PreconditionError(f"sqrt_of needs q >= 0, got {q}")
        root = rational_sqrt(q)
        if root is not None:
            return cls(root)
        squarefree, factor = squarefree_decompose(q.numerator * q.denominator)
        return cls(Fraction(0), Fraction(factor, q.denominator), squarefree)

    @property
    def is_rational(self) -> bool:
        return self.surd == 0

    @property
    def is_zero(self) -> bool:
        return self.rat == 0 and self.surd == 0

    def sign(self) -> int:
        return surd_sign(self.rat, self.surd, self.radicand)

    def _radicand_with(self, other: 'QuadScalar') -> int:
        if self.is_rational:
            return other.radicand
        if other.is_rational or other.radicand == self.radicand:
            return self.radicand
        raise RadicandMismatchError(
            f"Cannot combine elements of Q(sqrt {self.radicand}) and Q(sqrt {other.radicand})"
        )

    def __add__(self, other: ScalarLike) -> 'QuadScalar':
        if not isinstance(other, (QuadScalar, int, Fraction)):
            return NotImplemented
        other = QuadScalar.coerce(other)
        radicand = self._radicand_with(other)
        return QuadScalar(self.rat + other.rat, self.surd + other.surd, radicand)

    __radd__ = __add__

    def __neg__(self) -> 'QuadScalar':
        return QuadScalar(-self.rat, -self.surd, self.radicand)

    def __sub__(self, other: ScalarLike) -> 'QuadScalar':
        if not isinstance(other, (QuadScalar, int, Fraction)):
            return NotImplemented
        return self + (-QuadScalar.coerce(other))

    def __rsub__(self, other: ScalarLike) -> 'QuadScalar':
        return QuadScalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> 'QuadScalar':
        if not isinstance(other, (QuadScalar, int, Fraction)):
            return NotImplemented
        other = QuadScalar.coerce(other)
        radicand = self._radicand_with(other)
        # (a + b sqrt D)(c + d sqrt D) = ac + bdD + (ad + bc) sqrt D
        return QuadScalar(
            self.rat * other.rat + self.surd * other.surd * radicand,
            self.rat * other.surd + self.surd * other.rat,
            radicand,
        )

    __rmul__ = __mul__

    def __lt__(self, other: ScalarLike) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: ScalarLike) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: ScalarLike) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: ScalarLike) -> bool:
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return float(self.rat) + float(self.surd) * math.sqrt(self.radicand)

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.rat)
        return f"{self.rat} + {self.surd}*sqrt({self.radicand})"


ZERO = QuadScalar(Fraction(0))
