"""
Exact integer and rational helpers.

Perfect-square detection, rational square roots, square-free
decomposition and exact sign tests for expressions with one or two
square roots. Every rational is a fractions.Fraction, which is always
kept in lowest terms with a positive denominator.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Optional, Tuple, Union

import sympy
from django.conf import settings

from core.exceptions import PreconditionError

logger = logging.getLogger(__name__)

RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction to Fraction; anything else is rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"Expected int or Fraction, got {type(value).__name__}")


def _sign(value: RationalLike) -> int:
    return (value > 0) - (value < 0)


def is_perfect_square(n: int) -> Optional[int]:
    """
    Return r with r*r == n, or None when n is not a perfect square.

    Raises:
        PreconditionError: for negative n
    """
    if n < 0:
        raise PreconditionError(f"is_perfect_square needs n >= 0, got {n}")
    root = isqrt(n)
    return root if root * root == n else None


def rational_sqrt(q: RationalLike) -> Optional[Fraction]:
    """
    Exact non-negative square root of a rational, or None.

    A reduced fraction is a square iff numerator and denominator both are.
    """
    q = as_rational(q)
    if q < 0:
        raise PreconditionError(f"rational_sqrt needs q >= 0, got {q}")
    num = is_perfect_square(q.numerator)
    if num is None:
        return None
    den = is_perfect_square(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def _trial_division_bound() -> int:
    return settings.DIOPHANTINE_LAB['TRIAL_DIVISION_BOUND']


@lru_cache(maxsize=65536)
def squarefree_decompose(n: int) -> Tuple[int, int]:
    """
    Split n >= 1 as n = s * f**2 with s square-free.

    Small primes are removed by trial division; a cofactor that survives
    the configured bound is factored with sympy.
    """
    if n < 1:
        raise PreconditionError(f"squarefree_decompose needs n >= 1, got {n}")

    squarefree, factor = 1, 1
    rest = n
    bound = _trial_division_bound()
    p = 2
    while p <= bound and p * p <= rest:
        exponent = 0
        while rest % p == 0:
            rest //= p
            exponent += 1
        if exponent:
            factor *= p ** (exponent // 2)
            if exponent % 2:
                squarefree *= p
        p += 1 if p == 2 else 2

    if rest > 1:
        if p * p > rest:
            # rest is prime
            squarefree *= rest
        else:
            logger.debug(f"Falling back to sympy.factorint for cofactor {rest}")
            for prime, exponent in sympy.factorint(rest).items():
                factor *= prime ** (exponent // 2)
                if exponent % 2:
                    squarefree *= prime

    return squarefree, factor


def squarefree_part(n: int) -> int:
    """Square-free part s of n = s * f**2."""
    return squarefree_decompose(n)[0]


def is_squarefree(n: int) -> bool:
    return n >= 1 and squarefree_decompose(n)[1] == 1


def surd_sign(rat: RationalLike, coeff: RationalLike, radicand: RationalLike) -> int:
    """
    Exact sign of rat + coeff * sqrt(radicand) for a rational radicand >= 0.

    Mixed signs are settled by comparing rat**2 with coeff**2 * radicand.
    """
    if radicand < 0:
        raise PreconditionError(f"surd_sign needs a non-negative radicand, got {radicand}")
    if coeff == 0 or radicand == 0:
        return _sign(rat)
    if rat >= 0 and coeff > 0:
        return 1
    if rat <= 0 and coeff < 0:
        return -1
    difference = rat * rat - coeff * coeff * radicand
    return _sign(difference) if rat > 0 else -_sign(difference)


def compare_sqrt_sums(
    l1: RationalLike, l2: RationalLike, r1: RationalLike, r2: RationalLike
) -> int:
    """
    Sign of (sqrt(l1) + sqrt(l2)) - (sqrt(r1) + sqrt(r2)) for rationals >= 0.

    Both sides are non-negative, so the sign equals the sign of the
    difference of squares: base + 2*sqrt(l1*l2) - 2*sqrt(r1*r2), which is
    squared once more when the left part is positive.
    """
    l1, l2, r1, r2 = (as_rational(v) for v in (l1, l2, r1, r2))
    if min(l1, l2, r1, r2) < 0:
        raise PreconditionError("compare_sqrt_sums needs non-negative arguments")

    base = l1 + l2 - r1 - r2
    left_product = l1 * l2
    right_product = r1 * r2

    left_sign = surd_sign(base, 2, left_product)
    if left_sign < 0:
        return -1
    if left_sign == 0:
        return -1 if right_product > 0 else 0
    # (base + 2 sqrt(p))**2 - 4q = base**2 + 4p - 4q + 4 base sqrt(p)
    return surd_sign(
        base * base + 4 * left_product - 4 * right_product,
        4 * base,
        left_product,
    )
