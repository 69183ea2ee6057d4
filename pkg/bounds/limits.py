"""
Closed-form upper bounds on n for Diophantine n-gons with a side or
diagonal of length k, and the ranges claimed for k = 1, 2, 3.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from core.exceptions import PreconditionError


def _require_k(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise PreconditionError(f"k must be a natural number >= 1, got {k!r}")


def n0_bound(k: int) -> int:
    """Upper bound 4k on the number of vertices."""
    _require_k(k)
    return 4 * k


def concave_side_bound(k: int) -> int:
    """2(k - 1) + 1 + 2 when the distance-k pair is a side."""
    _require_k(k)
    return 2 * k + 1


def concave_diagonal_bound(k: int) -> int:
    """2(2(k - 1) + 1) + 2 when the distance-k pair is a diagonal."""
    _require_k(k)
    return 4 * k


def convex_halfplane_bound(k: int) -> int:
    """Vertices on one side of the line through the distance-k pair."""
    _require_k(k)
    return 2 * k - 1


@dataclass(frozen=True)
class ClaimedRange:
    """
    Values of n asserted to occur for one k, per search mode. Values in
    open_values are asserted possible but have no known example.
    """
    k: int
    by_mode: Dict[str, Tuple[int, ...]]
    open_values: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    note: str = ''

    def values(self, mode: str) -> Tuple[int, ...]:
        return self.by_mode.get(str(mode), ())

    def contains(self, mode: str, n: int) -> bool:
        """n = 0 (nothing found) never contradicts a claim."""
        return n == 0 or n in self.values(mode)

    def describe(self, mode: str) -> str:
        values = self.values(mode)
        if not values:
            text = 'none'
        else:
            text = '{' + ', '.join(str(v) for v in values) + '}'
        open_values = self.open_values.get(str(mode), ())
        if open_values:
            text += f" (open: {', '.join(str(v) for v in open_values)})"
        if self.note:
            text += f"; {self.note}"
        return text


def _span(low: int, high: int) -> Tuple[int, ...]:
    return tuple(range(low, high + 1))


CLAIMED_RANGES = {
    1: ClaimedRange(
        k=1,
        by_mode={'sets': (3,), 'convex': (3,), 'concave': ()},
        note='only isosceles triangles have a side of length 1',
    ),
    2: ClaimedRange(
        k=2,
        by_mode={'sets': _span(3, 6), 'convex': _span(3, 5), 'concave': _span(3, 6)},
        open_values={'sets': (5, 6), 'convex': (5,), 'concave': (5, 6)},
    ),
    3: ClaimedRange(
        k=3,
        by_mode={'sets': _span(3, 7), 'convex': _span(3, 7), 'concave': _span(3, 7)},
        note='stated as 1 <= n <= 7; n < 3 has no polygon',
    ),
}


def claimed_n_range(k: int) -> Optional[ClaimedRange]:
    """The claimed range for k = 1, 2, 3; None beyond."""
    _require_k(k)
    return CLAIMED_RANGES.get(k)
