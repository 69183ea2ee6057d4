"""
Difference profiles of certified sets around a distance-k pair.

For every vertex V other than P and Q the offset |VP| - |VQ| is an
integer strictly between -k and k. Offsets are grouped by the side of
line PQ and listed in angular order about P.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from core.exceptions import PreconditionError
from kernel.sets import DiophantineSet
from ngons.polygons import angular_order, split_by_line

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HalfplaneProfile:
    side: str
    deltas: Tuple[int, ...]

    @property
    def distinct(self) -> bool:
        return len(set(self.deltas)) == len(self.deltas)

    @property
    def monotone(self) -> bool:
        """Strictly increasing or strictly decreasing."""
        steps = [b - a for a, b in zip(self.deltas, self.deltas[1:])]
        return all(step > 0 for step in steps) or all(step < 0 for step in steps)

    def within(self, k: int) -> bool:
        return all(abs(delta) <= k - 1 for delta in self.deltas)


def _check_pair(dset: DiophantineSet, p: int, q: int, k: int) -> None:
    if p == q or not (0 <= p < len(dset) and 0 <= q < len(dset)):
        raise PreconditionError(f"({p}, {q}) is not a pair of distinct vertices")
    if dset.distance(p, q) != k:
        raise PreconditionError(f"Vertices {p}, {q} are {dset.distance(p, q)} apart, expected {k}")


def halfplane_difference_profile(dset: DiophantineSet, p: int, q: int, k: int) -> List[HalfplaneProfile]:
    """
    [upper, lower] profiles of the set about the pair (p, q), upper being
    the left side of the directed line p -> q.

    Raises:
        PreconditionError: when vertices p and q are not at distance k
    """
    _check_pair(dset, p, q, k)
    P, Q = dset.points[p], dset.points[q]
    index = {point: i for i, point in enumerate(dset.points)}
    others = [point for i, point in enumerate(dset.points) if i not in (p, q)]
    left, right = split_by_line(others, P, Q)

    profiles = []
    for side, points in (('upper', left), ('lower', right)):
        deltas = tuple(
            dset.distance(index[point], p) - dset.distance(index[point], q)
            for point in angular_order(points, P)
        )
        profiles.append(HalfplaneProfile(side, deltas))
        if not profiles[-1].within(k):
            logger.error(f"Offsets {deltas} on the {side} side leave [-{k - 1}, {k - 1}]")
    return profiles


def halfplane_counts(dset: DiophantineSet, p: int, q: int) -> Tuple[int, int]:
    """(upper, lower) vertex counts about the line through vertices p and q."""
    P, Q = dset.points[p], dset.points[q]
    left, right = split_by_line(
        [point for i, point in enumerate(dset.points) if i not in (p, q)], P, Q
    )
    return len(left), len(right)
