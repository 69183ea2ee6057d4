"""
Certified Diophantine point sets.

A DiophantineSet carries its points, the natural-number distance matrix
and, when it came out of a homothety, the scale factor used.
verify_certificate re-derives every claim from the coordinates.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from core.exceptions import CertificateError, RadicandMismatchError

from .geometry import (
    QuadPoint,
    distance_squared,
    find_collinear_triple,
    integer_distance,
    shared_radicand,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiophantineSet:
    points: Tuple[QuadPoint, ...]
    distance_matrix: Tuple[Tuple[int, ...], ...]
    scale_note: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'points', tuple(self.points))
        object.__setattr__(
            self, 'distance_matrix', tuple(tuple(row) for row in self.distance_matrix)
        )

    @classmethod
    def from_points(
        cls, points: Sequence[QuadPoint], scale_note: Optional[int] = None
    ) -> 'DiophantineSet':
        """
        Measure every pair and build the set.

        Raises:
            CertificateError: when some pair is not at a natural distance
        """
        size = len(points)
        matrix = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                distance = integer_distance(points[i], points[j])
                if distance is None:
                    raise CertificateError(
                        f"Points {i} and {j} are not at a natural-number distance"
                    )
                matrix[i][j] = matrix[j][i] = distance
        return cls(tuple(points), tuple(tuple(row) for row in matrix), scale_note)

    def __len__(self) -> int:
        return len(self.points)

    def distance(self, i: int, j: int) -> int:
        return self.distance_matrix[i][j]


def verify_certificate(dset: DiophantineSet) -> None:
    """
    Check every DiophantineSet invariant from the coordinates.

    - the matrix is square, symmetric and zero on the diagonal;
    - for i != j the exact squared distance equals matrix[i][j]**2 and
      matrix[i][j] >= 1;
    - no three points are collinear.

    Raises:
        CertificateError: describing the first violated invariant
    """
    size = len(dset.points)
    matrix = dset.distance_matrix
    if len(matrix) != size or any(len(row) != size for row in matrix):
        raise CertificateError(f"Distance matrix is not {size}x{size}")
    try:
        shared_radicand(*dset.points)
    except RadicandMismatchError as exc:
        raise CertificateError(str(exc)) from exc

    for i in range(size):
        if matrix[i][i] != 0:
            raise CertificateError(f"Diagonal entry {i} is {matrix[i][i]}, expected 0")
        for j in range(i + 1, size):
            claimed = matrix[i][j]
            if claimed != matrix[j][i]:
                raise CertificateError(f"Distance matrix is not symmetric at ({i}, {j})")
            if not isinstance(claimed, int) or claimed < 1:
                raise CertificateError(f"Distance ({i}, {j}) = {claimed!r} is not a natural number")
            measured = distance_squared(dset.points[i], dset.points[j])
            if not measured.is_rational or measured.rat != claimed * claimed:
                raise CertificateError(
                    f"Points {i} and {j}: squared distance {measured} != {claimed}**2"
                )

    triple = find_collinear_triple(dset.points)
    if triple is not None:
        raise CertificateError(f"Points {triple} are collinear")

    logger.debug(f"Certified Diophantine set of {size} points")


def is_certified(dset: DiophantineSet) -> bool:
    try:
        verify_certificate(dset)
    except CertificateError:
        return False
    return True
