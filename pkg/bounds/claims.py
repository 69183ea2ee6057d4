"""
Compare search reports with the closed-form bounds and claimed ranges.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ngons.search import SearchReport

from .limits import (
    claimed_n_range,
    concave_diagonal_bound,
    concave_side_bound,
    convex_halfplane_bound,
    n0_bound,
)
from .profile import halfplane_counts, halfplane_difference_profile

logger = logging.getLogger(__name__)


@dataclass
class BoundReport:
    k: int
    mode: str
    n0: int
    concave_side: int
    concave_diagonal: int
    convex_halfplane: int
    claimed_range: Optional[str] = None
    search_max_n: Optional[int] = None
    within_claimed_range: Optional[bool] = None
    difference_range_ok: bool = True
    max_halfplane_count: Optional[int] = None
    halfplane_bound_respected: Optional[bool] = None

    @property
    def consistent(self) -> bool:
        return self.search_max_n is None or self.search_max_n <= self.n0


def bound_report(k: int, mode: str = 'sets') -> BoundReport:
    """Bounds for k with no search attached."""
    claim = claimed_n_range(k)
    return BoundReport(
        k=k,
        mode=str(mode),
        n0=n0_bound(k),
        concave_side=concave_side_bound(k),
        concave_diagonal=concave_diagonal_bound(k),
        convex_halfplane=convex_halfplane_bound(k),
        claimed_range=claim.describe(mode) if claim else None,
    )


def check_claims(report: SearchReport) -> BoundReport:
    """
    Fill a BoundReport from a search report.

    The half-plane counts and offset profiles of the witnesses are
    observations; only max_n_found > 4k makes the result inconsistent.
    """
    result = bound_report(report.k, report.mode)
    result.search_max_n = report.max_n_found

    claim = claimed_n_range(report.k)
    if claim is not None:
        result.within_claimed_range = claim.contains(report.mode, report.max_n_found)
        if not result.within_claimed_range:
            logger.warning(
                f"k={report.k} mode={report.mode}: max_n={report.max_n_found} "
                f"outside claimed {claim.describe(report.mode)}"
            )

    counts = []
    for dset in report.witnesses:
        profiles = halfplane_difference_profile(dset, 0, 1, report.k)
        if not all(profile.within(report.k) for profile in profiles):
            result.difference_range_ok = False
        counts.extend(halfplane_counts(dset, 0, 1))
    if counts:
        result.max_halfplane_count = max(counts)
        result.halfplane_bound_respected = result.max_halfplane_count <= result.convex_halfplane
        if not result.halfplane_bound_respected:
            logger.info(
                f"k={report.k} mode={report.mode}: {result.max_halfplane_count} vertices on one side "
                f"of the baseline, above 2k - 1 = {result.convex_halfplane}"
            )

    if not result.consistent:
        logger.error(f"k={report.k}: max_n={report.max_n_found} exceeds 4k = {result.n0}")
    return result
