"""
Bounded exhaustive search for the largest Diophantine set containing a
pair at distance k.

The frame is every vertex within distance M of both baseline endpoints.
search() works on the compatibility graph; brute_force_oracle() walks
all valid apex subsets from coordinates only, and both produce the same
canonical report.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from django.conf import settings
from django.db import models

from core.exceptions import (
    CertificateError,
    InconsistencyError,
    PreconditionError,
    RadicandMismatchError,
)
from kernel.geometry import (
    QuadPoint,
    collinear,
    integer_distance,
    interior_point_witness,
    point_in_triangle,
)
from kernel.sets import DiophantineSet, verify_certificate

from .candidates import ApexCandidate, baseline, enumerate_apexes
from .graph import CompatibilityGraph, build_graph, drop_dominated, find_max_cliques, repair
from .polygons import PolygonKind, assemble_polygon, classify_polygon

logger = logging.getLogger(__name__)


class SearchMode(models.TextChoices):
    SETS = 'sets', 'Diophantine sets'
    CONVEX = 'convex', 'Convex polygons'
    CONCAVE = 'concave', 'Concave polygons'


@dataclass(frozen=True)
class SearchConfig:
    k: int
    max_dist: int
    target_n: Optional[int] = None
    mode: str = SearchMode.SETS

    def __post_init__(self):
        if self.k < 1:
            raise PreconditionError(f"k must be >= 1, got {self.k}")
        if self.max_dist < self.k:
            raise PreconditionError(f"M must be >= k, got M={self.max_dist}, k={self.k}")
        if self.target_n is not None and self.target_n < 3:
            raise PreconditionError(f"target_n must be >= 3, got {self.target_n}")
        if self.mode not in SearchMode.values:
            raise PreconditionError(f"Unknown mode {self.mode!r}")
        object.__setattr__(self, 'mode', SearchMode(self.mode))


def scope_statement(cfg: SearchConfig) -> str:
    return (
        f"Exhaustive over all vertices within distance {cfg.max_dist} of both baseline "
        f"endpoints P=(0,0) and Q=({cfg.k},0); sets with a vertex farther from P or Q "
        f"are not covered."
    )


@dataclass
class SearchReport:
    k: int
    max_dist: int
    mode: str
    apex_count: int
    edge_count: int
    max_n_found: int
    witnesses: List[DiophantineSet] = field(default_factory=list)
    target_n: Optional[int] = None
    scope: str = ''

    @property
    def bound_4k(self) -> int:
        return 4 * self.k

    @property
    def exceeded(self) -> bool:
        return self.max_n_found > self.bound_4k

    @property
    def consistent(self) -> bool:
        return not self.exceeded

    @property
    def target_reached(self) -> Optional[bool]:
        if self.target_n is None:
            return None
        return self.max_n_found >= self.target_n

    def summary_line(self) -> str:
        return (
            f"k={self.k} M={self.max_dist} max_n={self.max_n_found} "
            f"bound={self.bound_4k} consistent={str(self.consistent).lower()}"
        )


def canonical_apexes(apexes: Sequence[ApexCandidate]) -> List[ApexCandidate]:
    return sorted(apexes, key=lambda apex: apex.canonical_key)


def witness_set(k: int, apexes: Sequence[ApexCandidate]) -> DiophantineSet:
    """
    Certified set P, Q, then the apexes in canonical order.

    Raises:
        InconsistencyError: when the set fails its certificate
    """
    P, Q = baseline(k)
    points = [P, Q] + [apex.point for apex in canonical_apexes(apexes)]
    try:
        dset = DiophantineSet.from_points(points)
        verify_certificate(dset)
    except CertificateError as exc:
        raise InconsistencyError(f"Witness {[str(a) for a in apexes]} failed its certificate: {exc}")
    if dset.distance(0, 1) != k:
        raise InconsistencyError(f"Witness baseline is {dset.distance(0, 1)}, expected {k}")
    return dset


def _all_points(k: int, apexes: Sequence[ApexCandidate]) -> List[QuadPoint]:
    P, Q = baseline(k)
    return [P, Q] + [apex.point for apex in apexes]


def is_convex_set(k: int, apexes: Sequence[ApexCandidate]) -> bool:
    return interior_point_witness(_all_points(k, apexes)) is None


def polygon_check(k: int, apexes: Sequence[ApexCandidate], mode: str) -> None:
    """
    Confirm a polygon-mode witness through the assembled polygon.

    Raises:
        InconsistencyError: when the polygon disagrees with the mode
    """
    if mode == SearchMode.SETS:
        return
    points = _all_points(k, apexes)
    ordered = assemble_polygon(points, points[0], points[1])
    kind = classify_polygon(ordered)
    if mode == SearchMode.CONVEX and kind != PolygonKind.CONVEX:
        raise InconsistencyError(f"Convex-position witness assembled into a {kind} polygon")
    if mode == SearchMode.CONCAVE:
        if kind != PolygonKind.CONCAVE:
            raise InconsistencyError(f"Concave witness assembled into a {kind} polygon")
        witness = interior_point_witness(points)
        if witness is None or not point_in_triangle(*(points[i] for i in witness)):
            raise InconsistencyError("Concave witness has no vertex inside a triangle of others")


def _convex_violation(g: CompatibilityGraph) -> Callable[[Sequence[int]], Optional[Tuple[int, ...]]]:
    """Apexes of a point-in-triangle quadruple; the baseline endpoints are never removed."""
    def find(indices: Sequence[int]):
        witness = interior_point_witness(_all_points(g.k, [g.vertices[i] for i in indices]))
        if witness is None:
            return None
        return tuple(indices[t - 2] for t in witness if t >= 2)
    return find


def admissible_sets(g: CompatibilityGraph, mode: str) -> List[FrozenSet[int]]:
    """
    The maximal admissible apex sets of the graph for the given mode.

    sets: maximal general-position cliques. convex: their maximal subsets
    in convex position. concave: maximal general-position cliques that
    are not in convex position.
    """
    cliques = [frozenset(c) for c in find_max_cliques(g, min_size=1)]
    if mode == SearchMode.SETS:
        return cliques
    if mode == SearchMode.CONVEX:
        find = _convex_violation(g)
        parts = []
        for clique in cliques:
            parts.extend(repair(clique, find))
        return drop_dominated(parts)
    return [
        clique for clique in cliques
        if not is_convex_set(g.k, [g.vertices[i] for i in clique])
    ]


def _build_report(
    cfg: SearchConfig,
    apex_count: int,
    edge_count: int,
    best: List[List[ApexCandidate]],
) -> SearchReport:
    size = len(best[0]) if best else 0
    witnesses = []
    for apexes in best:
        polygon_check(cfg.k, apexes, cfg.mode)
        witnesses.append((tuple(a.canonical_key for a in canonical_apexes(apexes)), apexes))
    witnesses.sort(key=lambda item: item[0])
    return SearchReport(
        k=cfg.k,
        max_dist=cfg.max_dist,
        mode=str(cfg.mode),
        apex_count=apex_count,
        edge_count=edge_count,
        max_n_found=size + 2 if size else 0,
        witnesses=[witness_set(cfg.k, apexes) for _, apexes in witnesses],
        target_n=cfg.target_n,
        scope=scope_statement(cfg),
    )


def search(cfg: SearchConfig, workers: int = 1) -> SearchReport:
    """
    Largest admissible set within the frame, with every maximum witness.
    """
    g = build_graph(cfg, workers)
    sets = admissible_sets(g, cfg.mode)
    size = max((len(s) for s in sets), default=0)
    best = [[g.vertices[i] for i in sorted(s)] for s in sets if len(s) == size and size > 0]
    report = _build_report(cfg, len(g.vertices), g.edge_count, best)
    logger.info(report.summary_line() + f" mode={cfg.mode} witnesses={len(report.witnesses)}")
    if report.exceeded:
        logger.error(f"max_n_found {report.max_n_found} exceeds 4k = {report.bound_4k}")
    return report


def _pair_distance(u: QuadPoint, v: QuadPoint) -> Optional[int]:
    try:
        return integer_distance(u, v)
    except RadicandMismatchError:
        return None


def brute_force_oracle(cfg: SearchConfig) -> SearchReport:
    """
    Same report as search(), from a depth-first walk over every valid apex
    subset re-verified from coordinates.

    Raises:
        PreconditionError: when M exceeds the configured oracle guard
    """
    guard = settings.DIOPHANTINE_LAB['ORACLE_MAX_DIST']
    if cfg.max_dist > guard:
        raise PreconditionError(f"brute_force_oracle is limited to M <= {guard}, got {cfg.max_dist}")

    apexes = enumerate_apexes(cfg)
    P, Q = baseline(cfg.k)
    points = [apex.point for apex in apexes]

    def extends(members: Tuple[int, ...], j: int) -> bool:
        candidate = points[j]
        anchors = [P, Q] + [points[i] for i in members]
        if any(_pair_distance(candidate, points[i]) is None for i in members):
            return False
        try:
            return not any(
                collinear(anchors[x], anchors[y], candidate)
                for x in range(len(anchors))
                for y in range(x + 1, len(anchors))
            )
        except RadicandMismatchError:
            return False

    valid: List[Tuple[int, ...]] = []
    stack: List[Tuple[int, ...]] = [(j,) for j in reversed(range(len(apexes)))]
    while stack:
        members = stack.pop()
        valid.append(members)
        for j in reversed(range(members[-1] + 1, len(apexes))):
            if extends(members, j):
                stack.append(members + (j,))

    edge_count = sum(1 for members in valid if len(members) == 2)
    if cfg.mode == SearchMode.SETS:
        admissible = valid
    elif cfg.mode == SearchMode.CONVEX:
        admissible = [m for m in valid if is_convex_set(cfg.k, [apexes[i] for i in m])]
    else:
        admissible = [m for m in valid if not is_convex_set(cfg.k, [apexes[i] for i in m])]

    size = max((len(m) for m in admissible), default=0)
    best = [[apexes[i] for i in m] for m in admissible if len(m) == size and size > 0]
    report = _build_report(cfg, len(apexes), edge_count, best)
    logger.info(
        f"oracle: {len(valid)} valid apex subsets; " + report.summary_line()
    )
    return report


def reports_match(left: SearchReport, right: SearchReport) -> Dict[str, Tuple[object, object]]:
    """Fields on which two reports differ; empty when they agree."""
    differences = {}
    for name in ('k', 'max_dist', 'mode', 'apex_count', 'edge_count', 'max_n_found'):
        if getattr(left, name) != getattr(right, name):
            differences[name] = (getattr(left, name), getattr(right, name))
    if left.witnesses != right.witnesses:
        differences['witnesses'] = (len(left.witnesses), len(right.witnesses))
    return differences
