"""
Exhaustive grid sweeps for the triangle lemmas and the crossing lemma.

Each sweep returns a SweepResult whose rows cover every valid instance
in grid order and whose counterexamples are sorted lexicographically.
Grid instances that fall outside a lemma's hypotheses are counted as
flagged rather than tested.
"""

import csv
import io
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from core.exceptions import PreconditionError
from core.parallel import parallel_map
from core.serializers import format_rational
from kernel.geometry import QuadPoint, collinear, distance_squared

from .laws import (
    AngleCompareInstance,
    AngleMode,
    CrossingInstance,
    TriangleCompareInstance,
    cos_alpha,
    cos_c_is_decreasing,
    crossing_inequality,
    lemma1_cosines,
    lemma2_hypothesis,
    lemma2_integer_consequence,
    task1_check,
    task1_cos_beta,
    task2_check,
    task2_cos_beta,
    task2_extremal_side,
)

logger = logging.getLogger(__name__)

LEMMA1_COLUMNS = ('a', 'b', 'k', 'm', 'cosC1', 'cosC2', 'cosA1', 'cosA2', 'holds')
TASK_COLUMNS = ('a', 'b', 'c', 'm', 'cos_alpha', 'cos_beta', 'holds')
CROSSING_COLUMNS = (
    'index', 'A', 'B', 'C1', 'C2',
    'AC2_sq', 'C1B_sq', 'AC1_sq', 'BC2_sq', 'holds', 'holds_swapped_labels',
)
LEMMA2_COLUMNS = ('b', 'a', 'm', 't', 'holds')


@dataclass
class SweepResult:
    name: str
    columns: Tuple[str, ...]
    rows: List[Dict[str, object]] = field(default_factory=list)
    counterexamples: List[Dict[str, object]] = field(default_factory=list)
    flagged: int = 0
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def summary(self) -> str:
        return (
            f"{self.name}: instances={len(self.rows)} "
            f"counterexamples={len(self.counterexamples)} flagged={self.flagged}"
        )


def _finish(name: str, columns, rows, flagged: int = 0, sort_key=None) -> SweepResult:
    sort_key = sort_key or (lambda row: tuple(row[column] for column in columns[:4]))
    counterexamples = sorted((row for row in rows if not row['holds']), key=sort_key)
    result = SweepResult(name, tuple(columns), rows, counterexamples, flagged)
    logger.info(result.summary())
    for row in counterexamples:
        logger.warning(f"{name} counterexample: {row}")
    return result


def _lemma1_rows_for_k(job: Tuple[int, int, int, int]):
    """Rows of the first triangle lemma for one value of k."""
    k, m_max, a_max, b_max = job
    rows, flagged = [], 0
    for m in range(1, min(k, m_max + 1)):
        for a in range(1, a_max + 1):
            for b in range(a + 1, b_max + 1):
                try:
                    inst = TriangleCompareInstance(a, b, k, m)
                except PreconditionError:
                    flagged += 1
                    continue
                cosines = lemma1_cosines(inst)
                rows.append({
                    'a': a, 'b': b, 'k': k, 'm': m,
                    'cosC1': cosines.cos_c1, 'cosC2': cosines.cos_c2,
                    'cosA1': cosines.cos_a1, 'cosA2': cosines.cos_a2,
                    'holds': cosines.cos_c1 > cosines.cos_c2 and cosines.cos_a1 > cosines.cos_a2,
                })
    return rows, flagged


def sweep_lemma1(a_max: int, b_max: int, k_max: int, m_max: int, workers: int = 1) -> SweepResult:
    """
    Every instance a < b, 1 <= m < k with a <= a_max, b <= b_max,
    k <= k_max and m <= m_max.
    """
    jobs = [(k, m_max, a_max, b_max) for k in range(2, k_max + 1)]
    rows, flagged = [], 0
    for part_rows, part_flagged in parallel_map(_lemma1_rows_for_k, jobs, workers):
        rows.extend(part_rows)
        flagged += part_flagged
    result = _finish('lemma1', LEMMA1_COLUMNS, rows, flagged)

    s_max = max(a_max, b_max)
    monotone_failures = [
        (k, m)
        for k in range(2, k_max + 1)
        for m in range(1, min(k, m_max + 1))
        if not cos_c_is_decreasing(k, m, s_max)
    ]
    result.notes['monotone_failures'] = monotone_failures
    return result


def _task1_rows_for_b(b: int):
    rows, flagged = [], 0
    for c in range(1, b):
        for a in range(b - c + 1, b + c):
            try:
                inst = AngleCompareInstance(a, b, c, AngleMode.TASK1)
            except PreconditionError:
                flagged += 1
                continue
            rows.append({
                'a': a, 'b': b, 'c': c, 'm': c - b,
                'cos_alpha': cos_alpha(inst), 'cos_beta': task1_cos_beta(b),
                'holds': task1_check(inst),
            })
    return rows, flagged


def sweep_task1(b_max: int, workers: int = 1) -> SweepResult:
    """All valid triangles with c <= b - 1 and b <= b_max."""
    rows, flagged = [], 0
    for part_rows, part_flagged in parallel_map(_task1_rows_for_b, range(2, b_max + 1), workers):
        rows.extend(part_rows)
        flagged += part_flagged
    return _finish('task1', TASK_COLUMNS, rows, flagged)


def _task2_rows_for_b(job: Tuple[int, int]):
    b, m_max = job
    rows, flagged = [], 0
    for m in range(1, m_max + 1):
        c = b + m
        for a in range(m + 1, b + c):
            try:
                inst = AngleCompareInstance(a, b, c, AngleMode.TASK2)
            except PreconditionError:
                flagged += 1
                continue
            rows.append({
                'a': a, 'b': b, 'c': c, 'm': m,
                'cos_alpha': cos_alpha(inst), 'cos_beta': task2_cos_beta(b),
                'holds': task2_check(inst),
            })
    return rows, flagged


def sweep_task2(b_max: int, m_max: int, workers: int = 1) -> SweepResult:
    """All valid triangles with c = b + m, b <= b_max and 1 <= m <= m_max."""
    jobs = [(b, m_max) for b in range(1, b_max + 1)]
    rows, flagged = [], 0
    for part_rows, part_flagged in parallel_map(_task2_rows_for_b, jobs, workers):
        rows.extend(part_rows)
        flagged += part_flagged
    result = _finish('task2', TASK_COLUMNS, rows, flagged)
    result.notes['extremal_side_mismatches'] = [
        (b, m)
        for b in range(1, b_max + 1)
        for m in range(1, m_max + 1)
        if task2_extremal_side(b, m) != m + 1
    ]
    return result


def _random_rational(rng: random.Random, grid_max: int) -> Fraction:
    denominator = rng.randint(1, 4)
    return Fraction(rng.randint(-grid_max * denominator, grid_max * denominator), denominator)


def random_crossing_instances(count: int, seed: int, grid_max: int) -> List[CrossingInstance]:
    """
    count seeded crossing configurations with rational coordinates, no
    three points collinear, labeled so that A-C2 crosses B-C1.
    """
    rng = random.Random(seed)
    instances = []
    while len(instances) < count:
        A, C2, B, C1 = (
            QuadPoint.of(_random_rational(rng, grid_max), _random_rational(rng, grid_max))
            for _ in range(4)
        )
        points = (A, B, C1, C2)
        if len(set(points)) != 4:
            continue
        if any(
            collinear(points[i], points[j], points[l])
            for i, j, l in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
        ):
            continue
        try:
            instances.append(CrossingInstance(A, B, C1, C2))
        except PreconditionError:
            continue
    return instances


def _point_text(point: QuadPoint) -> str:
    return f"{format_rational(point.x.rat)};{format_rational(point.y.rat)}"


def sweep_crossings(count: int, seed: int, grid_max: int) -> SweepResult:
    """
    Evaluate the crossing inequality on seeded random configurations.

    holds uses the drawn labeling; holds_swapped_labels evaluates the
    same inequality after exchanging C1 and C2, which makes A-C1 and
    B-C2 the crossing pair.
    """
    rows = []
    for index, inst in enumerate(random_crossing_instances(count, seed, grid_max)):
        rows.append({
            'index': index,
            'A': _point_text(inst.A), 'B': _point_text(inst.B),
            'C1': _point_text(inst.C1), 'C2': _point_text(inst.C2),
            'AC2_sq': distance_squared(inst.A, inst.C2).rat,
            'C1B_sq': distance_squared(inst.C1, inst.B).rat,
            'AC1_sq': distance_squared(inst.A, inst.C1).rat,
            'BC2_sq': distance_squared(inst.B, inst.C2).rat,
            'holds': crossing_inequality(inst),
            'holds_swapped_labels': crossing_inequality(inst.relabeled()),
        })
    result = _finish('crossings', CROSSING_COLUMNS, rows, sort_key=lambda row: row['index'])
    result.notes['swapped_labels_true'] = sum(1 for row in rows if row['holds_swapped_labels'])
    return result


def sweep_lemma2_consequence(limit: int) -> SweepResult:
    """
    Grid b, a, m, t in 1..limit: wherever the length chain
    b + (a + m) > a + (b + t) holds, m > t must follow.
    """
    rows, flagged = [], 0
    for b in range(1, limit + 1):
        for a in range(1, limit + 1):
            for m in range(1, limit + 1):
                for t in range(1, limit + 1):
                    if not lemma2_hypothesis(b, a, m, t):
                        flagged += 1
                        continue
                    rows.append({
                        'b': b, 'a': a, 'm': m, 't': t,
                        'holds': lemma2_integer_consequence(b, a, m, t),
                    })
    return _finish('lemma2_consequence', LEMMA2_COLUMNS, rows, flagged)


def _csv_value(value) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def sweep_to_csv(result: SweepResult) -> str:
    """Counterexamples first, then every other row in grid order."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(result.columns)
    ordered: Sequence[Dict[str, object]] = result.counterexamples + [
        row for row in result.rows if row['holds']
    ]
    for row in ordered:
        writer.writerow([_csv_value(row[column]) for column in result.columns])
    return buffer.getvalue()
