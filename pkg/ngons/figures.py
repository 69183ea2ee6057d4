"""
Static SVG figures of certified point sets.
"""

from itertools import combinations
from typing import Dict, List

from django.template.loader import render_to_string

from kernel.geometry import find_collinear_triple
from kernel.sets import DiophantineSet

from .polygons import assemble_polygon

CANVAS = 480
MARGIN = 40


def _fmt(value: float) -> str:
    return '%.3f' % value


def polygon_edges(dset: DiophantineSet) -> set:
    """Index pairs joined by a side of the assembled polygon."""
    size = len(dset)
    if size < 3:
        return {(0, 1)} if size == 2 else set()
    if find_collinear_triple(dset.points) is not None:
        return set()
    ordered = assemble_polygon(list(dset.points), dset.points[0], dset.points[1])
    index = {point: i for i, point in enumerate(dset.points)}
    sides = set()
    for i in range(size):
        u, v = index[ordered[i]], index[ordered[(i + 1) % size]]
        sides.add((min(u, v), max(u, v)))
    return sides


def figure_context(dset: DiophantineSet) -> Dict[str, List[dict]]:
    """
    Autoscaled drawing primitives; the y axis points up.
    """
    coordinates = [point.as_floats() for point in dset.points]
    xs = [x for x, _ in coordinates]
    ys = [y for _, y in coordinates]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    factor = (CANVAS - 2 * MARGIN) / span

    def place(x: float, y: float):
        return MARGIN + (x - min(xs)) * factor, CANVAS - MARGIN - (y - min(ys)) * factor

    placed = [place(x, y) for x, y in coordinates]
    sides = polygon_edges(dset)
    lines, labels = [], []
    for i, j in combinations(range(len(dset)), 2):
        (x1, y1), (x2, y2) = placed[i], placed[j]
        lines.append({
            'x1': _fmt(x1), 'y1': _fmt(y1), 'x2': _fmt(x2), 'y2': _fmt(y2),
            'dashed': (i, j) not in sides,
        })
        labels.append({
            'x': _fmt((x1 + x2) / 2),
            'y': _fmt((y1 + y2) / 2),
            'text': str(dset.distance(i, j)),
        })
    points = [
        {'x': _fmt(x), 'y': _fmt(y), 'name': f"V{i}"}
        for i, (x, y) in enumerate(placed)
    ]
    return {'size': CANVAS, 'lines': lines, 'labels': labels, 'points': points}


def render_svg(dset: DiophantineSet) -> str:
    return render_to_string('ngons/figure.svg', figure_context(dset))
