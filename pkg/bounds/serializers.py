"""
Bounds app serializers.
"""

from rest_framework import serializers

TABLE_COLUMNS = (
    ('k', 'k', 3),
    ('mode', 'mode', 8),
    ('max_n', 'search_max_n', 6),
    ('4k', 'n0', 4),
    ('2k+1', 'concave_side', 5),
    ('2k-1', 'convex_halfplane', 5),
    ('side_max', 'max_halfplane_count', 9),
    ('in_claim', 'within_claimed_range', 9),
    ('delta_ok', 'difference_range_ok', 9),
    ('consistent', 'consistent', 10),
)


class BoundReportSerializer(serializers.Serializer):
    """
    Serializer for bound reports (read-only).
    """
    k = serializers.IntegerField()
    mode = serializers.CharField()
    n0 = serializers.IntegerField()
    concave_side = serializers.IntegerField()
    concave_diagonal = serializers.IntegerField()
    convex_halfplane = serializers.IntegerField()
    claimed_range = serializers.CharField(allow_null=True)
    search_max_n = serializers.IntegerField(allow_null=True)
    within_claimed_range = serializers.BooleanField(allow_null=True)
    difference_range_ok = serializers.BooleanField()
    max_halfplane_count = serializers.IntegerField(allow_null=True)
    halfplane_bound_respected = serializers.BooleanField(allow_null=True)
    consistent = serializers.BooleanField(read_only=True)


def _cell(value) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def bounds_table(reports) -> str:
    """Fixed-width table, one row per bound report."""
    lines = [' '.join(title.ljust(width) for title, _, width in TABLE_COLUMNS).rstrip()]
    for report in reports:
        lines.append(' '.join(
            _cell(getattr(report, attr)).ljust(width) for _, attr, width in TABLE_COLUMNS
        ).rstrip())
    return '\n'.join(lines)
