"""
Ngons app serializers.
"""

import csv
import io

from rest_framework import serializers

from core.serializers import DiophantineSetSerializer, render_json

from .search import SearchMode, SearchReport

SUMMARY_COLUMNS = (
    'k', 'max_dist', 'mode', 'apex_count', 'edge_count', 'max_n_found',
    'bound_4k', 'consistent', 'witnesses',
)


class SearchReportSerializer(serializers.Serializer):
    """
    Serializer for search reports.

    Derived flags are rendered for readers and recomputed on load.
    """
    k = serializers.IntegerField(min_value=1)
    max_dist = serializers.IntegerField(min_value=1)
    mode = serializers.ChoiceField(choices=SearchMode.choices)
    scope = serializers.CharField(allow_blank=True)
    apex_count = serializers.IntegerField(min_value=0)
    edge_count = serializers.IntegerField(min_value=0)
    max_n_found = serializers.IntegerField(min_value=0)
    bound_4k = serializers.IntegerField(read_only=True)
    exceeded = serializers.BooleanField(read_only=True)
    consistent = serializers.BooleanField(read_only=True)
    target_n = serializers.IntegerField(min_value=3, required=False, allow_null=True)
    target_reached = serializers.BooleanField(read_only=True, allow_null=True)
    witnesses = DiophantineSetSerializer(many=True)

    def validate(self, attrs):
        if attrs['max_dist'] < attrs['k']:
            raise serializers.ValidationError("max_dist must be >= k")
        for item in attrs['witnesses']:
            size = len(item['dset'])
            if size != attrs['max_n_found']:
                raise serializers.ValidationError(
                    f"Witness of {size} points in a report with max_n_found={attrs['max_n_found']}"
                )
            if item['dset'].distance(0, 1) != attrs['k']:
                raise serializers.ValidationError("Witness baseline is not at distance k")
        return attrs

    def create(self, validated_data):
        witnesses = [item['dset'] for item in validated_data.pop('witnesses')]
        return SearchReport(witnesses=witnesses, **validated_data)


def render_report(report: SearchReport) -> bytes:
    return render_json(SearchReportSerializer(report).data)


def report_summary_csv(reports) -> str:
    """One summary row per report."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(SUMMARY_COLUMNS)
    for report in reports:
        writer.writerow([
            report.k,
            report.max_dist,
            report.mode,
            report.apex_count,
            report.edge_count,
            report.max_n_found,
            report.bound_4k,
            str(report.consistent).lower(),
            len(report.witnesses),
        ])
    return buffer.getvalue()
