"""
Management command to check search results against the 4k bound and the
claimed ranges for small k.

Either runs fresh searches for k = 1..k_max in the requested modes or
checks existing search report files.

Usage:
    python manage.py check_bounds
    python manage.py check_bounds --k-max 2 --max-dist 12 --mode convex
    python manage.py check_bounds --report reports/search_k3_M20_sets.json --report other.json
"""

from pathlib import Path

from django.conf import settings
from django.core.management.base import CommandError
from rest_framework import serializers
from rest_framework.exceptions import ParseError, ValidationError

from bounds.claims import check_claims
from bounds.serializers import BoundReportSerializer, bounds_table
from core.commands import USAGE_ERROR, LabCommand, LabOptionsSerializer
from core.exceptions import InconsistencyError
from core.serializers import parse_json, render_json
from ngons.search import SearchConfig, SearchMode, search
from ngons.serializers import SearchReportSerializer

ALL_MODES = 'all'


class CheckBoundsOptionsSerializer(LabOptionsSerializer):
    k_max = serializers.IntegerField(min_value=1)
    max_dist = serializers.IntegerField(min_value=1)
    mode = serializers.ChoiceField(choices=SearchMode.values + [ALL_MODES])
    report = serializers.ListField(child=serializers.CharField(), required=False)
    out = serializers.CharField(required=False)


class Command(LabCommand):
    help = 'Check search results against the closed-form bounds and claimed ranges'
    options_serializer_class = CheckBoundsOptionsSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--k-max', type=int, default=None, help='Search k = 1..k_max')
        parser.add_argument(
            '--max-dist',
            type=int,
            default=None,
            help='Search frame M (raised to k when smaller)'
        )
        parser.add_argument(
            '--mode',
            default=None,
            choices=SearchMode.values + [ALL_MODES],
            help='Search mode, or all'
        )
        parser.add_argument(
            '--report',
            action='append',
            default=None,
            help='Existing search report to check instead of searching (repeatable)'
        )
        parser.add_argument('--out', help='JSON path (default: REPORT_DIR/bounds.json)')

    def get_defaults(self):
        defaults = super().get_defaults()
        defaults.update(settings.DIOPHANTINE_LAB['BOUNDS_DEFAULTS'])
        return defaults

    def load_reports(self, paths):
        reports = []
        for path in paths:
            try:
                serializer = SearchReportSerializer(data=parse_json(Path(path).read_bytes()))
                serializer.is_valid(raise_exception=True)
            except (ParseError, ValidationError) as exc:
                raise CommandError(f"{path}: {exc.detail}", returncode=USAGE_ERROR)
            reports.append(serializer.save())
        return reports

    def run_searches(self, params):
        modes = SearchMode.values if params['mode'] == ALL_MODES else [params['mode']]
        reports = []
        for k in range(1, params['k_max'] + 1):
            for mode in modes:
                cfg = SearchConfig(k=k, max_dist=max(params['max_dist'], k), mode=mode)
                reports.append(search(cfg, params['threads']))
        return reports

    def run(self, params):
        if params.get('report'):
            reports = self.load_reports(params['report'])
        else:
            reports = self.run_searches(params)

        results = [check_claims(report) for report in reports]
        out = params.get('out') or Path(settings.DIOPHANTINE_LAB['REPORT_DIR']) / 'bounds.json'
        self.write_output(out, render_json(BoundReportSerializer(results, many=True).data))

        self.stdout.write(bounds_table(results))
        for result in results:
            if result.claimed_range:
                self.stdout.write(f"k={result.k} {result.mode} claimed: {result.claimed_range}")

        failures = [r for r in results if not r.consistent or not r.difference_range_ok]
        if failures:
            raise InconsistencyError(
                'Bound violations for ' + ', '.join(f"k={r.k} mode={r.mode}" for r in failures)
            )
        self.stdout.write(self.style.SUCCESS(f"{len(results)} reports consistent with n <= 4k"))
