"""
Management command to search for the largest Diophantine set containing a
pair at distance k, within the frame of vertices at most M from both ends.

Usage:
    python manage.py search
    python manage.py search --k 3 --max-dist 20 --mode convex
    python manage.py search --k 1 --max-dist 60 --out reports/k1.json --csv reports/k1.csv
"""

from pathlib import Path

from django.conf import settings
from rest_framework import serializers

from core.commands import LabCommand, LabOptionsSerializer
from core.exceptions import InconsistencyError
from ngons.search import SearchConfig, SearchMode, search
from ngons.serializers import render_report, report_summary_csv


class SearchOptionsSerializer(LabOptionsSerializer):
    """
    Search frame and output options.
    """
    k = serializers.IntegerField(min_value=1)
    max_dist = serializers.IntegerField(min_value=1)
    mode = serializers.ChoiceField(choices=SearchMode.choices)
    target_n = serializers.IntegerField(min_value=3, required=False, allow_null=True)
    out = serializers.CharField(required=False)
    csv = serializers.CharField(required=False)

    def validate(self, attrs):
        if attrs['max_dist'] < attrs['k']:
            raise serializers.ValidationError({'max_dist': 'must be >= k'})
        return attrs


class Command(LabCommand):
    help = 'Bounded exhaustive search for the largest Diophantine set with a pair at distance k'
    options_serializer_class = SearchOptionsSerializer
    report_prefix = 'search'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--k', type=int, default=None, help='Baseline distance k')
        parser.add_argument(
            '--max-dist',
            type=int,
            default=None,
            help='Largest distance from an apex to either baseline endpoint'
        )
        parser.add_argument(
            '--mode',
            default=None,
            choices=SearchMode.values,
            help='sets, convex or concave (default from settings)'
        )
        parser.add_argument(
            '--target-n',
            type=int,
            default=None,
            help='Report whether a set of this size was reached'
        )
        parser.add_argument('--out', help='JSON report path (default under REPORT_DIR)')
        parser.add_argument('--csv', help='Optional CSV summary path')

    def get_defaults(self):
        defaults = super().get_defaults()
        defaults.update(settings.DIOPHANTINE_LAB['SEARCH_DEFAULTS'])
        return defaults

    def default_out(self, params) -> Path:
        name = f"{self.report_prefix}_k{params['k']}_M{params['max_dist']}_{params['mode']}.json"
        return Path(settings.DIOPHANTINE_LAB['REPORT_DIR']) / name

    def build_config(self, params) -> SearchConfig:
        return SearchConfig(
            k=params['k'],
            max_dist=params['max_dist'],
            target_n=params.get('target_n'),
            mode=params['mode'],
        )

    def produce_report(self, cfg, params):
        return search(cfg, params['threads'])

    def run(self, params):
        cfg = self.build_config(params)
        report = self.produce_report(cfg, params)

        self.write_output(params.get('out') or self.default_out(params), render_report(report))
        self.write_output(params.get('csv'), report_summary_csv([report]))

        self.stdout.write(report.summary_line())
        self.stdout.write(f"mode={report.mode} apexes={report.apex_count} edges={report.edge_count} "
                          f"witnesses={len(report.witnesses)}")
        if report.target_n is not None:
            self.stdout.write(
                f"target_n={report.target_n} reached={str(report.target_reached).lower()}"
            )
        self.stdout.write(report.scope)
        if report.exceeded:
            raise InconsistencyError(
                f"max_n={report.max_n_found} exceeds the bound 4k={report.bound_4k}"
            )
