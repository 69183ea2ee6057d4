"""
Management command to run the brute-force subset oracle on a small frame.

Usage:
    python manage.py oracle --k 2 --max-dist 10
    python manage.py oracle --k 3 --max-dist 12 --mode concave --compare
"""

from core.exceptions import InconsistencyError
from ngons.search import brute_force_oracle, reports_match, search

from .search import Command as SearchCommand


class Command(SearchCommand):
    help = 'Brute-force subset oracle for the bounded search (M is capped by ORACLE_MAX_DIST)'
    report_prefix = 'oracle'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--compare',
            action='store_true',
            help='Also run the graph search and fail unless both reports agree'
        )

    def handle(self, *args, **options):
        self.compare = options.get('compare', False)
        return super().handle(*args, **options)

    def produce_report(self, cfg, params):
        report = brute_force_oracle(cfg)
        if self.compare:
            differences = reports_match(report, search(cfg, params['threads']))
            if differences:
                raise InconsistencyError(f"Oracle and search disagree on {differences}")
            self.stdout.write('oracle and search reports agree')
        return report
