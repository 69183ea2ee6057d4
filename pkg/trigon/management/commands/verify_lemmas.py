"""
Management command to sweep the triangle lemmas over integer grids.

Writes one CSV per sweep (counterexamples first) and exits non-zero when
any counterexample is found.

Usage:
    python manage.py verify_lemmas
    python manage.py verify_lemmas --a-max 5 --b-max 5 --k-max 5 --m-max 5 --b-max-tasks 10
    python manage.py verify_lemmas --config sweeps.conf --out reports/lemmas --threads 4
"""

from pathlib import Path

from django.conf import settings
from rest_framework import serializers

from core.commands import LabCommand, LabOptionsSerializer
from core.exceptions import InconsistencyError
from trigon.sweeps import (
    sweep_crossings,
    sweep_lemma1,
    sweep_lemma2_consequence,
    sweep_task1,
    sweep_task2,
    sweep_to_csv,
)


class VerifyLemmasOptionsSerializer(LabOptionsSerializer):
    """
    Grid bounds for the lemma sweeps.
    """
    a_max = serializers.IntegerField(min_value=1)
    b_max = serializers.IntegerField(min_value=2)
    k_max = serializers.IntegerField(min_value=1)
    m_max = serializers.IntegerField(min_value=1)
    b_max_tasks = serializers.IntegerField(min_value=1)
    m_max_tasks = serializers.IntegerField(min_value=1)
    crossings = serializers.IntegerField(min_value=0)
    seed = serializers.IntegerField()
    grid_max = serializers.IntegerField(min_value=1)
    lemma2_limit = serializers.IntegerField(min_value=1)
    out = serializers.CharField(required=False)


class Command(LabCommand):
    help = 'Sweep the triangle and crossing lemmas exactly over integer grids'
    options_serializer_class = VerifyLemmasOptionsSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        for flag, text in (
            ('--a-max', 'Largest a in the first triangle lemma grid'),
            ('--b-max', 'Largest b in the first triangle lemma grid'),
            ('--k-max', 'Largest k in the first triangle lemma grid'),
            ('--m-max', 'Largest m in the first triangle lemma grid'),
            ('--b-max-tasks', 'Largest b in the angle comparison grids'),
            ('--m-max-tasks', 'Largest m = c - b in the second angle comparison grid'),
            ('--crossings', 'Number of random crossing configurations'),
            ('--seed', 'Seed for the crossing configurations'),
            ('--grid-max', 'Coordinate range of the crossing configurations'),
            ('--lemma2-limit', 'Bound on b, a, m, t in the integer consequence grid'),
        ):
            parser.add_argument(flag, type=int, default=None, help=text)
        parser.add_argument(
            '--out',
            help='Directory for the CSV reports (default: REPORT_DIR/lemmas)'
        )

    def get_defaults(self):
        defaults = super().get_defaults()
        defaults.update(settings.DIOPHANTINE_LAB['SWEEP_DEFAULTS'])
        defaults['out'] = str(Path(settings.DIOPHANTINE_LAB['REPORT_DIR']) / 'lemmas')
        return defaults

    def run(self, params):
        threads = params['threads']
        results = [
            sweep_lemma1(
                params['a_max'], params['b_max'], params['k_max'], params['m_max'], threads
            ),
            sweep_task1(params['b_max_tasks'], threads),
            sweep_task2(params['b_max_tasks'], params['m_max_tasks'], threads),
            sweep_crossings(params['crossings'], params['seed'], params['grid_max']),
            sweep_lemma2_consequence(params['lemma2_limit']),
        ]

        out_dir = Path(params['out'])
        for result in results:
            self.write_output(out_dir / f"{result.name}.csv", sweep_to_csv(result))

        failures = []
        for result in results:
            for row in result.counterexamples:
                self.stdout.write(self.style.ERROR(f"COUNTEREXAMPLE {result.name}: {row}"))
            if result.counterexamples:
                failures.append(result.name)

        lemma1, _, task2, crossings, _ = results
        for result in results:
            self.stdout.write(result.summary())
        self.stdout.write(f"lemma1 monotone failures: {len(lemma1.notes['monotone_failures'])}")
        self.stdout.write(
            f"task2 extremal side != m + 1: {len(task2.notes['extremal_side_mismatches'])}"
        )
        self.stdout.write(
            f"crossings with C1, C2 exchanged satisfying the inequality: "
            f"{crossings.notes['swapped_labels_true']}"
        )

        if lemma1.notes['monotone_failures']:
            failures.append('lemma1 monotonicity')
        if task2.notes['extremal_side_mismatches']:
            failures.append('task2 extremal side')
        if failures:
            raise InconsistencyError(f"Counterexamples found in: {', '.join(failures)}")
        self.stdout.write(self.style.SUCCESS('All lemma sweeps passed'))
