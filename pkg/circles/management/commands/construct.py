"""
Management command to build a certified concyclic set of n points with
natural pairwise distances.

Usage:
    python manage.py construct --n 5
    python manage.py construct --n 12 --out reports/twelve.json --export-rational
"""

from pathlib import Path

from django.conf import settings
from rest_framework import serializers

from circles.construction import construct_diophantine, gen_pythagorean_angles, place_on_circle
from circles.serializers import PythagoreanAngleSerializer, QuasiDiophantineSetSerializer
from core.commands import LabCommand, LabOptionsSerializer
from core.serializers import DiophantineSetSerializer, render_json


class ConstructOptionsSerializer(LabOptionsSerializer):
    n = serializers.IntegerField(min_value=1)
    out = serializers.CharField(required=False)
    export_rational = serializers.CharField(required=False)


class Command(LabCommand):
    help = 'Construct a certified n-point set with natural distances on one circle'
    options_serializer_class = ConstructOptionsSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, default=None, help='Number of points')
        parser.add_argument(
            '--out',
            help='JSON set path (default: REPORT_DIR/diophantine_<n>.json)'
        )
        parser.add_argument(
            '--export-rational',
            help='Also write the unscaled unit-circle set with its rational chords'
        )

    def run(self, params):
        n = params['n']
        dset = construct_diophantine(n)
        out = params.get('out') or Path(settings.DIOPHANTINE_LAB['REPORT_DIR']) / f"diophantine_{n}.json"
        target = self.write_output(out, render_json(DiophantineSetSerializer(dset).data))

        if params.get('export_rational'):
            angles = gen_pythagorean_angles(n)
            payload = {
                'angles': PythagoreanAngleSerializer(angles, many=True).data,
                'set': QuasiDiophantineSetSerializer(place_on_circle(angles)).data,
            }
            self.write_output(params['export_rational'], render_json(payload))

        self.stdout.write(f"n={n} scale={dset.scale_note} certified=true")
        self.stdout.write(f"Wrote {target}")
