"""
Management command to draw a certified set file as an SVG figure.

Polygon sides are solid, the remaining chords dashed, and every chord is
labelled with its natural length.

Usage:
    python manage.py render reports/diophantine_5.json
    python manage.py render witness.json --out witness.svg
"""

from pathlib import Path

from django.core.management.base import CommandError
from rest_framework import serializers
from rest_framework.exceptions import ParseError, ValidationError

from core.commands import USAGE_ERROR, LabCommand, LabOptionsSerializer, format_errors
from core.serializers import load_diophantine_set
from ngons.figures import render_svg


class RenderOptionsSerializer(LabOptionsSerializer):
    set_file = serializers.CharField()
    out = serializers.CharField(required=False)


class Command(LabCommand):
    help = 'Render a certified Diophantine set file as an SVG figure'
    options_serializer_class = RenderOptionsSerializer

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('set_file', help='JSON set file (a search witness or a construction)')
        parser.add_argument('--out', help='SVG path (default: the set file with .svg)')

    def run(self, params):
        source = Path(params['set_file'])
        try:
            dset = load_diophantine_set(source.read_bytes())
        except ParseError as exc:
            raise CommandError(f"{source}: {exc.detail}", returncode=USAGE_ERROR)
        except ValidationError as exc:
            detail = exc.detail if isinstance(exc.detail, dict) else {'set': exc.detail}
            raise CommandError(f"{source}: {format_errors(detail)}", returncode=USAGE_ERROR)

        target = self.write_output(params.get('out') or source.with_suffix('.svg'), render_svg(dset))
        self.stdout.write(f"Rendered {len(dset)} points to {target}")
