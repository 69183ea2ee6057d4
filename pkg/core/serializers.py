"""
Core app serializers.

Exact-value fields and the shared JSON set format used by every
command. Rationals travel as "num/den" strings and quadratic-field
scalars as {"rat", "surd", "D"} objects, so a parse of a rendered
value reproduces it exactly.
"""

import io
from fractions import Fraction

from rest_framework import serializers
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from django.conf import settings

from core.exceptions import CertificateError, PreconditionError
from kernel.fields import QuadScalar
from kernel.geometry import QuadPoint
from kernel.sets import DiophantineSet, verify_certificate


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text) -> Fraction:
    """
    Parse "num/den" or a bare integer into a reduced Fraction.

    Raises:
        ValueError: on anything else
    """
    if isinstance(text, bool):
        raise ValueError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"Not a rational: {text!r}")
    numerator, _, denominator = text.strip().partition('/')
    try:
        return Fraction(int(numerator), int(denominator) if denominator else 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Not a rational: {text!r}") from exc


class RationalField(serializers.Field):
    """
    Exact rational serialized as "num/den".
    """
    default_error_messages = {
        'invalid': 'Expected a rational written as "num/den".',
    }

    def to_representation(self, value):
        return format_rational(Fraction(value))

    def to_internal_value(self, data):
        try:
            return parse_rational(data)
        except ValueError:
            self.fail('invalid')


class QuadScalarField(serializers.Field):
    """
    Element of Q(sqrt D) serialized as {"rat": "p/q", "surd": "r/s", "D": n}.
    """
    default_error_messages = {
        'invalid': 'Expected an object with "rat", "surd" and "D".',
        'domain': '{reason}',
    }

    def to_representation(self, value):
        value = QuadScalar.coerce(value)
        return {
            'rat': format_rational(value.rat),
            'surd': format_rational(value.surd),
            'D': value.radicand,
        }

    def to_internal_value(self, data):
        if isinstance(data, (int, str)) and not isinstance(data, bool):
            try:
                return QuadScalar(parse_rational(data))
            except ValueError:
                self.fail('invalid')
        if not isinstance(data, dict) or 'rat' not in data:
            self.fail('invalid')
        radicand = data.get('D', 1)
        if isinstance(radicand, bool) or not isinstance(radicand, int):
            self.fail('invalid')
        try:
            return QuadScalar(
                parse_rational(data['rat']),
                parse_rational(data.get('surd', '0/1')),
                radicand,
            )
        except ValueError as exc:
            # PreconditionError is a ValueError too
            self.fail('domain', reason=str(exc))


class QuadPointSerializer(serializers.Serializer):
    """
    Serializer for a point with coordinates in one quadratic field.
    """
    x = QuadScalarField()
    y = QuadScalarField()

    def validate(self, attrs):
        try:
            QuadPoint(attrs['x'], attrs['y'])
        except PreconditionError as exc:
            raise serializers.ValidationError(str(exc))
        return attrs

    def create(self, validated_data):
        return QuadPoint(validated_data['x'], validated_data['y'])


class DiophantineSetSerializer(serializers.Serializer):
    """
    Shared JSON set format.

    Validation re-derives the certificate from the coordinates, so a
    saved instance is always a certified DiophantineSet.
    """
    points = QuadPointSerializer(many=True)
    distance_matrix = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0))
    )
    scale_note = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def validate_points(self, value):
        if not value:
            raise serializers.ValidationError("A point set needs at least one point.")
        return value

    def validate(self, attrs):
        points = tuple(QuadPoint(item['x'], item['y']) for item in attrs['points'])
        dset = DiophantineSet(points, attrs['distance_matrix'], attrs.get('scale_note'))
        try:
            verify_certificate(dset)
        except CertificateError as exc:
            raise serializers.ValidationError(f"Certificate check failed: {exc}")
        attrs['dset'] = dset
        return attrs

    def create(self, validated_data):
        return validated_data['dset']


def render_json(data) -> bytes:
    """Render serializer output with the configured indent and a trailing newline."""
    indent = settings.DIOPHANTINE_LAB['JSON_INDENT']
    return JSONRenderer().render(data, renderer_context={'indent': indent}) + b'\n'


def parse_json(raw: bytes):
    """
    Parse JSON bytes.

    Raises:
        rest_framework.exceptions.ParseError: on malformed input
    """
    return JSONParser().parse(io.BytesIO(raw))


def load_diophantine_set(raw: bytes) -> DiophantineSet:
    """
    Parse and certify a set file.

    Raises:
        rest_framework.exceptions.ParseError: malformed JSON
        rest_framework.exceptions.ValidationError: bad fields or failed certificate
    """
    payload = parse_json(raw)
    if isinstance(payload, dict) and 'set' in payload and 'points' not in payload:
        payload = payload['set']
    serializer = DiophantineSetSerializer(data=payload)
    serializer.is_valid(raise_exception=True)
    return serializer.save()
