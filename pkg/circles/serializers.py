"""
Circles app serializers.
"""

from rest_framework import serializers

from core.serializers import QuadPointSerializer, RationalField


class PythagoreanAngleSerializer(serializers.Serializer):
    p = serializers.IntegerField(min_value=1)
    q = serializers.IntegerField(min_value=1)
    r = serializers.IntegerField(min_value=1)


class QuasiDiophantineSetSerializer(serializers.Serializer):
    """
    Serializer for rational-distance sets before scaling (read-only).
    """
    points = QuadPointSerializer(many=True, read_only=True)
    distances = serializers.ListField(child=serializers.ListField(child=RationalField()), read_only=True)
    radius = RationalField(read_only=True, allow_null=True)
