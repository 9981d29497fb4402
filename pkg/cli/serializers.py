"""
DRF serializers for CLI payloads: exact rationals in, "p/q" strings out.
"""
from django.conf import settings
from rest_framework import serializers

from exactmath.numbers import ExactMathError, format_rational, parse_rational
from minkowski.basis import MinkowskiError
from minkowski.subsets import MAX_N, SubsetCollection


class RationalField(serializers.Field):
    """An integer or "p/q" string, kept as a Fraction; rendered as "p/q" or "p"."""

    default_error_messages = {
        'invalid': 'Expected an integer or a "p/q" rational, got {value!r}.',
    }

    def to_internal_value(self, data):
        if isinstance(data, (bool, float)):
            self.fail('invalid', value=data)
        try:
            return parse_rational(data)
        except ExactMathError:
            self.fail('invalid', value=data)

    def to_representation(self, value):
        return format_rational(value)


class SubsetEntrySerializer(serializers.Serializer):
    subset = serializers.ListField(child=serializers.IntegerField(min_value=1), allow_empty=False)
    value = RationalField()


class SubsetCollectionSerializer(serializers.Serializer):
    """{"n": int, "entries": [{"subset": [ints], "value": "p/q"}]}"""
    n = serializers.IntegerField(min_value=1)
    entries = SubsetEntrySerializer(many=True)

    def validate_n(self, value):
        limit = min(settings.MINKOWSKI_MAX_N, MAX_N)
        if value > limit:
            raise serializers.ValidationError(f'n is limited to {limit}.')
        return value

    def validate(self, attrs):
        try:
            attrs['collection'] = SubsetCollection.from_entries(
                attrs['n'], [(entry['subset'], entry['value']) for entry in attrs['entries']],
            )
        except MinkowskiError as e:
            raise serializers.ValidationError(str(e))
        return attrs

    def to_representation(self, instance):
        if isinstance(instance, SubsetCollection):
            instance = {
                'n': instance.n,
                'entries': [{'subset': list(subset), 'value': value} for subset, value in instance.entries()],
            }
        return super().to_representation(instance)


class WitnessSerializer(serializers.Serializer):
    order = serializers.IntegerField()
    index = serializers.IntegerField()


class DecompositionSerializer(serializers.Serializer):
    """Either {"feasible": true, "y": [...]} or {"feasible": false, "witness": {...}}."""
    feasible = serializers.BooleanField()
    y = serializers.ListField(child=RationalField(), required=False)
    witness = WitnessSerializer(required=False)

    def to_representation(self, instance):
        data = instance.to_dict()
        if data['feasible']:
            data['y'] = [format_rational(value) for value in data['y']]
        else:
            data['witness'] = WitnessSerializer(data['witness']).data
        return data


class OPPSerializer(serializers.Serializer):
    Z = serializers.ListField(child=serializers.IntegerField())
    parts = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    dim = serializers.IntegerField()
    improper = serializers.BooleanField()

    def to_representation(self, instance):
        return super().to_representation(instance.to_dict())


class CoefficientSerializer(serializers.Serializer):
    exponent = serializers.ListField(child=serializers.IntegerField())
    value = RationalField()


class CommandResultSerializer(serializers.Serializer):
    status = serializers.ChoiceField(choices=['ok', 'error'])
    payload = serializers.JSONField(allow_null=True)
    timing_ms = serializers.FloatField()
    exit_code = serializers.IntegerField()
