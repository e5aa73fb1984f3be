import re

from rest_framework import serializers

from formulas.parser import ATOM_PATTERN
from formulas.serializers import FormulaField

from .priest import ModelValidationError, PriestModel


class AccessEntryField(serializers.Field):
    """One access pair as ``[formula, source, target]``."""

    default_error_messages = {
        'invalid': 'Access entries are [formula, world, world], got {value!r}',
    }

    def to_representation(self, value):
        formula, source, target = value
        return [str(formula), source, target]

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            self.fail('invalid', value=data)
        text, source, target = data
        if not isinstance(source, int) or not isinstance(target, int):
            self.fail('invalid', value=data)
        return FormulaField().to_internal_value(text), source, target


class PriestModelSerializer(serializers.Serializer):
    worlds = serializers.ListField(child=serializers.IntegerField(), allow_empty=False)
    valuation = serializers.DictField(
        child=serializers.ListField(child=serializers.IntegerField()), default=dict
    )
    access = serializers.ListField(child=AccessEntryField(), default=list)

    def validate_valuation(self, value):
        for name in value:
            if not re.fullmatch(ATOM_PATTERN, name):
                raise serializers.ValidationError(f"{name!r} is not an atom")
        return value

    def validate(self, attrs):
        worlds = set(attrs['worlds'])
        used = {world for members in attrs['valuation'].values() for world in members}
        used |= {world for _, source, target in attrs['access'] for world in (source, target)}
        if not used <= worlds:
            raise serializers.ValidationError(f"Unknown worlds {sorted(used - worlds)}")
        return attrs

    def create(self, validated_data):
        access = {}
        for formula, source, target in validated_data['access']:
            access.setdefault(formula, set()).add((source, target))
        try:
            return PriestModel.build(validated_data['worlds'], access, validated_data['valuation'])
        except ModelValidationError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, model):
        entries = sorted(
            ((str(formula), source, target) for formula, pairs in model.access.items() for source, target in pairs)
        )
        return {
            'worlds': model.sorted_worlds(),
            'valuation': {name: sorted(members) for name, members in sorted(model.valuation.items())},
            'access': [list(entry) for entry in entries],
        }


class CounterexampleSerializer(serializers.Serializer):
    condition = serializers.CharField()
    world = serializers.IntegerField()
    formulas = serializers.ListField(child=FormulaField())
    witnesses = serializers.ListField(child=serializers.IntegerField())


class ConditionResultSerializer(serializers.Serializer):
    condition = serializers.CharField()
    satisfied = serializers.BooleanField()
    counterexample = CounterexampleSerializer(allow_null=True)
