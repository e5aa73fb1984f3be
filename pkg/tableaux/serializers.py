from rest_framework import serializers

from formulas.serializers import FormulaField
from semantics.serializers import PriestModelSerializer

from .constants import ASSUMPTION_RULE
from .engine import Proof, ProofNode
from .prefixed import ClosureWitness, PrefixedSyntaxError, parse_prefixed
from .rulesets import RuleId, RuleInstance, RuleRegistry
from .verdicts import Closed, Open


class PrefixedFormulaField(serializers.Field):
    """A prefixed formula as ``i: A`` or ``r(i,j): A``."""

    default_error_messages = {
        'invalid': 'Invalid prefixed formula: {reason}',
    }

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail('invalid', reason='expected a string')
        try:
            return parse_prefixed(data)
        except PrefixedSyntaxError as exc:
            self.fail('invalid', reason=str(exc))


class ClosureField(serializers.Field):
    """The closing formulas of a leaf."""

    def to_representation(self, value):
        return [str(item) for item in value.premises]

    def to_internal_value(self, data):
        if not isinstance(data, list):
            raise serializers.ValidationError('Closure must be a list of prefixed formulas')
        items = [PrefixedFormulaField().to_internal_value(item) for item in data]
        try:
            return ClosureWitness.from_premises(items)
        except ValueError as exc:
            raise serializers.ValidationError(str(exc))


class ProofNodeSerializer(serializers.Serializer):
    formulas = serializers.ListField(child=PrefixedFormulaField(), allow_empty=False)
    rule = serializers.CharField()
    premises = serializers.ListField(child=PrefixedFormulaField(), default=list)
    formula = FormulaField(allow_null=True, default=None)
    index = serializers.IntegerField(min_value=1, allow_null=True, default=None)
    fresh = serializers.IntegerField(min_value=1, allow_null=True, default=None)
    closure = ClosureField(allow_null=True, default=None)

    def get_fields(self):
        fields = super().get_fields()
        fields['children'] = ProofNodeSerializer(many=True, default=list)
        return fields

    def validate_rule(self, value):
        if value != ASSUMPTION_RULE and value not in {rule_id.value for rule_id in RuleId}:
            raise serializers.ValidationError(f"Unknown rule {value!r}")
        return value

    def create(self, validated_data):
        return build_node(validated_data)


def build_node(data) -> ProofNode:
    """Rebuild a proof node from validated data, recomputing the conclusions of its rule."""
    justification = None
    if data['rule'] != ASSUMPTION_RULE:
        bindings = {name: data[name] for name in ('formula', 'index') if data.get(name) is not None}
        premises = tuple(data['premises'])
        justification = RuleRegistry.create_rule(data['rule']).instantiate(premises, bindings, data['fresh'])
        if justification is None:
            # Kept as cited; replay reports the mismatch.
            justification = RuleInstance(RuleId(data['rule']), premises, tuple(sorted(bindings.items())), (), data['fresh'])
    children = [build_node(child) for child in data.get('children', [])]
    return ProofNode(tuple(data['formulas']), justification, children, data.get('closure'))


class ProofSerializer(serializers.Serializer):
    logic = serializers.CharField()
    assumptions = serializers.ListField(child=PrefixedFormulaField(), read_only=True)
    root = ProofNodeSerializer()

    def create(self, validated_data):
        return Proof(validated_data['logic'], build_node(validated_data['root']))


class VerdictSerializer(serializers.Serializer):
    """Read-only JSON form of a verdict."""

    def to_representation(self, verdict):
        data = {
            'status': verdict.get_status_value(),
            'logic': verdict.logic,
            'stats': verdict.stats.as_dict(),
        }
        if isinstance(verdict, Closed):
            data['proof'] = ProofSerializer(verdict.proof).data
        elif isinstance(verdict, Open):
            data['countermodel'] = PriestModelSerializer(verdict.countermodel).data
            data['certified'] = verdict.certified
            data['violations'] = list(verdict.violations)
        else:
            data['limit'] = verdict.limit
        return data
