from rest_framework import serializers

from .parser import FormulaSyntaxError, parse
from .printer import print_formula


class FormulaField(serializers.Field):
    """A formula exchanged in its canonical text form."""

    default_error_messages = {
        'invalid': 'Invalid formula: {reason}',
    }

    def to_representation(self, value):
        return print_formula(value)

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail('invalid', reason='expected a string')
        try:
            return parse(data)
        except FormulaSyntaxError as exc:
            self.fail('invalid', reason=str(exc))
