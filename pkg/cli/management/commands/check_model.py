import json

from django.core.management.base import CommandError

from formulas.utils import antecedents
from semantics.conditions import ALL_CONDITIONS, TABLE_CONDITIONS, check_conditions, conditions_for
from semantics.serializers import ConditionResultSerializer, PriestModelSerializer
from semantics.utils import render_condition_report
from tableaux.constants import EXIT_NEGATIVE

from ...base import QueryCommand


class Command(QueryCommand):
    help = 'Check the frame conditions of a model given as JSON'
    mode = 'check-model'

    def add_arguments(self, parser):
        parser.add_argument('--model', required=True, help='Path of the model JSON file')
        self.add_logic_argument(parser)
        parser.add_argument('--condition', action='append', choices=ALL_CONDITIONS, default=[])
        parser.add_argument('--vocab', action='append', default=[], help='Formula the conditions range over')
        parser.add_argument('--premise', action='append', default=[])
        parser.add_argument('--goal')
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        model = self.load_model(options['model'])
        conditions = self.select_conditions(options)
        vocab = self.select_vocab(options, model)

        report = check_conditions(model, vocab, conditions)
        if options['format'] == 'json':
            self.write_json({
                'satisfied': report.all_satisfied,
                'vocab': [str(formula) for formula in vocab],
                'results': ConditionResultSerializer(report.results, many=True).data,
            })
        else:
            self.stdout.write(render_condition_report(report))
        self.finish(0 if report.all_satisfied else EXIT_NEGATIVE, 'conditions violated')

    def load_model(self, path):
        try:
            with open(path, encoding='utf-8') as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise CommandError(f'Cannot read model {path}: {exc}')
        serializer = PriestModelSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f'Invalid model {path}: {serializer.errors}')
        return serializer.save()

    def select_conditions(self, options):
        if options['condition']:
            return tuple(options['condition'])
        if options['logic']:
            return conditions_for(self.build_preset(options))
        return TABLE_CONDITIONS

    def select_vocab(self, options, model):
        if options['vocab']:
            return tuple(self.parse_formula(text, 'vocabulary formula') for text in options['vocab'])
        formulas = [self.parse_formula(text, 'premise') for text in options['premise']]
        if options['goal']:
            formulas.append(self.parse_formula(options['goal'], 'goal'))
        if formulas:
            return antecedents(*formulas)
        return tuple(model.access)
