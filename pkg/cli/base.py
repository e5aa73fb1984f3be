import json
import sys

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from formulas.parser import FormulaSyntaxError, parse
from tableaux.engine import Limits
from tableaux.rulesets import CutPolicy, PresetRegistry, get_preset


class QueryOutcome(CommandError):
    """Carries a verdict exit code out of a command."""


class QueryCommand(BaseCommand):
    """Base class of the commands routed through cli.runner.run."""

    mode = ''

    def run_from_argv(self, argv):
        # Import here to avoid circular imports
        from .runner import run
        sys.exit(run([self.mode, *argv[2:]]))

    def add_logic_argument(self, parser, default=None):
        parser.add_argument(
            '--logic',
            choices=PresetRegistry.names(),
            default=default,
            help='Logic preset',
        )

    def add_format_argument(self, parser):
        parser.add_argument('--format', choices=('text', 'json'), default='text')

    def add_query_arguments(self, parser):
        self.add_logic_argument(parser, default=settings.PROVER_DEFAULT_LOGIC)
        parser.add_argument('--premise', action='append', default=[], help='Premise formula (repeatable)')
        parser.add_argument('--goal', help='Goal formula')
        parser.add_argument('--max-nodes', type=int)
        parser.add_argument('--max-indices', type=int)
        parser.add_argument('--max-depth', type=int)
        parser.add_argument('--cut', help='off, analytic or hints=A;B')
        parser.add_argument('--ea-prime', action='store_true', help='Use the combined ea/necessity rule')
        self.add_format_argument(parser)

    def parse_formula(self, text, what='formula'):
        try:
            return parse(text)
        except FormulaSyntaxError as exc:
            raise CommandError(f'Invalid {what}: {exc}')

    def build_preset(self, options):
        try:
            preset = get_preset(options['logic'])
            if options.get('cut'):
                preset = preset.with_cut_policy(CutPolicy.from_text(options['cut']))
        except (NotImplementedError, ValueError) as exc:
            raise CommandError(str(exc))
        if options.get('ea_prime'):
            preset = preset.with_ea_prime()
        return preset

    def build_limits(self, options):
        try:
            return Limits.from_settings(
                max_nodes=options.get('max_nodes'),
                max_indices=options.get('max_indices'),
                max_depth=options.get('max_depth'),
            )
        except ValueError as exc:
            raise CommandError(str(exc))

    def build_query(self, options):
        if not options.get('goal'):
            raise CommandError('--goal is required')
        premises = [self.parse_formula(text, 'premise') for text in options['premise']]
        goal = self.parse_formula(options['goal'], 'goal')
        return premises, goal

    def write_json(self, data):
        self.stdout.write(json.dumps(data, indent=2, ensure_ascii=False))

    def finish(self, code, message=''):
        """End the command with a verdict exit code."""
        if code:
            raise QueryOutcome(message or f'exit {code}', returncode=code)
