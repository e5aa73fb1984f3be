from semantics.utils import render_model
from tableaux.serializers import VerdictSerializer
from tableaux.services import ProverService
from tableaux.utils import render_branch, render_proof
from tableaux.verdicts import Closed, Open

from ...base import QueryCommand


class Command(QueryCommand):
    help = 'Search for a closed tableau of the premises and the negated goal'
    mode = 'prove'

    def add_arguments(self, parser):
        self.add_query_arguments(parser)

    def handle(self, *args, **options):
        premises, goal = self.build_query(options)
        preset = self.build_preset(options)
        verdict = ProverService(preset, self.build_limits(options)).prove(premises, goal)

        if options['format'] == 'json':
            self.write_json(VerdictSerializer(verdict).data)
        else:
            self.stdout.write(self.describe(verdict, goal))
        self.finish(self.exit_code(verdict), verdict.get_status_value())

    def exit_code(self, verdict):
        return verdict.prove_exit_code()

    def describe(self, verdict, goal):
        stats = verdict.stats
        header = f'{verdict.get_status_value()} under {verdict.logic}: {goal} ({stats.nodes} nodes)'
        if isinstance(verdict, Closed):
            return f'{header}\n{render_proof(verdict.proof)}'
        if isinstance(verdict, Open):
            status = 'certified' if verdict.certified else 'not certified'
            lines = [header, render_branch(verdict.branch), f'countermodel ({status}):', render_model(verdict.countermodel)]
            lines += [f'  violation: {violation}' for violation in verdict.violations]
            return '\n'.join(lines)
        return f'{header}\nlimit {verdict.limit} reached; partial branch:\n{render_branch(verdict.branch)}'
