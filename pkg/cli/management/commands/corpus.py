import logging

from django.conf import settings

from tableaux.constants import EXIT_NEGATIVE
from tableaux.corpus import EXPECT_CLOSED, entries_for
from tableaux.engine import Limits, replay
from tableaux.rulesets import get_preset
from tableaux.services import ProverService
from tableaux.verdicts import Closed

from ...base import QueryCommand

logger = logging.getLogger(__name__)


class Command(QueryCommand):
    help = 'Run the benchmark entailments under one logic'
    mode = 'corpus'

    def add_arguments(self, parser):
        self.add_logic_argument(parser, default='VCS')
        parser.add_argument('--max-nodes', type=int)
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        preset = self.build_preset(options)
        limits = self.build_limits({'max_nodes': options['max_nodes'] or settings.CORPUS_NODE_BUDGET})
        service = ProverService(preset, limits)

        rows = [self.run_entry(entry, service, preset) for entry in entries_for(options['logic'])]
        failed = [row for row in rows if not row['passed']]

        if options['format'] == 'json':
            self.write_json({'logic': preset.name, 'entries': rows, 'passed': not failed})
        else:
            for row in rows:
                mark = 'ok' if row['passed'] else 'FAIL'
                detail = f" ({row['reason']})" if row['reason'] else ''
                self.stdout.write(
                    f"{mark:4} {row['name']:10} expect {row['expect']:6} got {row['status']:12} "
                    f"{row['nodes']:5} nodes{detail}"
                )
            self.stdout.write(f'{len(rows) - len(failed)}/{len(rows)} entries passed under {preset.name}')
        self.finish(EXIT_NEGATIVE if failed else 0, f'{len(failed)} corpus entries failed')

    def run_entry(self, entry, service, preset):
        verdict = service.prove(entry.premise_formulas, entry.goal_formula)
        closed = isinstance(verdict, Closed)
        reason = ''
        if entry.expect == EXPECT_CLOSED:
            if not closed:
                reason = 'did not close'
            elif not (report := replay(verdict.proof, preset)):
                reason = f'proof does not replay: {report.reason}'
            elif entry.hand_proof and not (report := replay(entry.hand_proof(), get_preset(entry.logic))):
                reason = f'hand proof does not replay: {report.reason}'
        elif closed:
            reason = 'closed unexpectedly'
        if reason:
            logger.error(f"Corpus entry {entry.name} failed under {preset.name}: {reason}")
        else:
            logger.info(f"Corpus entry {entry.name} passed under {preset.name}")
        return {
            'name': entry.name,
            'expect': entry.expect,
            'status': verdict.get_status_value(),
            'nodes': verdict.stats.nodes,
            'passed': not reason,
            'reason': reason,
        }
