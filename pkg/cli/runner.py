"""
Single entry point of the command-line surface.

Every mode is a management command; run() calls it and turns the outcome
into an exit code: 0, 1 and 2 for verdicts, 3 for usage and parse errors.
"""
import logging
import sys

from django.core.management import call_command
from django.core.management.base import CommandError

from tableaux.constants import EXIT_OK, EXIT_USAGE

from .base import QueryOutcome

logger = logging.getLogger(__name__)

COMMANDS = {
    'prove': 'prove',
    'countermodel': 'countermodel',
    'check-model': 'check_model',
    'check_model': 'check_model',
    'corpus': 'corpus',
}

USAGE = 'usage: {prove,countermodel,check-model,corpus} [options]'


def run(argv, stdout=None, stderr=None) -> int:
    """
    Run one mode.

    Args:
        argv: Mode followed by its options, e.g. ['prove', '--goal', '[p]p']
        stdout: Stream for reports (default sys.stdout)
        stderr: Stream for errors (default sys.stderr)

    Returns:
        The exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in COMMANDS:
        stderr.write(USAGE + '\n')
        return EXIT_USAGE
    try:
        call_command(COMMANDS[argv[0]], *argv[1:], stdout=stdout, stderr=stderr)
    except QueryOutcome as outcome:
        return outcome.returncode
    except CommandError as exc:
        logger.debug(f"Usage error in {argv[0]}: {exc}")
        stderr.write(f'error: {exc}\n')
        return EXIT_USAGE
    return EXIT_OK
