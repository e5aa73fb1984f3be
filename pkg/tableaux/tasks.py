"""
Celery tasks for asynchronous entailment queries.
Run a worker with: celery -A condtab worker -l info
"""
import logging

from celery import shared_task

logger = logging.getLogger(__name__)


@shared_task(bind=True)
def prove_entailment_async(self, premises: list, goal: str, logic: str = None, limits: dict = None):
    """
    Answer an entailment query asynchronously.

    Args:
        premises: Premises in the input syntax
        goal: Goal in the input syntax
        logic: Preset name (default PROVER_DEFAULT_LOGIC)
        limits: Optional max_nodes / max_indices / max_depth overrides

    Returns:
        dict: The JSON form of the verdict
    """
    # Import here to avoid circular imports
    from django.conf import settings

    from formulas.parser import parse

    from .engine import Limits
    from .rulesets import get_preset
    from .serializers import VerdictSerializer
    from .services import ProverService

    logic = logic or settings.PROVER_DEFAULT_LOGIC
    logger.info(f"Starting async query {self.request.id} under {logic}")
    try:
        preset = get_preset(logic)
        verdict = ProverService(preset, Limits.from_settings(**(limits or {}))).prove(
            [parse(text) for text in premises], parse(goal)
        )
    except (ValueError, NotImplementedError) as e:
        logger.error(f"Query {self.request.id} rejected: {str(e)}")
        raise

    logger.info(f"Completed async query {self.request.id}: {verdict.get_status_value()}")
    return dict(VerdictSerializer(verdict).data)
