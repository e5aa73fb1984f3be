"""
Query orchestration.
Builds the root branch, runs the engine and turns the outcome into a verdict.
"""
import logging
from typing import Optional, Sequence

from formulas.syntax import Formula, Not
from semantics.conditions import branch_vocabulary, check_conditions, conditions_for
from semantics.extraction import extract_model
from semantics.priest import satisfies_prefixed

from .constants import ROOT_INDEX
from .engine import Limits, Proof, Saturation, TableauEngine
from .prefixed import At, Branch
from .rulesets import LogicPreset
from .verdicts import Closed, Open, ResourceOut, Verdict

logger = logging.getLogger(__name__)


class ProverService:
    """Service answering entailment queries under one logic."""

    def __init__(self, preset: LogicPreset, limits: Optional[Limits] = None):
        self.preset = preset
        self.limits = limits or Limits.from_settings()

    def prove(self, premises: Sequence[Formula], goal: Formula) -> Verdict:
        """
        Decide whether the premises entail the goal.

        Args:
            premises: Formulas assumed at the root world
            goal: Formula whose negation is added at the root world

        Returns:
            Closed with the proof, Open with a countermodel, or ResourceOut
        """
        premise_text = ', '.join(str(premise) for premise in premises)
        logger.info(f"Query under {self.preset.name}: {premise_text} |- {goal}")

        root = Branch.from_items([At(ROOT_INDEX, premise) for premise in premises] + [At(ROOT_INDEX, Not(goal))])
        outcome = TableauEngine(self.preset, self.limits).saturate(root)
        verdict = self._verdict(outcome)

        logger.info(f"Verdict {verdict.get_status_value()} after {outcome.stats.nodes} nodes")
        return verdict

    def _verdict(self, outcome: Saturation) -> Verdict:
        if outcome.closed:
            return Closed(self.preset.name, Proof(self.preset.name, outcome.root), outcome.stats)
        if not outcome.saturated:
            return ResourceOut(self.preset.name, outcome.limit, outcome.open_branch, outcome.stats)
        return self._countermodel(outcome)

    def _countermodel(self, outcome: Saturation) -> Open:
        """Extract the model of the open branch and certify it."""
        branch = outcome.open_branch
        model, assignment = extract_model(branch)
        satisfied = satisfies_prefixed(model, assignment, branch.items)
        violations = ()
        if not satisfied:
            violations += ('the model does not satisfy the open branch',)
        conditions = conditions_for(self.preset)
        if conditions:
            report = check_conditions(model, branch_vocabulary(branch), conditions)
            violations += tuple(str(counterexample) for counterexample in report.violations)
        certified = not violations
        if not certified:
            logger.warning(f"Countermodel under {self.preset.name} not certified: {'; '.join(violations)}")
        return Open(
            logic=self.preset.name,
            branch=branch,
            countermodel=model,
            assignment=assignment,
            certified=certified,
            violations=violations,
            stats=outcome.stats,
        )


def prove(premises: Sequence[Formula], goal: Formula, preset: LogicPreset, limits: Optional[Limits] = None) -> Verdict:
    return ProverService(preset, limits).prove(premises, goal)
