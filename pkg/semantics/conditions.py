"""
Frame conditions on models.

Conditions are checked over a finite vocabulary of formulas, since a model
only interprets the relations of the formulas it is queried about.

    1           R_A(x) ⊆ [A]
    2           R_A(x) ∩ [B] ≠ ∅  implies  R_B(x) ≠ ∅
    3           R_true(x) ⊆ {x}
    4           x ∈ R_true(x)
    5           R_A(x) ∩ [B] ⊆ R_A&B(x)
    6           R_A(x) ∩ [B] ≠ ∅  implies  R_A&B(x) ⊆ R_A(x) ∩ [B]
    cem         R_A(x) has at most one element
    congruence  [A] = [B]  implies  R_A(x) = R_B(x)

Conditions 3 and 4 concern true only. Conditions 5 and 6 are checked for
the pairs whose conjunction is itself in the vocabulary.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional

from formulas.syntax import TOP, And, Formula
from tableaux.rulesets import LogicPreset, RuleId

from .priest import PriestModel, World

logger = logging.getLogger(__name__)

TABLE_CONDITIONS = ('1', '2', '3', '4', '5', '6')
CEM = 'cem'
CONGRUENCE = 'congruence'
ALL_CONDITIONS = TABLE_CONDITIONS + (CEM, CONGRUENCE)

RULE_CONDITIONS = {
    RuleId.R1: '1',
    RuleId.R2: '2',
    RuleId.R3: '3',
    RuleId.R4: '4',
    RuleId.R5: '5',
    RuleId.R6: '6',
    RuleId.CEM: CEM,
    RuleId.EA: CONGRUENCE,
    RuleId.EA_PRIME: CONGRUENCE,
}


def conditions_for(preset: LogicPreset) -> tuple[str, ...]:
    """Conditions matching the rules of a preset, in canonical order."""
    wanted = {RULE_CONDITIONS[rule_id] for rule_id in preset.rules if rule_id in RULE_CONDITIONS}
    return tuple(name for name in ALL_CONDITIONS if name in wanted)


@dataclass(frozen=True)
class Counterexample:
    condition: str
    world: World
    formulas: tuple[Formula, ...]
    witnesses: tuple[World, ...]

    def __str__(self) -> str:
        bound = ', '.join(str(formula) for formula in self.formulas)
        at = f' for {bound}' if bound else ''
        return f'condition {self.condition} fails at world {self.world}{at} (witnesses {list(self.witnesses)})'


@dataclass(frozen=True)
class ConditionResult:
    condition: str
    satisfied: bool
    counterexample: Optional[Counterexample] = None


@dataclass(frozen=True)
class ConditionReport:
    results: tuple[ConditionResult, ...]

    def __getitem__(self, condition: str) -> ConditionResult:
        for result in self.results:
            if result.condition == condition:
                return result
        raise KeyError(condition)

    @property
    def all_satisfied(self) -> bool:
        return all(result.satisfied for result in self.results)

    @property
    def violations(self) -> tuple[Counterexample, ...]:
        return tuple(result.counterexample for result in self.results if not result.satisfied)


# Each check returns the witnesses of a violation at one instance, or ().
Check = Callable[[PriestModel, World, tuple[Formula, ...]], tuple[World, ...]]


def _inclusion(model, world, formulas):
    (formula,) = formulas
    return tuple(sorted(model.successors(formula, world) - model.truth_set(formula)))


def _projection(model, world, formulas):
    first, second = formulas
    shared = model.successors(first, world) & model.truth_set(second)
    if shared and not model.successors(second, world):
        return tuple(sorted(shared))
    return ()


def _centring(model, world, formulas):
    return tuple(sorted(model.successors(TOP, world) - {world}))


def _weak_centring(model, world, formulas):
    return () if world in model.successors(TOP, world) else (world,)


def _conjunction_access(model, world, formulas):
    first, second = formulas
    shared = model.successors(first, world) & model.truth_set(second)
    return tuple(sorted(shared - model.successors(And(first, second), world)))


def _conjunction_restriction(model, world, formulas):
    first, second = formulas
    shared = model.successors(first, world) & model.truth_set(second)
    if not shared:
        return ()
    return tuple(sorted(model.successors(And(first, second), world) - shared))


def _uniqueness(model, world, formulas):
    (formula,) = formulas
    targets = model.successors(formula, world)
    return tuple(sorted(targets)) if len(targets) > 1 else ()


def _congruence(model, world, formulas):
    first, second = formulas
    if model.truth_set(first) != model.truth_set(second):
        return ()
    return tuple(sorted(model.successors(first, world) ^ model.successors(second, world)))


@dataclass(frozen=True)
class _Condition:
    check: Check
    arity: int
    needs_conjunction: bool = False
    distinct: bool = False


_CONDITIONS = {
    '1': _Condition(_inclusion, 1),
    '2': _Condition(_projection, 2),
    '3': _Condition(_centring, 0),
    '4': _Condition(_weak_centring, 0),
    '5': _Condition(_conjunction_access, 2, needs_conjunction=True),
    '6': _Condition(_conjunction_restriction, 2, needs_conjunction=True),
    CEM: _Condition(_uniqueness, 1),
    CONGRUENCE: _Condition(_congruence, 2, distinct=True),
}


def _instances(condition: _Condition, vocab: tuple[Formula, ...]) -> Iterable[tuple[Formula, ...]]:
    vocab_set = set(vocab)
    for formulas in product(vocab, repeat=condition.arity):
        if condition.distinct and formulas[0] == formulas[1]:
            continue
        if condition.needs_conjunction and And(*formulas) not in vocab_set:
            continue
        yield formulas


def check_condition(model: PriestModel, vocab: Iterable[Formula], condition: str) -> ConditionResult:
    """
    Check one condition at every world over the vocabulary.

    Raises:
        KeyError: If the condition name is unknown
    """
    definition = _CONDITIONS[condition]
    vocab = tuple(dict.fromkeys(vocab))
    for world in model.sorted_worlds():
        for formulas in _instances(definition, vocab):
            witnesses = definition.check(model, world, formulas)
            if witnesses:
                return ConditionResult(condition, False, Counterexample(condition, world, formulas, witnesses))
    return ConditionResult(condition, True)


def check_conditions(
    model: PriestModel,
    vocab: Iterable[Formula],
    conditions: Iterable[str] = TABLE_CONDITIONS,
) -> ConditionReport:
    vocab = tuple(dict.fromkeys(vocab))
    report = ConditionReport(tuple(check_condition(model, vocab, name) for name in conditions))
    for counterexample in report.violations:
        logger.debug(f"Model violates {counterexample}")
    return report


def verify_counterexample(model: PriestModel, counterexample: Counterexample) -> bool:
    """Whether the reported instance really violates its condition in the model."""
    definition = _CONDITIONS[counterexample.condition]
    if counterexample.world not in model.worlds or len(counterexample.formulas) != definition.arity:
        return False
    return bool(definition.check(model, counterexample.world, counterexample.formulas))


def branch_vocabulary(branch) -> tuple[Formula, ...]:
    """Antecedents on the branch followed by the formulas of its access facts."""
    return tuple(dict.fromkeys((*branch.antecedents, *(item.formula for item in branch.relations))))
