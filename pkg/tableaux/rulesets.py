"""
Tableau rules and logic presets.

Each rule is a strategy object that finds its instances on a branch and
computes the conclusion alternatives of a given instantiation. The same
``conclude`` is used during search and when replaying a stored proof, so a
proof can only cite what the rule really concludes.
"""
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from typing import ClassVar, Iterator, Optional

from formulas.parser import parse
from formulas.syntax import TOP, And, Atom, Bottom, Formula, Imp, Nec, Not, Or, Poss, Top
from formulas.utils import subformula_list

from .constants import (
    RANK_BRANCHING,
    RANK_GENERATIVE,
    RANK_LINEAR,
    RANK_NONANALYTIC,
    ROOT_INDEX,
)
from .prefixed import At, Branch, Index, PrefixedFormula, Rel

logger = logging.getLogger(__name__)

Alternatives = tuple[tuple[PrefixedFormula, ...], ...]
Candidate = tuple[tuple[PrefixedFormula, ...], dict]


class RuleId(str, Enum):
    """Rule identifiers, in tie-break order."""

    CONJ = 'conj'
    NCONJ = 'nconj'
    DISJ = 'disj'
    NDISJ = 'ndisj'
    IMP = 'imp'
    NIMP = 'nimp'
    DNEG = 'dneg'
    BOX = 'box'
    NBOX = 'nbox'
    DIAMOND = 'diamond'
    NDIAMOND = 'ndiamond'
    R1 = 'R1'
    R2 = 'R2'
    R3 = 'R3'
    R4 = 'R4'
    R5 = 'R5'
    R6 = 'R6'
    CEM = 'cem'
    EA = 'ea'
    EA_PRIME = 'eaPrime'
    CUT = 'cut'


RULE_ORDER = {rule_id: position for position, rule_id in enumerate(RuleId)}


class StaleInstanceError(RuntimeError):
    """Raised when an instance is applied to a branch missing its premises."""


@dataclass(frozen=True)
class RuleInstance:
    rule: RuleId
    premises: tuple[PrefixedFormula, ...]
    instantiation: tuple[tuple[str, object], ...] = ()
    conclusions: Alternatives = ()
    fresh: Optional[Index] = None

    @property
    def fingerprint(self) -> tuple:
        """Identity of the instance; the fresh index is not part of it."""
        return (self.rule, self.premises, self.instantiation)

    def binding(self, name: str):
        return dict(self.instantiation).get(name)

    @property
    def formula(self) -> Optional[Formula]:
        return self.binding('formula')

    @property
    def index(self) -> Optional[Index]:
        return self.binding('index')

    @property
    def is_branching(self) -> bool:
        return len(self.conclusions) > 1

    def __str__(self) -> str:
        parts = [self.rule.value]
        if self.premises:
            parts.append('on ' + ', '.join(str(item) for item in self.premises))
        if self.formula is not None:
            parts.append(f'with {self.formula}')
        if self.index is not None:
            parts.append(f'at {self.index}')
        if self.fresh is not None:
            parts.append(f'fresh {self.fresh}')
        return ' '.join(parts)


class BranchRule(ABC):
    """Abstract base class for tableau rules."""

    rule_id: ClassVar[RuleId]
    label: ClassVar[str]
    rank: ClassVar[int]
    generates_index: ClassVar[bool] = False

    @abstractmethod
    def conclude(self, premises: tuple, bindings: dict, fresh: Optional[Index]) -> Optional[Alternatives]:
        """
        Conclusion alternatives of an instantiation.

        Returns:
            One tuple of prefixed formulas per child, or None if the
            premises and bindings do not fit the rule schema
        """

    @abstractmethod
    def candidates(self, branch: Branch, preset: Optional[LogicPreset]) -> Iterator[Candidate]:
        """Premises and bindings worth trying on the branch."""

    def instantiate(self, premises, bindings=None, fresh=None) -> Optional[RuleInstance]:
        bindings = dict(bindings or {})
        premises = tuple(premises)
        alternatives = self.conclude(premises, bindings, fresh)
        if alternatives is None:
            return None
        return RuleInstance(self.rule_id, premises, tuple(sorted(bindings.items())), alternatives, fresh)

    def instances(self, branch: Branch, preset: Optional[LogicPreset] = None) -> list[RuleInstance]:
        """Instances on the branch, ordered by the positions of their premises."""
        fresh = branch.fresh_index if self.generates_index else None
        found = []
        for premises, bindings in self.candidates(branch, preset):
            instance = self.instantiate(premises, bindings, fresh)
            if instance is not None:
                found.append(instance)
        found.sort(key=lambda instance: tuple(branch.positions[item] for item in instance.premises))
        return found

    def side_condition(self, instance: RuleInstance, branch: Branch) -> Optional[str]:
        """Reason the instance may not be used on the branch, or None."""
        if self.generates_index:
            if instance.fresh is None:
                return 'no fresh index given'
            if instance.fresh in branch.indices:
                return f'index {instance.fresh} already occurs on the branch'
        return None


class _AssertionRule(BranchRule):
    """Rules with a single premise ``i: A``."""

    def candidates(self, branch, preset):
        for item in branch.assertions:
            yield (item,), {}


class ConjunctionRule(_AssertionRule):
    rule_id = RuleId.CONJ
    label = '∧'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, And(left, right)),):
                return ((At(i, left), At(i, right)),)
        return None


class NegatedConjunctionRule(_AssertionRule):
    rule_id = RuleId.NCONJ
    label = '¬∧'
    rank = RANK_BRANCHING

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Not(And(left, right))),):
                return ((At(i, Not(left)),), (At(i, Not(right)),))
        return None


class DisjunctionRule(_AssertionRule):
    rule_id = RuleId.DISJ
    label = '∨'
    rank = RANK_BRANCHING

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Or(left, right)),):
                return ((At(i, left),), (At(i, right),))
        return None


class NegatedDisjunctionRule(_AssertionRule):
    rule_id = RuleId.NDISJ
    label = '¬∨'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Not(Or(left, right))),):
                return ((At(i, Not(left)), At(i, Not(right))),)
        return None


class ImplicationRule(_AssertionRule):
    rule_id = RuleId.IMP
    label = '⊃'
    rank = RANK_BRANCHING

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Imp(left, right)),):
                return ((At(i, Not(left)),), (At(i, right),))
        return None


class NegatedImplicationRule(_AssertionRule):
    rule_id = RuleId.NIMP
    label = '¬⊃'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Not(Imp(left, right))),):
                return ((At(i, left), At(i, Not(right))),)
        return None


class DoubleNegationRule(_AssertionRule):
    rule_id = RuleId.DNEG
    label = '¬'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Not(Not(operand))),):
                return ((At(i, operand),),)
        return None


class NecessityRule(BranchRule):
    rule_id = RuleId.BOX
    label = '□'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Nec(antecedent, consequent)), Rel(source, j, formula)) \
                    if source == i and formula == antecedent:
                return ((At(j, consequent),),)
        return None

    def candidates(self, branch, preset):
        for item in branch.assertions:
            if isinstance(item.formula, Nec):
                for relation in branch.relations_from(item.index):
                    if relation.formula == item.formula.antecedent:
                        yield (item, relation), {}


class NegatedNecessityRule(_AssertionRule):
    rule_id = RuleId.NBOX
    label = '¬□'
    rank = RANK_GENERATIVE
    generates_index = True

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Not(Nec(antecedent, consequent))),) if fresh is not None:
                return ((Rel(i, fresh, antecedent), At(fresh, Not(consequent))),)
        return None


class PossibilityRule(_AssertionRule):
    rule_id = RuleId.DIAMOND
    label = '◇'
    rank = RANK_GENERATIVE
    generates_index = True

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Poss(antecedent, consequent)),) if fresh is not None:
                return ((Rel(i, fresh, antecedent), At(fresh, consequent)),)
        return None


class NegatedPossibilityRule(BranchRule):
    rule_id = RuleId.NDIAMOND
    label = '¬◇'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Not(Poss(antecedent, consequent))), Rel(source, j, formula)) \
                    if source == i and formula == antecedent:
                return ((At(j, Not(consequent)),),)
        return None

    def candidates(self, branch, preset):
        for item in branch.assertions:
            if isinstance(item.formula, Not) and isinstance(item.formula.operand, Poss):
                for relation in branch.relations_from(item.index):
                    if relation.formula == item.formula.operand.antecedent:
                        yield (item, relation), {}


class ReflexivityRule(BranchRule):
    """R1: the A-accessible worlds satisfy A."""

    rule_id = RuleId.R1
    label = 'R1'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (Rel(_, j, formula),):
                return ((At(j, formula),),)
        return None

    def candidates(self, branch, preset):
        for relation in branch.relations:
            yield (relation,), {}


class ProjectionRule(BranchRule):
    """R2: a B-world among the A-worlds makes some B-world accessible."""

    rule_id = RuleId.R2
    label = 'R2'
    rank = RANK_GENERATIVE
    generates_index = True

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (Rel(i, j, _), At(world, formula)) if world == j and fresh is not None:
                return ((Rel(i, fresh, formula),),)
        return None

    def candidates(self, branch, preset):
        # Only antecedents of conditionals on the branch are worth a new
        # access fact, and none is added once some r(i,k): B exists.
        for relation in branch.relations:
            for item in branch.formulas_at(relation.target):
                formula = item.formula
                if formula in branch.antecedent_set and not branch.has_relation(relation.source, formula):
                    yield (relation, item), {}


class CentringRule(BranchRule):
    """R3: true-accessibility only reaches the world itself."""

    rule_id = RuleId.R3
    label = 'R3'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, formula), At(j, Not(negated)), Rel(source, target, Top())) \
                    if negated == formula and source == i and target == j:
                return ((At(j, formula),),)
        return None

    def candidates(self, branch, preset):
        for relation in branch.relations:
            if relation.formula != TOP or relation.source == relation.target:
                continue
            for item in branch.formulas_at(relation.target):
                if isinstance(item.formula, Not):
                    positive = At(relation.source, item.formula.operand)
                    if positive in branch:
                        yield (positive, item, relation), {}


class WeakCentringRule(BranchRule):
    """R4: every world is true-accessible from itself."""

    rule_id = RuleId.R4
    label = 'R4'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        index = bindings.get('index')
        if premises or not isinstance(index, int):
            return None
        return ((Rel(index, index, TOP),),)

    def candidates(self, branch, preset):
        # Only worlds where conditionals are evaluated need the loop.
        for index in branch.conditional_indices:
            yield (), {'index': index}

    def side_condition(self, instance, branch):
        if instance.index not in branch.indices:
            return f'index {instance.index} does not occur on the branch'
        return None


class ConjunctionAccessRule(BranchRule):
    """R5: an A-world satisfying B is A&B-accessible."""

    rule_id = RuleId.R5
    label = 'R5'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (Rel(i, j, antecedent), At(world, formula)) if world == j:
                return ((Rel(i, j, And(antecedent, formula)),),)
        return None

    def candidates(self, branch, preset):
        for relation in branch.relations:
            for item in branch.formulas_at(relation.target):
                if _conjunction_wanted(relation.formula, item.formula, branch):
                    yield (relation, item), {}


def _conjunction_wanted(antecedent: Formula, formula: Formula, branch: Branch) -> bool:
    """
    Whether R5 should build the conjunction of a relation formula with a formula at its target.

    Conjunctions of two distinct atoms are always built. Other conjunctions only
    when they match a conjunctive antecedent on the branch up to the order of
    the conjuncts, which is what ea can rename them into.
    """
    if isinstance(antecedent, Atom) and isinstance(formula, Atom) and antecedent != formula:
        return True
    antecedents = branch.antecedent_set
    return And(antecedent, formula) in antecedents or And(formula, antecedent) in antecedents


class ConjunctionRestrictionRule(BranchRule):
    """R6: once some A-world satisfies B, the A&B-worlds are A-worlds satisfying B."""

    rule_id = RuleId.R6
    label = 'R6'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (Rel(i, j, antecedent), At(world, formula), Rel(source, k, And(left, right))) \
                    if world == j and source == i and left == antecedent and right == formula:
                return ((At(k, formula), Rel(i, k, antecedent)),)
        return None

    def candidates(self, branch, preset):
        for conjoined in branch.relations:
            if not isinstance(conjoined.formula, And):
                continue
            left, right = conjoined.formula.left, conjoined.formula.right
            for relation in branch.relations_from(conjoined.source):
                witness = At(relation.target, right)
                if relation.formula == left and witness in branch:
                    yield (relation, witness, conjoined), {}


class ConditionalExcludedMiddleRule(BranchRule):
    """cem: A-accessibility reaches at most one world."""

    rule_id = RuleId.CEM
    label = 'cem'
    rank = RANK_LINEAR

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (Rel(i, j, antecedent), Rel(source, k, formula), At(world, carried)) \
                    if source == i and formula == antecedent and world == j and k != j:
                return ((At(k, carried),),)
        return None

    def candidates(self, branch, preset):
        for first in branch.relations:
            for second in branch.relations_from(first.source):
                if second.formula != first.formula or second.target == first.target:
                    continue
                for item in branch.formulas_at(first.target):
                    yield (first, second, item), {}


class EquivalentAntecedentsRule(BranchRule):
    """ea: either A and B differ at a new world or A-access is B-access."""

    rule_id = RuleId.EA
    label = 'ea'
    rank = RANK_NONANALYTIC
    generates_index = True

    def conclude(self, premises, bindings, fresh):
        other = bindings.get('formula')
        match premises:
            case (Rel(i, j, antecedent),) if isinstance(other, Formula) and fresh is not None:
                return (
                    (At(fresh, Not(antecedent)), At(fresh, other)),
                    (At(fresh, antecedent), At(fresh, Not(other))),
                    (Rel(i, j, other),),
                )
        return None

    def candidates(self, branch, preset):
        if preset is not None and preset.ea_policy is EaPolicy.OFF:
            return
        for relation in branch.relations:
            for other in branch.antecedents:
                if other != relation.formula:
                    yield (relation,), {'formula': other}


class EquivalentAntecedentsBoxRule(BranchRule):
    """ea combined with the necessity rule."""

    rule_id = RuleId.EA_PRIME
    label = "ea'"
    rank = RANK_GENERATIVE
    generates_index = True

    def conclude(self, premises, bindings, fresh):
        match premises:
            case (At(i, Nec(other, consequent)), Rel(source, j, antecedent)) \
                    if source == i and fresh is not None:
                return (
                    (At(fresh, Not(antecedent)), At(fresh, other)),
                    (At(fresh, antecedent), At(fresh, Not(other))),
                    (At(j, consequent),),
                )
        return None

    def candidates(self, branch, preset):
        for item in branch.assertions:
            if isinstance(item.formula, Nec):
                for relation in branch.relations_from(item.index):
                    yield (item, relation), {}


class CutRule(BranchRule):
    rule_id = RuleId.CUT
    label = 'cut'
    rank = RANK_NONANALYTIC

    def conclude(self, premises, bindings, fresh):
        formula, index = bindings.get('formula'), bindings.get('index')
        if premises or not isinstance(formula, Formula) or not isinstance(index, int):
            return None
        return ((At(index, formula),), (At(index, Not(formula)),))

    def candidates(self, branch, preset):
        policy = preset.cut_policy if preset is not None else CutPolicy()
        if policy.mode is CutMode.HINTED:
            if ROOT_INDEX in branch.indices:
                for hint in policy.hints:
                    yield (), {'formula': hint, 'index': ROOT_INDEX}
        elif policy.mode is CutMode.ANALYTIC:
            pool = _cut_formulas(branch)
            for index in branch.indices:
                for formula in pool:
                    yield (), {'formula': formula, 'index': index}

    def side_condition(self, instance, branch):
        if instance.index not in branch.indices:
            return f'index {instance.index} does not occur on the branch'
        return None


def _cut_formulas(branch: Branch) -> tuple[Formula, ...]:
    """
    Unnegated subformulas of every formula on the branch.

    Cutting on A already offers ~A as the other alternative.
    """
    found = {}
    for item in branch.assertions:
        for formula in subformula_list(item.formula):
            if not isinstance(formula, (Not, Top, Bottom)):
                found.setdefault(formula)
    return tuple(found)


class RuleRegistry:
    """Registry of the rule classes by identifier."""

    _rules = {
        rule_class.rule_id: rule_class
        for rule_class in (
            ConjunctionRule, NegatedConjunctionRule, DisjunctionRule, NegatedDisjunctionRule,
            ImplicationRule, NegatedImplicationRule, DoubleNegationRule,
            NecessityRule, NegatedNecessityRule, PossibilityRule, NegatedPossibilityRule,
            ReflexivityRule, ProjectionRule, CentringRule, WeakCentringRule,
            ConjunctionAccessRule, ConjunctionRestrictionRule, ConditionalExcludedMiddleRule,
            EquivalentAntecedentsRule, EquivalentAntecedentsBoxRule, CutRule,
        )
    }

    @classmethod
    def create_rule(cls, rule_id) -> BranchRule:
        """
        Create the rule object for an identifier.

        Args:
            rule_id: A RuleId or its string value (e.g. 'nbox')

        Raises:
            NotImplementedError: If no rule has that identifier
        """
        try:
            rule_class = cls._rules[RuleId(rule_id)]
        except (ValueError, KeyError):
            raise NotImplementedError(
                f"Rule {rule_id} not supported. "
                f"Available rules: {', '.join(item.value for item in cls._rules)}"
            )
        return rule_class()


class CutMode(str, Enum):
    OFF = 'off'
    ANALYTIC = 'analytic'
    HINTED = 'hinted'


@dataclass(frozen=True)
class CutPolicy:
    mode: CutMode = CutMode.ANALYTIC
    hints: tuple[Formula, ...] = ()

    @classmethod
    def from_text(cls, text: str) -> CutPolicy:
        """Read ``off``, ``analytic`` or ``hints=A;B``."""
        text = text.strip()
        if text.startswith('hints='):
            hints = tuple(parse(part) for part in text[len('hints='):].split(';') if part.strip())
            return cls(CutMode.HINTED, hints)
        try:
            return cls(CutMode(text))
        except ValueError:
            raise ValueError(f"Unknown cut policy {text!r}; use off, analytic or hints=A;B")

    def __str__(self) -> str:
        if self.mode is CutMode.HINTED:
            return 'hints=' + ';'.join(str(hint) for hint in self.hints)
        return self.mode.value


class EaPolicy(str, Enum):
    ANTECEDENTS = 'antecedents'
    OFF = 'off'


@dataclass(frozen=True)
class LogicPreset:
    name: str
    rules: frozenset
    cut_policy: CutPolicy = CutPolicy(CutMode.OFF)
    ea_policy: EaPolicy = EaPolicy.ANTECEDENTS

    @cached_property
    def ordered_rules(self) -> tuple[BranchRule, ...]:
        """Rule objects ordered by rank, then by rule order."""
        rules = [RuleRegistry.create_rule(rule_id) for rule_id in self.rules]
        return tuple(sorted(rules, key=lambda rule: (rule.rank, RULE_ORDER[rule.rule_id])))

    def includes(self, other: LogicPreset) -> bool:
        return other.rules <= self.rules

    def with_cut_policy(self, policy: CutPolicy) -> LogicPreset:
        if policy.mode is CutMode.OFF:
            return replace(self, rules=self.rules - {RuleId.CUT}, cut_policy=policy)
        return replace(self, rules=self.rules | {RuleId.CUT}, cut_policy=policy)

    def with_ea_prime(self) -> LogicPreset:
        """Replace the necessity rule and ea by their combination."""
        return replace(
            self,
            name=f'{self.name}+eaPrime',
            rules=(self.rules - {RuleId.BOX, RuleId.EA}) | {RuleId.EA_PRIME},
        )


CLASSICAL_RULES = frozenset({
    RuleId.CONJ, RuleId.NCONJ, RuleId.DISJ, RuleId.NDISJ,
    RuleId.IMP, RuleId.NIMP, RuleId.DNEG,
    RuleId.BOX, RuleId.NBOX, RuleId.DIAMOND, RuleId.NDIAMOND,
})
SYSTEM_V_RULES = frozenset({RuleId.R1, RuleId.R2, RuleId.R3, RuleId.R4, RuleId.R5, RuleId.R6})
NONANALYTIC_RULES = frozenset({RuleId.CUT, RuleId.EA})

ANALYTIC_CUT = CutPolicy(CutMode.ANALYTIC)

CK_MINUS = LogicPreset('Ck', CLASSICAL_RULES)
CK_CUT = LogicPreset('CkCut', CLASSICAL_RULES | {RuleId.CUT}, ANALYTIC_CUT)
CK = LogicPreset('CK', CLASSICAL_RULES | NONANALYTIC_RULES, ANALYTIC_CUT)
VC_MINUS = LogicPreset('Vc', CLASSICAL_RULES | SYSTEM_V_RULES)
VC = LogicPreset('VC', VC_MINUS.rules | NONANALYTIC_RULES, ANALYTIC_CUT)
VCS = LogicPreset('VCS', VC.rules | {RuleId.CEM}, ANALYTIC_CUT)


class PresetRegistry:
    """Registry of the logic presets by command-line name."""

    _presets = {
        'ck': CK_MINUS,
        'ck+cut': CK_CUT,
        'CK': CK,
        'vc': VC_MINUS,
        'VC': VC,
        'VCS': VCS,
    }
    _aliases = {'Ck': 'ck', 'CkCut': 'ck+cut', 'Vc': 'vc', 'vcs': 'VCS'}

    @classmethod
    def get_preset(cls, name: str) -> LogicPreset:
        """
        Look up a preset.

        Raises:
            NotImplementedError: If the name is unknown
        """
        preset = cls._presets.get(cls._aliases.get(name, name))
        if preset is None:
            raise NotImplementedError(
                f"Logic {name} not supported. "
                f"Available logics: {', '.join(cls._presets.keys())}"
            )
        return preset

    @classmethod
    def names(cls) -> tuple[str, ...]:
        return tuple(cls._presets) + tuple(cls._aliases)


def get_preset(name: str) -> LogicPreset:
    return PresetRegistry.get_preset(name)


def instantiate(rule_id, premises, bindings=None, fresh=None) -> RuleInstance:
    """
    Build an instance with its conclusions computed by the rule.

    Raises:
        ValueError: If the premises or bindings do not fit the rule
    """
    rule = RuleRegistry.create_rule(rule_id)
    instance = rule.instantiate(premises, bindings, fresh)
    if instance is None:
        raise ValueError(
            f"{rule.label} does not apply to {', '.join(str(item) for item in premises) or 'no premises'}"
        )
    return instance


def _is_pending(instance: RuleInstance, branch: Branch) -> bool:
    if instance.fingerprint in branch.applied:
        return False
    # An alternative already on the branch makes the instance redundant.
    return not any(all(item in branch for item in alternative) for alternative in instance.conclusions)


def _pending(branch: Branch, preset: LogicPreset) -> Iterator[RuleInstance]:
    for rule in preset.ordered_rules:
        for instance in rule.instances(branch, preset):
            if _is_pending(instance, branch):
                yield instance


def applicable(branch: Branch, preset: LogicPreset) -> list[RuleInstance]:
    """All pending instances, highest priority first."""
    return list(_pending(branch, preset))


def select_instance(branch: Branch, preset: LogicPreset) -> Optional[RuleInstance]:
    """The first element of applicable(), computed lazily per rule."""
    return next(_pending(branch, preset), None)


def cem_instances(branch: Branch) -> list[RuleInstance]:
    rule = ConditionalExcludedMiddleRule()
    return [instance for instance in rule.instances(branch) if _is_pending(instance, branch)]


def apply(instance: RuleInstance, branch: Branch) -> list[Branch]:
    """
    Apply an instance, one child branch per conclusion alternative.

    Raises:
        StaleInstanceError: If a premise is not on the branch
    """
    missing = [item for item in instance.premises if item not in branch]
    if missing:
        logger.warning(f"Stale instance {instance}: missing {', '.join(map(str, missing))}")
        raise StaleInstanceError(
            f"Premises of {instance.rule.value} not on the branch: {', '.join(map(str, missing))}"
        )
    return [branch.extend(alternative).record(instance.fingerprint) for alternative in instance.conclusions]
