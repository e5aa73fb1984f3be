"""
Finite models with one accessibility relation per formula.

A model has a set of worlds, for every formula A a relation R_A between
worlds, and a valuation of atoms. [A]B holds at x when B holds at every y
with R_A x y; <A>B when B holds at some such y.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from formulas.syntax import And, Atom, Bottom, Formula, Imp, Nec, Not, Or, Poss, Top
from tableaux.prefixed import At, Rel

logger = logging.getLogger(__name__)

World = int


class UnknownWorldError(KeyError):
    """Raised when a world is not in the model."""


class PartialAssignmentError(ValueError):
    """Raised when an index has no world assigned."""


class ModelValidationError(ValueError):
    """Raised when a model refers to worlds it does not contain."""


@dataclass(frozen=True)
class PriestModel:
    worlds: frozenset[World]
    access: Mapping[Formula, frozenset[tuple[World, World]]]
    valuation: Mapping[str, frozenset[World]]
    _successors: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _truth_sets: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.worlds:
            raise ModelValidationError("A model needs at least one world")
        for formula, pairs in self.access.items():
            for pair in pairs:
                if not set(pair) <= self.worlds:
                    raise ModelValidationError(f"Access for {formula} uses unknown world in {pair}")
        for name, worlds in self.valuation.items():
            if not worlds <= self.worlds:
                raise ModelValidationError(f"Valuation of {name} uses unknown worlds {sorted(worlds - self.worlds)}")

    @classmethod
    def build(
        cls,
        worlds: Iterable[World],
        access: Mapping[Formula, Iterable[tuple[World, World]]] | None = None,
        valuation: Mapping[str, Iterable[World]] | None = None,
    ) -> PriestModel:
        """Normalise to frozen sets, dropping empty relations and atoms true nowhere."""
        access = {formula: frozenset(map(tuple, pairs)) for formula, pairs in (access or {}).items()}
        valuation = {name: frozenset(worlds) for name, worlds in (valuation or {}).items()}
        return cls(
            worlds=frozenset(worlds),
            access={formula: pairs for formula, pairs in access.items() if pairs},
            valuation={name: members for name, members in valuation.items() if members},
        )

    def successors(self, formula: Formula, world: World) -> frozenset[World]:
        """R_A(x): the worlds A-accessible from x."""
        table = self._successors.get(formula)
        if table is None:
            table = {}
            for source, target in self.access.get(formula, ()):
                table.setdefault(source, set()).add(target)
            table = {source: frozenset(targets) for source, targets in table.items()}
            self._successors[formula] = table
        return table.get(world, frozenset())

    def truth_set(self, formula: Formula) -> frozenset[World]:
        """[A]: the worlds where A holds."""
        found = self._truth_sets.get(formula)
        if found is None:
            found = frozenset(world for world in self.worlds if _holds(self, world, formula))
            self._truth_sets[formula] = found
        return found

    def sorted_worlds(self) -> list[World]:
        return sorted(self.worlds)


def _holds(model: PriestModel, world: World, formula: Formula) -> bool:
    match formula:
        case Atom(name):
            return world in model.valuation.get(name, ())
        case Bottom():
            return False
        case Top():
            return True
        case Not(operand):
            return not _holds(model, world, operand)
        case And(left, right):
            return _holds(model, world, left) and _holds(model, world, right)
        case Or(left, right):
            return _holds(model, world, left) or _holds(model, world, right)
        case Imp(left, right):
            return not _holds(model, world, left) or _holds(model, world, right)
        case Nec(antecedent, consequent):
            return all(_holds(model, target, consequent) for target in model.successors(antecedent, world))
        case Poss(antecedent, consequent):
            return any(_holds(model, target, consequent) for target in model.successors(antecedent, world))
    raise TypeError(f"Not a formula: {formula!r}")


def evaluate(model: PriestModel, world: World, formula: Formula) -> bool:
    """
    Truth of a formula at a world.

    Raises:
        UnknownWorldError: If the world is not in the model
    """
    if world not in model.worlds:
        raise UnknownWorldError(world)
    return _holds(model, world, formula)


def satisfies_prefixed(model: PriestModel, assignment: Mapping[int, World], items: Iterable) -> bool:
    """
    Whether the model and index assignment make every prefixed formula true.

    ``i: A`` needs A at f(i); ``r(i,j): A`` needs R_A f(i) f(j).

    Raises:
        PartialAssignmentError: If some index has no world
        UnknownWorldError: If an assigned world is not in the model
    """
    items = list(items)
    missing = sorted({index for item in items for index in item.indices} - set(assignment))
    if missing:
        raise PartialAssignmentError(f"No world assigned to indices {missing}")
    for index, world in assignment.items():
        if world not in model.worlds:
            raise UnknownWorldError(world)
    for item in items:
        match item:
            case At(index, formula):
                if not _holds(model, assignment[index], formula):
                    logger.debug(f"{item} fails at world {assignment[index]}")
                    return False
            case Rel(source, target, formula):
                if assignment[target] not in model.successors(formula, assignment[source]):
                    logger.debug(f"{item} fails: no access from {assignment[source]} to {assignment[target]}")
                    return False
    return True
