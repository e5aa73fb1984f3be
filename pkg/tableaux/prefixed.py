"""
Prefixed formulas and persistent branches.

A prefixed formula is either ``i: A`` (A holds at world index i) or
``r(i,j): A`` (j is A-accessible from i). A branch is an immutable set of
prefixed formulas kept in insertion order together with the fingerprints of
the rule instances already applied on it and the next unused index.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Iterator

from formulas.parser import FormulaSyntaxError, parse
from formulas.syntax import BOTTOM, NOT_TOP, TOP, Formula, Not, is_conditional
from formulas.utils import antecedents, negated_conditional

from .constants import ROOT_INDEX

Index = int


@dataclass(frozen=True)
class At:
    index: Index
    formula: Formula

    @property
    def indices(self) -> tuple[Index, ...]:
        return (self.index,)

    def shifted(self, offset: int) -> At:
        return At(self.index + offset, self.formula)

    def __str__(self) -> str:
        return f'{self.index}: {self.formula}'


@dataclass(frozen=True)
class Rel:
    source: Index
    target: Index
    formula: Formula

    @property
    def indices(self) -> tuple[Index, ...]:
        return (self.source, self.target)

    def shifted(self, offset: int) -> Rel:
        return Rel(self.source + offset, self.target + offset, self.formula)

    def __str__(self) -> str:
        return f'r({self.source},{self.target}): {self.formula}'


PrefixedFormula = At | Rel


class PrefixedSyntaxError(ValueError):
    """Raised when text is not of the form ``i: A`` or ``r(i,j): A``."""


_AT_PATTERN = re.compile(r'\s*(\d+)\s*:(.*)', re.DOTALL)
_REL_PATTERN = re.compile(r'\s*r\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*:(.*)', re.DOTALL)


def parse_prefixed(text: str) -> PrefixedFormula:
    """
    Parse the text form of a prefixed formula.

    Raises:
        PrefixedSyntaxError: If the prefix or the formula is malformed
    """
    if match := _REL_PATTERN.fullmatch(text):
        source, target, body = match.groups()
        make = lambda formula: Rel(int(source), int(target), formula)
    elif match := _AT_PATTERN.fullmatch(text):
        index, body = match.groups()
        make = lambda formula: At(int(index), formula)
    else:
        raise PrefixedSyntaxError(f"Expected 'i: A' or 'r(i,j): A', got {text!r}")
    try:
        formula = parse(body)
    except FormulaSyntaxError as exc:
        raise PrefixedSyntaxError(f"Bad formula in {text!r}: {exc}") from exc
    item = make(formula)
    if min(item.indices) < ROOT_INDEX:
        raise PrefixedSyntaxError(f"Indices start at {ROOT_INDEX}: {text!r}")
    return item


def shift(item: PrefixedFormula, offset: int) -> PrefixedFormula:
    """Raise every index of a prefixed formula by offset."""
    return item.shifted(offset)


@dataclass(frozen=True)
class ClosureWitness:
    """The formulas that close a branch at one index."""

    index: Index
    formula: Formula
    premises: tuple[PrefixedFormula, ...]

    @classmethod
    def from_premises(cls, premises: Iterable[PrefixedFormula]) -> ClosureWitness:
        """Rebuild a witness from its premises (``i: _|_``, ``i: ~true`` or ``i: A, i: ~A``)."""
        items = tuple(premises)
        match items:
            case (At(index, formula),) if formula == BOTTOM:
                return cls(index, BOTTOM, items)
            case (At(index, formula),) if formula == NOT_TOP:
                return cls(index, TOP, items)
            case (At(index, formula), At(other, Not(negated))) if other == index and negated == formula:
                return cls(index, formula, items)
        raise ValueError(f"Not a closure: {', '.join(map(str, items))}")


@dataclass(frozen=True)
class Branch:
    items: tuple[PrefixedFormula, ...] = ()
    applied: frozenset = frozenset()
    fresh_counter: Index = ROOT_INDEX
    members: frozenset = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'members', frozenset(self.items))
        used = max((index for item in self.items for index in item.indices), default=ROOT_INDEX - 1)
        if self.fresh_counter <= used:
            object.__setattr__(self, 'fresh_counter', used + 1)

    @classmethod
    def from_items(cls, items: Iterable[PrefixedFormula]) -> Branch:
        return cls(tuple(dict.fromkeys(items)))

    def __contains__(self, item: object) -> bool:
        return item in self.members

    def __iter__(self) -> Iterator[PrefixedFormula]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __str__(self) -> str:
        return '\n'.join(str(item) for item in self.items)

    def add(self, item: PrefixedFormula) -> Branch:
        if item in self:
            return self
        return replace(self, items=self.items + (item,))

    def extend(self, items: Iterable[PrefixedFormula]) -> Branch:
        new = tuple(item for item in dict.fromkeys(items) if item not in self)
        if not new:
            return self
        return replace(self, items=self.items + new)

    def record(self, fingerprint) -> Branch:
        return replace(self, applied=self.applied | {fingerprint})

    def draw_index(self) -> tuple[Index, Branch]:
        """Reserve the next unused index."""
        return self.fresh_counter, replace(self, fresh_counter=self.fresh_counter + 1)

    @property
    def fresh_index(self) -> Index:
        return self.fresh_counter

    def shifted(self, offset: int) -> Branch:
        return Branch(tuple(item.shifted(offset) for item in self.items))

    @cached_property
    def positions(self) -> dict[PrefixedFormula, int]:
        return {item: position for position, item in enumerate(self.items)}

    @cached_property
    def indices(self) -> tuple[Index, ...]:
        return tuple(dict.fromkeys(index for item in self.items for index in item.indices))

    @cached_property
    def _formulas_by_index(self) -> dict[Index, tuple[At, ...]]:
        grouped: dict[Index, list[At]] = {}
        for item in self.items:
            if isinstance(item, At):
                grouped.setdefault(item.index, []).append(item)
        return {index: tuple(items) for index, items in grouped.items()}

    def formulas_at(self, index: Index) -> tuple[At, ...]:
        return self._formulas_by_index.get(index, ())

    @cached_property
    def assertions(self) -> tuple[At, ...]:
        return tuple(item for item in self.items if isinstance(item, At))

    @cached_property
    def relations(self) -> tuple[Rel, ...]:
        return tuple(item for item in self.items if isinstance(item, Rel))

    @cached_property
    def _relations_by_source(self) -> dict[Index, tuple[Rel, ...]]:
        grouped: dict[Index, list[Rel]] = {}
        for item in self.relations:
            grouped.setdefault(item.source, []).append(item)
        return {index: tuple(items) for index, items in grouped.items()}

    def relations_from(self, index: Index) -> tuple[Rel, ...]:
        return self._relations_by_source.get(index, ())

    @cached_property
    def _relation_keys(self) -> frozenset[tuple[Index, Formula]]:
        return frozenset((item.source, item.formula) for item in self.relations)

    def has_relation(self, source: Index, formula: Formula) -> bool:
        """Whether some r(source,k): formula is on the branch."""
        return (source, formula) in self._relation_keys

    @cached_property
    def antecedents(self) -> tuple[Formula, ...]:
        """Antecedents of the conditionals occurring in the formulas at indices."""
        return antecedents(*(item.formula for item in self.assertions))

    @cached_property
    def antecedent_set(self) -> frozenset[Formula]:
        return frozenset(self.antecedents)

    @cached_property
    def conditional_indices(self) -> tuple[Index, ...]:
        """Indices that are a relation source or carry a (negated) conditional."""
        found = [item.source for item in self.relations]
        found += [
            item.index for item in self.assertions
            if is_conditional(item.formula) or negated_conditional(item.formula)
        ]
        found = set(found)
        return tuple(index for index in self.indices if index in found)


def add(branch: Branch, item: PrefixedFormula) -> Branch:
    return branch.add(item)


def fresh_index(branch: Branch) -> Index:
    return branch.fresh_index


def closure_witness(branch: Branch) -> ClosureWitness | None:
    """
    First contradiction on the branch, if any.

    A branch closes on ``i: _|_``, on ``i: ~true`` or on a pair ``i: A`` and
    ``i: ~A``. Relation facts never close a branch.
    """
    for item in branch.assertions:
        formula = item.formula
        if formula == BOTTOM:
            return ClosureWitness(item.index, BOTTOM, (item,))
        if formula == NOT_TOP:
            return ClosureWitness(item.index, TOP, (item,))
        negation = At(item.index, Not(formula))
        if negation in branch:
            return ClosureWitness(item.index, formula, (item, negation))
    return None
