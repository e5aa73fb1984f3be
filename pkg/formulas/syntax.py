"""
Abstract syntax of the conditional language.

Formulas are immutable trees compared syntactically: two formulas are equal
exactly when they were built from the same constructors and atoms.
"""
from __future__ import annotations

from dataclasses import dataclass


class Formula:
    """Base class of every formula node."""

    __slots__ = ()

    @property
    def children(self) -> tuple[Formula, ...]:
        return ()

    def __str__(self) -> str:
        # Import here to avoid circular imports
        from .printer import print_formula
        return print_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula

    @property
    def children(self) -> tuple[Formula, ...]:
        return (self.operand,)


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula

    @property
    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True)
class And(_Binary):
    pass


@dataclass(frozen=True)
class Or(_Binary):
    pass


@dataclass(frozen=True)
class Imp(_Binary):
    pass


@dataclass(frozen=True)
class _Conditional(Formula):
    antecedent: Formula
    consequent: Formula

    @property
    def children(self) -> tuple[Formula, ...]:
        return (self.antecedent, self.consequent)


@dataclass(frozen=True)
class Nec(_Conditional):
    """[A]B: B holds at every A-accessible world."""


@dataclass(frozen=True)
class Poss(_Conditional):
    """<A>B: B holds at some A-accessible world."""


BOTTOM = Bottom()
TOP = Top()
NOT_TOP = Not(TOP)


def is_conditional(formula: Formula) -> bool:
    return isinstance(formula, (Nec, Poss))


def iff(left: Formula, right: Formula) -> Formula:
    """Material equivalence, which is not primitive."""
    return And(Imp(left, right), Imp(right, left))


def box(formula: Formula) -> Formula:
    """Outer necessity: [~A]_|_."""
    return Nec(Not(formula), BOTTOM)


def diamond(formula: Formula) -> Formula:
    """Outer possibility: ~[A]_|_."""
    return Not(Nec(formula, BOTTOM))
