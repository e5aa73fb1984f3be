from typing import Iterable, Iterator

from .syntax import Atom, Formula, Nec, Not, Poss, is_conditional


def iter_subformulas(formula: Formula) -> Iterator[Formula]:
    """Pre-order walk, repeats included."""
    stack = [formula]
    while stack:
        current = stack.pop()
        yield current
        stack.extend(reversed(current.children))


def _unique(items: Iterable[Formula]) -> tuple[Formula, ...]:
    return tuple(dict.fromkeys(items))


def subformula_list(formula: Formula) -> tuple[Formula, ...]:
    """Distinct subformulas in pre-order, the formula itself first."""
    return _unique(iter_subformulas(formula))


def subformulas(formula: Formula, with_negations: bool = False) -> frozenset[Formula]:
    """
    Set of subformulas of a formula.

    Args:
        formula: The formula to decompose
        with_negations: Also include the negation of every subformula

    Returns:
        Frozen set containing the formula and all its subformulas
    """
    found = set(iter_subformulas(formula))
    if with_negations:
        found |= {Not(item) for item in found}
    return frozenset(found)


def atoms(*formulas: Formula) -> tuple[Atom, ...]:
    return _unique(
        item for formula in formulas for item in iter_subformulas(formula) if isinstance(item, Atom)
    )


def antecedents(*formulas: Formula) -> tuple[Formula, ...]:
    """Antecedents of the conditionals occurring in the formulas, first occurrence first."""
    return _unique(
        item.antecedent
        for formula in formulas
        for item in iter_subformulas(formula)
        if is_conditional(item)
    )


def size(formula: Formula) -> int:
    return sum(1 for _ in iter_subformulas(formula))


def depth(formula: Formula) -> int:
    return 1 + max((depth(child) for child in formula.children), default=0)


def negated_conditional(formula: Formula) -> bool:
    return isinstance(formula, Not) and isinstance(formula.operand, (Nec, Poss))
