"""
Canonical text form of formulas.

The output is ASCII and re-parses to the same tree. Precedence, tightest
first: prefix operators (~, [A], <A>), &, |, ->. The binary operators & and
| associate to the left and -> to the right, so only the parentheses needed
to preserve the tree are printed.
"""
from .syntax import And, Atom, Bottom, Formula, Imp, Nec, Not, Or, Poss, Top

ATOMIC = 5
PREFIX = 4
CONJUNCTION = 3
DISJUNCTION = 2
IMPLICATION = 1

BOTTOM_TEXT = '_|_'
TOP_TEXT = 'true'


def precedence(formula: Formula) -> int:
    match formula:
        case Not() | Nec() | Poss():
            return PREFIX
        case And():
            return CONJUNCTION
        case Or():
            return DISJUNCTION
        case Imp():
            return IMPLICATION
        case _:
            return ATOMIC


def _wrap(formula: Formula, level: int, strict: bool = False) -> str:
    text = print_formula(formula)
    own = precedence(formula)
    if own < level or (strict and own == level):
        return f'({text})'
    return text


def print_formula(formula: Formula) -> str:
    """
    Render a formula in the input syntax.

    Args:
        formula: Any formula tree

    Returns:
        Text that parses back to an equal formula
    """
    match formula:
        case Atom(name):
            return name
        case Bottom():
            return BOTTOM_TEXT
        case Top():
            return TOP_TEXT
        case Not(operand):
            return '~' + _wrap(operand, PREFIX)
        case Nec(antecedent, consequent):
            return f'[{print_formula(antecedent)}]{_wrap(consequent, PREFIX)}'
        case Poss(antecedent, consequent):
            return f'<{print_formula(antecedent)}>{_wrap(consequent, PREFIX)}'
        case And(left, right):
            return f'{_wrap(left, CONJUNCTION)} & {_wrap(right, CONJUNCTION, strict=True)}'
        case Or(left, right):
            return f'{_wrap(left, DISJUNCTION)} | {_wrap(right, DISJUNCTION, strict=True)}'
        case Imp(left, right):
            return f'{_wrap(left, IMPLICATION, strict=True)} -> {_wrap(right, IMPLICATION)}'
    raise TypeError(f"Not a formula: {formula!r}")
