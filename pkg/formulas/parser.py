"""
Parser for the conditional language.

Grammar, loosest binding first:

    A <-> B     equivalence, sugar for (A -> B) & (B -> A)   (also ≡)
    A -> B      material conditional, right associative        (also ⊃)
    A => B      [A]B;  A ~> B  <A>B                            (same level)
    A | B       disjunction, left associative                  (also ∨)
    A & B       conjunction, left associative                  (also ∧)
    ~A [A]B <A>B []A <>A    prefix operators, nesting freely   (¬ □ ◇)
    p  _|_  true  (A)       atoms start with a lowercase letter (false ⊥ ⊤)

[]A and <>A are the outer modalities, read as [~A]_|_ and ~[A]_|_.
"""
import logging
from dataclasses import dataclass
from typing import Callable

import pyparsing as pp

from .syntax import BOTTOM, TOP, And, Atom, Formula, Imp, Nec, Not, Or, Poss, box, diamond, iff

logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()

ATOM_PATTERN = r'[a-z][a-zA-Z0-9_]*'


class FormulaSyntaxError(ValueError):
    """Raised when text is not a well-formed formula."""

    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        self.line = text.count('\n', 0, position) + 1
        self.column = position - (text.rfind('\n', 0, position) + 1) + 1
        super().__init__(
            f"{expected} (line {self.line}, column {self.column}) in {text!r}"
        )


@dataclass(frozen=True)
class _Prefix:
    build: Callable[[Formula], Formula]


_BINARY = {
    '&': And, '∧': And,
    '|': Or, '∨': Or,
    '->': Imp, '⊃': Imp,
    '=>': Nec, '~>': Poss,
    '<->': iff, '≡': iff,
}


def _fold_prefix(tokens):
    *operators, operand = tokens[0]
    for operator in reversed(operators):
        operand = operator.build(operand)
    return operand


def _fold_left(tokens):
    items = tokens[0]
    result = items[0]
    for position in range(1, len(items), 2):
        result = _BINARY[items[position]](result, items[position + 1])
    return result


def _fold_right(tokens):
    items = tokens[0]
    result = items[-1]
    for position in range(len(items) - 2, 0, -2):
        result = _BINARY[items[position]](items[position - 1], result)
    return result


def _build_grammar() -> pp.ParserElement:
    formula = pp.Forward().set_name('formula')

    bottom = (pp.Literal('_|_') | pp.Keyword('false') | pp.Literal('⊥')).set_parse_action(lambda: BOTTOM)
    top = (pp.Keyword('true') | pp.Literal('⊤')).set_parse_action(lambda: TOP)
    atom = pp.Regex(ATOM_PATTERN).set_name('atom').set_parse_action(lambda t: Atom(t[0]))
    operand = (bottom | top | atom).set_name('operand')

    negation = pp.Regex(r'~(?!>)|¬').set_parse_action(lambda: _Prefix(Not))
    outer_box = (pp.Literal('[]') | pp.Literal('□')).set_parse_action(lambda: _Prefix(box))
    outer_diamond = (pp.Literal('<>') | pp.Literal('◇')).set_parse_action(lambda: _Prefix(diamond))
    necessity = (pp.Suppress('[') + formula + pp.Suppress(']')).set_parse_action(
        lambda t: _Prefix(lambda consequent, antecedent=t[0]: Nec(antecedent, consequent))
    )
    possibility = (pp.Suppress('<') + formula + pp.Suppress('>')).set_parse_action(
        lambda t: _Prefix(lambda consequent, antecedent=t[0]: Poss(antecedent, consequent))
    )
    prefix = (negation | outer_box | outer_diamond | necessity | possibility).set_name('prefix operator')

    formula <<= pp.infix_notation(
        operand,
        [
            (prefix, 1, pp.OpAssoc.RIGHT, _fold_prefix),
            (pp.one_of('& ∧'), 2, pp.OpAssoc.LEFT, _fold_left),
            (pp.one_of('| ∨'), 2, pp.OpAssoc.LEFT, _fold_left),
            (pp.one_of('-> ⊃ => ~>'), 2, pp.OpAssoc.RIGHT, _fold_right),
            (pp.one_of('<-> ≡'), 2, pp.OpAssoc.RIGHT, _fold_right),
        ],
    )
    return formula


_GRAMMAR = _build_grammar()


def parse(text: str) -> Formula:
    """
    Parse a formula.

    Args:
        text: Formula in the input syntax

    Returns:
        The formula tree

    Raises:
        FormulaSyntaxError: If the text is not a formula
    """
    try:
        result = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        logger.debug(f"Rejected formula {text!r} at offset {exc.loc}: {exc.msg}")
        raise FormulaSyntaxError(text, exc.loc, exc.msg) from exc
    return result[0]
