from django.test import SimpleTestCase
from hypothesis import given, settings

from .parser import FormulaSyntaxError, parse
from .printer import print_formula
from .strategies import formulas
from .syntax import BOTTOM, TOP, And, Atom, Imp, Nec, Not, Or, Poss
from .utils import antecedents, atoms, depth, size, subformula_list, subformulas

p, q, r = Atom('p'), Atom('q'), Atom('r')


class PrinterTests(SimpleTestCase):
    """Test cases for the canonical text form."""

    def test_print_conditionals(self):
        """Test that conditionals print with brackets and angles."""
        self.assertEqual(print_formula(Nec(p, q)), '[p]q')
        self.assertEqual(print_formula(Poss(And(p, q), Not(r))), '<p & q>~r')

    def test_print_constants(self):
        """Test the ASCII spelling of the constants."""
        self.assertEqual(print_formula(BOTTOM), '_|_')
        self.assertEqual(print_formula(Not(TOP)), '~true')

    def test_left_associative_operators(self):
        """Test that a right-nested conjunction keeps its parentheses."""
        self.assertEqual(print_formula(And(And(p, q), r)), 'p & q & r')
        self.assertEqual(print_formula(And(p, And(q, r))), 'p & (q & r)')
        self.assertEqual(print_formula(Or(p, Or(q, r))), 'p | (q | r)')

    def test_right_associative_implication(self):
        """Test that implication nests to the right without parentheses."""
        self.assertEqual(print_formula(Imp(p, Imp(q, r))), 'p -> q -> r')
        self.assertEqual(print_formula(Imp(Imp(p, q), r)), '(p -> q) -> r')

    def test_prefix_operands_are_wrapped(self):
        """Test that binary operands of prefix operators are parenthesised."""
        self.assertEqual(print_formula(Not(And(p, q))), '~(p & q)')
        self.assertEqual(print_formula(Nec(p, Or(q, r))), '[p](q | r)')
        self.assertEqual(print_formula(And(Nec(p, q), r)), '[p]q & r')

    def test_str_uses_printer(self):
        """Test that str() of a formula is its canonical text."""
        self.assertEqual(str(Imp(Nec(p, q), Poss(p, q))), '[p]q -> <p>q')


class FormulaUtilsTests(SimpleTestCase):
    """Test cases for the structural helpers."""

    def test_subformulas_of_conditional(self):
        """Test the subformula set of [p](q & r)."""
        formula = Nec(p, And(q, r))
        self.assertEqual(subformulas(formula), {formula, p, And(q, r), q, r})

    def test_subformulas_with_negations(self):
        """Test that every subformula gets its negation."""
        found = subformulas(Not(p), with_negations=True)
        self.assertEqual(found, {Not(p), p, Not(Not(p))})

    def test_subformula_list_order(self):
        """Test that the ordered list is pre-order without repeats."""
        self.assertEqual(subformula_list(And(p, Or(p, q))), (And(p, Or(p, q)), p, Or(p, q), q))

    def test_atoms_and_antecedents(self):
        """Test atom and antecedent collection across formulas."""
        formula = Imp(Nec(And(p, q), r), Poss(q, Nec(p, r)))
        self.assertEqual(atoms(formula), (p, q, r))
        self.assertEqual(antecedents(formula), (And(p, q), q, p))

    def test_size_and_depth(self):
        """Test node count and nesting depth."""
        formula = Nec(p, Not(q))
        self.assertEqual(size(formula), 4)
        self.assertEqual(depth(formula), 3)


class FormulaPropertyTests(SimpleTestCase):
    """Property tests over random formulas."""

    @settings(max_examples=300, deadline=None)
    @given(formulas(max_depth=6))
    def test_print_then_parse_is_identity(self, formula):
        """Test that printed formulas parse back to the same tree."""
        self.assertEqual(parse(print_formula(formula)), formula)

    @settings(max_examples=200, deadline=None)
    @given(formulas(max_depth=5))
    def test_subformulas_are_closed(self, formula):
        """Test that subformula sets contain their own subformulas."""
        found = subformulas(formula)
        self.assertIn(formula, found)
        for item in found:
            self.assertLessEqual(subformulas(item), found)
        self.assertLessEqual(len(found), size(formula))

    @settings(max_examples=100, deadline=None)
    @given(formulas(max_depth=4))
    def test_syntax_error_never_escapes_as_other_type(self, formula):
        """Test that truncated text fails with FormulaSyntaxError only."""
        text = print_formula(formula)
        truncated = text + ' &'
        with self.assertRaises(FormulaSyntaxError):
            parse(truncated)
