"""
Test cases for utility functions.
"""
from django.test import SimpleTestCase

from formulas.parser import parse
from formulas.utils import antecedents, negated_conditional
from semantics.conditions import check_conditions
from semantics.priest import PriestModel
from semantics.utils import render_condition_report, render_model
from tableaux.prefixed import Branch, parse_prefixed
from tableaux.utils import render_branch


class RenderUtilsTests(SimpleTestCase):
    """Test cases for the text renderers."""

    def test_render_branch(self):
        """Test that branch items are numbered in order."""
        branch = Branch.from_items(parse_prefixed(text) for text in ('1: ~[p]q', 'r(1,2): p', '2: ~q'))
        self.assertEqual(render_branch(branch), '1. 1: ~[p]q\n2. r(1,2): p\n3. 2: ~q')

    def test_render_model_without_relations(self):
        """Test a model with one world and nothing true."""
        self.assertEqual(render_model(PriestModel.build([1])), 'worlds: 1\n')

    def test_render_report_without_violations(self):
        """Test that holding conditions print no counterexample."""
        report = check_conditions(PriestModel.build([1]), [], ('3', 'cem'))
        self.assertEqual(render_condition_report(report), 'condition 3: holds\ncondition cem: holds\n')


class FormulaUtilsTests(SimpleTestCase):
    """Test cases for formula helpers used across apps."""

    def test_antecedents_in_order_of_occurrence(self):
        """Test that antecedents are listed once each, outermost first."""
        formula = parse('[p & q]r -> <p>[q]p | [p & q]p')
        self.assertEqual(antecedents(formula), (parse('p & q'), parse('p'), parse('q')))

    def test_negated_conditional(self):
        """Test which formulas are negated conditionals."""
        self.assertTrue(negated_conditional(parse('~[p]q')))
        self.assertTrue(negated_conditional(parse('~<p>q')))
        self.assertFalse(negated_conditional(parse('~p')))
        self.assertFalse(negated_conditional(parse('[p]q')))
