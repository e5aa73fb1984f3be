from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from formulas.parser import parse
from formulas.syntax import TOP, Atom, Nec, Not, Poss
from tableaux.prefixed import At, Branch, Rel, parse_prefixed

from .extraction import extract_model
from .priest import ModelValidationError, PartialAssignmentError, PriestModel, UnknownWorldError, evaluate, satisfies_prefixed
from .serializers import PriestModelSerializer
from .strategies import KEYS, formulas_over_keys, models
from .utils import render_model

p, q = Atom('p'), Atom('q')


def two_worlds():
    """1 sees 2 under p; p and q hold at 2 only."""
    return PriestModel.build([1, 2], {p: [(1, 2)]}, {'p': [2], 'q': [2]})


class EvaluateTests(SimpleTestCase):
    """Test cases for truth at a world."""

    def test_conditionals(self):
        """Test [A]B and <A>B against the A-accessible worlds."""
        model = two_worlds()
        self.assertTrue(evaluate(model, 1, parse('[p]q')))
        self.assertTrue(evaluate(model, 1, parse('<p>q')))
        self.assertFalse(evaluate(model, 1, parse('[p]~q')))
        self.assertTrue(evaluate(model, 2, parse('[p]_|_')))
        self.assertFalse(evaluate(model, 2, parse('<p>true')))

    def test_unrelated_antecedent_has_no_access(self):
        """Test that a formula with the same truth set is not interchangeable."""
        model = two_worlds()
        self.assertTrue(evaluate(model, 1, parse('[p & q]_|_')))
        self.assertFalse(evaluate(model, 1, parse('[p]_|_')))

    def test_connectives_and_constants(self):
        """Test classical connectives at each world."""
        model = two_worlds()
        self.assertTrue(evaluate(model, 1, parse('~p & (p -> q) & true')))
        self.assertFalse(evaluate(model, 2, parse('p -> _|_')))
        self.assertTrue(evaluate(model, 2, parse('p | _|_')))

    def test_unknown_world(self):
        """Test that evaluating at a missing world raises."""
        with self.assertRaises(UnknownWorldError):
            evaluate(two_worlds(), 3, p)

    def test_build_validates_worlds(self):
        """Test that relations may only use the model's worlds."""
        with self.assertRaises(ModelValidationError):
            PriestModel.build([1], {p: [(1, 2)]})
        with self.assertRaises(ModelValidationError):
            PriestModel.build([])


class DualityTests(SimpleTestCase):
    """<A>B and ~[A]~B agree in every model."""

    @hypothesis_settings(max_examples=300, deadline=None)
    @given(models(), st.sampled_from(KEYS), formulas_over_keys())
    def test_possibility_is_dual_of_necessity(self, model, antecedent, consequent):
        """Test that <A>B holds exactly where [A]~B fails."""
        for world in sorted(model.worlds):
            self.assertEqual(
                evaluate(model, world, Poss(antecedent, consequent)),
                not evaluate(model, world, Nec(antecedent, Not(consequent))),
                f'{antecedent}, {consequent} at {world}',
            )


class SatisfiesPrefixedTests(SimpleTestCase):
    """Test cases for satisfaction of prefixed formulas."""

    def test_assignment_maps_indices(self):
        """Test that indices are read through the assignment."""
        items = [At(5, parse('[p]q')), Rel(5, 7, p), At(7, q)]
        self.assertTrue(satisfies_prefixed(two_worlds(), {5: 1, 7: 2}, items))
        self.assertFalse(satisfies_prefixed(two_worlds(), {5: 2, 7: 1}, items))

    def test_partial_assignment(self):
        """Test that every index needs a world."""
        with self.assertRaises(PartialAssignmentError):
            satisfies_prefixed(two_worlds(), {1: 1}, [Rel(1, 2, p)])

    def test_assignment_outside_model(self):
        """Test that assigned worlds must exist."""
        with self.assertRaises(UnknownWorldError):
            satisfies_prefixed(two_worlds(), {1: 9}, [At(1, p)])


class ExtractionTests(SimpleTestCase):
    """Test cases for reading a model off a branch."""

    def test_extract_model(self):
        """Test worlds, valuation and access taken from the branch."""
        branch = Branch.from_items(
            parse_prefixed(text) for text in ('1: ~[p]q', 'r(1,2): p', '2: ~q', '2: p', 'r(2,2): true')
        )
        model, assignment = extract_model(branch)
        self.assertEqual(model.worlds, {1, 2})
        self.assertEqual(assignment, {1: 1, 2: 2})
        self.assertEqual(model.valuation, {'p': {2}})
        self.assertEqual(model.successors(p, 1), {2})
        self.assertEqual(model.successors(TOP, 2), {2})
        self.assertTrue(satisfies_prefixed(model, assignment, branch))

    def test_empty_branch_has_one_world(self):
        """Test that an empty branch still yields a model."""
        model, assignment = extract_model(Branch())
        self.assertEqual(model.worlds, {1})
        self.assertEqual(assignment, {1: 1})


class ModelFormatTests(SimpleTestCase):
    """Test cases for the model exchange format and rendering."""

    def test_round_trip(self):
        """Test that a model survives serialization."""
        data = PriestModelSerializer(two_worlds()).data
        self.assertEqual(data, {'worlds': [1, 2], 'valuation': {'p': [2], 'q': [2]}, 'access': [['p', 1, 2]]})
        serializer = PriestModelSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), two_worlds())

    def test_rejects_unknown_worlds(self):
        """Test that access entries must use declared worlds."""
        serializer = PriestModelSerializer(data={'worlds': [1], 'access': [['p', 1, 2]]})
        self.assertFalse(serializer.is_valid())

    def test_rejects_bad_formula_and_atom(self):
        """Test that formulas and atom names are checked."""
        self.assertFalse(PriestModelSerializer(data={'worlds': [1], 'access': [['p &', 1, 1]]}).is_valid())
        self.assertFalse(PriestModelSerializer(data={'worlds': [1], 'valuation': {'P': [1]}}).is_valid())

    def test_render_model(self):
        """Test the text rendering."""
        text = render_model(two_worlds())
        self.assertIn('worlds: 1, 2', text)
        self.assertIn('p true at 2', text)
        self.assertIn('R[p]: 1->2', text)
