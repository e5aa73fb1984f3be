from django.test import SimpleTestCase, override_settings

from formulas.parser import parse

from .conditions import TABLE_CONDITIONS, check_conditions
from .oracle import OracleBudgetExceeded, brute_force_valid, count_models
from .priest import evaluate


class OracleTests(SimpleTestCase):
    """Test cases for the brute-force validity check."""

    def test_identity_needs_inclusion(self):
        """Test that [p]p fails without condition 1 and holds with it."""
        result = brute_force_valid(parse('[p]p'), max_worlds=2)
        self.assertFalse(result)
        self.assertFalse(evaluate(result.countermodel, result.world, parse('[p]p')))
        self.assertTrue(brute_force_valid(parse('[p]p'), max_worlds=3, conditions=['1']))

    def test_propositional_tautology(self):
        """Test that a tautology is valid in every model checked."""
        result = brute_force_valid(parse('p | ~p'), max_worlds=2)
        self.assertTrue(result.valid)
        self.assertEqual(result.models_checked, count_models(1, 1, 0) + count_models(2, 1, 0))

    def test_excluded_middle_countermodel_has_two_worlds(self):
        """Test that conditional excluded middle fails in a two-world model of conditions 1-6."""
        formula = parse('[p]q | [p]~q')
        result = brute_force_valid(formula, max_worlds=2, conditions=TABLE_CONDITIONS)
        self.assertFalse(result)
        self.assertEqual(len(result.countermodel.worlds), 2)
        report = check_conditions(result.countermodel, [parse('p'), parse('true')], (*TABLE_CONDITIONS, 'cem'))
        self.assertFalse(report['cem'].satisfied)
        self.assertTrue(all(report[name].satisfied for name in TABLE_CONDITIONS))

    def test_budget(self):
        """Test that the enumeration refuses to pass its budget."""
        with self.assertRaises(OracleBudgetExceeded):
            brute_force_valid(parse('[p]q | [q]p | [r]p'), max_worlds=3, budget=1000)

    @override_settings(ORACLE_MAX_MODELS=10)
    def test_budget_from_settings(self):
        """Test that the settings supply the default budget."""
        with self.assertRaises(OracleBudgetExceeded):
            brute_force_valid(parse('[p]q | ~[p]q'), max_worlds=2)
