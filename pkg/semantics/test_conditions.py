from django.test import SimpleTestCase

from formulas.syntax import TOP, And, Atom
from tableaux.rulesets import CK, CK_MINUS, VC, VC_MINUS, VCS

from .conditions import (
    ALL_CONDITIONS, Counterexample, check_condition, check_conditions, conditions_for, verify_counterexample,
)
from .priest import PriestModel
from .utils import render_condition_report

p, q = Atom('p'), Atom('q')
pq = And(p, q)


def model(access, valuation=None, worlds=(1, 2, 3)):
    return PriestModel.build(worlds, access, valuation or {})


class SingleConditionTests(SimpleTestCase):
    """Test cases for each frame condition on a passing and a failing model."""

    def assertCondition(self, condition, vocab, good, bad, world, witnesses):
        self.assertTrue(check_condition(good, vocab, condition).satisfied)
        result = check_condition(bad, vocab, condition)
        self.assertFalse(result.satisfied)
        self.assertEqual(result.counterexample.world, world)
        self.assertEqual(result.counterexample.witnesses, witnesses)
        self.assertTrue(verify_counterexample(bad, result.counterexample))
        self.assertFalse(verify_counterexample(good, result.counterexample))

    def test_inclusion(self):
        """Test condition 1: A-accessible worlds satisfy A."""
        valuation = {'p': [2]}
        self.assertCondition(
            '1', [p],
            model({p: [(1, 2)]}, valuation), model({p: [(1, 2), (1, 3)]}, valuation),
            1, (3,),
        )

    def test_projection(self):
        """Test condition 2: a q-world among the p-worlds needs q-access."""
        valuation = {'p': [2], 'q': [2]}
        self.assertCondition(
            '2', [p, q],
            model({p: [(1, 2)], q: [(1, 3)]}, valuation), model({p: [(1, 2)]}, valuation),
            1, (2,),
        )

    def test_centring(self):
        """Test condition 3: true-access stays at the world."""
        self.assertCondition('3', [], model({TOP: [(1, 1)]}), model({TOP: [(2, 1)]}), 2, (1,))

    def test_weak_centring(self):
        """Test condition 4: each world is true-accessible from itself."""
        self.assertCondition(
            '4', [],
            model({TOP: [(1, 1), (2, 2), (3, 3)]}), model({TOP: [(1, 1), (3, 3)]}),
            2, (2,),
        )

    def test_conjunction_access(self):
        """Test condition 5: p-worlds satisfying q are p&q-accessible."""
        valuation = {'q': [2]}
        self.assertCondition(
            '5', [p, q, pq],
            model({p: [(1, 2)], pq: [(1, 2)]}, valuation), model({p: [(1, 2)]}, valuation),
            1, (2,),
        )

    def test_conjunction_restriction(self):
        """Test condition 6: p&q-worlds are p-worlds satisfying q."""
        valuation = {'q': [2, 3]}
        self.assertCondition(
            '6', [p, q, pq],
            model({p: [(1, 2), (1, 3)], pq: [(1, 2)]}, valuation), model({p: [(1, 2)], pq: [(1, 3)]}, valuation),
            1, (3,),
        )

    def test_conjunction_conditions_need_the_conjunction(self):
        """Test that 5 and 6 ignore pairs whose conjunction is not in the vocabulary."""
        bad = model({p: [(1, 2)]}, {'q': [2]})
        self.assertTrue(check_condition(bad, [p, q], '5').satisfied)

    def test_uniqueness(self):
        """Test cem: at most one accessible world."""
        self.assertCondition('cem', [p], model({p: [(1, 2)]}), model({p: [(1, 2), (1, 3)]}), 1, (2, 3))

    def test_congruence(self):
        """Test congruence: equivalent antecedents share their access."""
        valuation = {'p': [1, 2], 'q': [1, 2]}
        self.assertCondition(
            'congruence', [p, q],
            model({p: [(1, 2)], q: [(1, 2)]}, valuation), model({p: [(1, 2)]}, valuation),
            1, (2,),
        )

    def test_mismatched_counterexample(self):
        """Test that a counterexample with the wrong arity or world is refuted."""
        bad = model({p: [(1, 2), (1, 3)]})
        self.assertFalse(verify_counterexample(bad, Counterexample('cem', 1, (p, q), (2, 3))))
        self.assertFalse(verify_counterexample(bad, Counterexample('cem', 9, (p,), (2, 3))))


class ConditionReportTests(SimpleTestCase):
    """Test cases for reports over several conditions."""

    def test_report(self):
        """Test lookup, violations and rendering."""
        report = check_conditions(model({p: [(1, 2), (1, 3)]}), [p], ('1', 'cem'))
        self.assertFalse(report.all_satisfied)
        self.assertFalse(report['cem'].satisfied)
        self.assertEqual(len(report.violations), 2)
        with self.assertRaises(KeyError):
            report['5']
        text = render_condition_report(report)
        self.assertIn('condition cem: fails', text)
        self.assertIn('fails at world 1', text)

    def test_unknown_condition(self):
        """Test that unknown names raise."""
        with self.assertRaises(KeyError):
            check_condition(model({}), [p], '7')

    def test_conditions_for_presets(self):
        """Test the conditions each preset must satisfy."""
        self.assertEqual(conditions_for(CK_MINUS), ())
        self.assertEqual(conditions_for(CK), ('congruence',))
        self.assertEqual(conditions_for(VC_MINUS), ('1', '2', '3', '4', '5', '6'))
        self.assertEqual(conditions_for(VC), ('1', '2', '3', '4', '5', '6', 'congruence'))
        self.assertEqual(conditions_for(VCS), ALL_CONDITIONS)
