import json
import os
import tempfile
from io import StringIO

from django.test import SimpleTestCase

from .runner import run


class RunnerTestCase(SimpleTestCase):
    def run_mode(self, *argv):
        stdout, stderr = StringIO(), StringIO()
        code = run(list(argv), stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    def write_model(self, data):
        handle = tempfile.NamedTemporaryFile('w', suffix='.json', delete=False, encoding='utf-8')
        with handle:
            json.dump(data, handle)
        self.addCleanup(os.remove, handle.name)
        return handle.name


class ProveCommandTests(RunnerTestCase):
    """Test cases for the prove and countermodel modes."""

    def test_closed(self):
        """Test that a valid entailment exits 0 with a proof."""
        code, out, _ = self.run_mode('prove', '--logic', 'vc', '--goal', '[p]p')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('closed under Vc'))

    def test_open(self):
        """Test that an invalid entailment exits 1 with a countermodel."""
        code, out, _ = self.run_mode('prove', '--logic', 'ck', '--goal', '[p]p')
        self.assertEqual(code, 1)
        self.assertIn('countermodel (certified)', out)

    def test_uncertified_open(self):
        """Test that an open branch without a certified countermodel exits 2."""
        code, out, _ = self.run_mode('prove', '--logic', 'vc', '--goal', '[p]q | [p]~q')
        self.assertEqual(code, 2)
        self.assertIn('countermodel (not certified)', out)

    def test_premises_and_json(self):
        """Test repeated premises and the JSON report."""
        code, out, _ = self.run_mode(
            'prove', '--premise', '[p]q', '--premise', '[p]r', '--goal', '[p](q & r)', '--format', 'json',
        )
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data['status'], 'closed')
        self.assertEqual(data['proof']['root']['rule'], 'Ass')

    def test_resource_out(self):
        """Test that hitting a limit exits 2."""
        code, out, _ = self.run_mode('prove', '--goal', '[p]p', '--max-indices', '1')
        self.assertEqual(code, 2)
        self.assertIn('limit max_indices reached', out)

    def test_cut_and_ea_prime_options(self):
        """Test the rule options."""
        code, _, _ = self.run_mode('prove', '--logic', 'ck', '--cut', 'hints=p', '--goal', 'p | ~p')
        self.assertEqual(code, 0)
        code, _, _ = self.run_mode('prove', '--logic', 'CK', '--ea-prime', '--premise', '[p & q]r', '--goal', '[q & p]r')
        self.assertEqual(code, 0)

    def test_countermodel_mode(self):
        """Test the exit codes of the countermodel mode."""
        self.assertEqual(self.run_mode('countermodel', '--logic', 'ck', '--goal', '[p]p')[0], 0)
        self.assertEqual(self.run_mode('countermodel', '--logic', 'vc', '--goal', '[p]p')[0], 1)

    def test_usage_errors(self):
        """Test that bad input exits 3 with a message."""
        code, _, err = self.run_mode('prove', '--goal', '[p')
        self.assertEqual(code, 3)
        self.assertIn('Invalid goal', err)
        self.assertEqual(self.run_mode('prove')[0], 3)
        self.assertEqual(self.run_mode('prove', '--logic', 'S5', '--goal', 'p')[0], 3)
        self.assertEqual(self.run_mode('prove', '--goal', 'p', '--max-nodes', '0')[0], 3)
        self.assertEqual(self.run_mode('prove', '--goal', 'p', '--cut', 'sometimes')[0], 3)
        self.assertEqual(self.run_mode('disprove')[0], 3)
        self.assertEqual(self.run_mode()[0], 3)


class CheckModelCommandTests(RunnerTestCase):
    """Test cases for the check-model mode."""

    def test_conditions_hold(self):
        """Test a model meeting condition 1."""
        path = self.write_model({'worlds': [1, 2], 'valuation': {'p': [2]}, 'access': [['p', 1, 2]]})
        code, out, _ = self.run_mode('check-model', '--model', path, '--condition', '1')
        self.assertEqual(code, 0)
        self.assertIn('condition 1: holds', out)

    def test_condition_fails(self):
        """Test a violation reported as JSON."""
        path = self.write_model({'worlds': [1, 2, 3], 'access': [['p', 1, 2], ['p', 1, 3]]})
        code, out, _ = self.run_mode('check-model', '--model', path, '--condition', 'cem', '--format', 'json')
        self.assertEqual(code, 1)
        data = json.loads(out)
        self.assertFalse(data['satisfied'])
        self.assertEqual(data['results'][0]['counterexample']['witnesses'], [2, 3])

    def test_logic_selects_conditions(self):
        """Test that a logic checks its conditions over the goal's antecedents."""
        path = self.write_model({'worlds': [1], 'access': [['true', 1, 1]]})
        code, out, _ = self.run_mode('check-model', '--model', path, '--logic', 'VC', '--goal', '[true]p')
        self.assertEqual(code, 0)
        self.assertIn('condition congruence: holds', out)

    def test_invalid_model(self):
        """Test that unreadable or invalid models exit 3."""
        path = self.write_model({'worlds': [1], 'access': [['p', 1, 2]]})
        self.assertEqual(self.run_mode('check-model', '--model', path)[0], 3)
        self.assertEqual(self.run_mode('check-model', '--model', path + '.missing')[0], 3)


class CorpusCommandTests(RunnerTestCase):
    """Test cases for the corpus mode."""

    def test_weakest_logic(self):
        """Test that every Ck entry passes."""
        code, out, _ = self.run_mode('corpus', '--logic', 'ck')
        self.assertEqual(code, 0)
        self.assertIn('5/5 entries passed under Ck', out)

    def test_strongest_logic_as_json(self):
        """Test that every positive entry passes under VCS."""
        code, out, _ = self.run_mode('corpus', '--logic', 'vcs', '--format', 'json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertTrue(data['passed'])
        self.assertEqual(data['logic'], 'VCS')
