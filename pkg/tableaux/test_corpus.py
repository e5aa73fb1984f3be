from django.test import SimpleTestCase

from .corpus import CORPUS, EXPECT_CLOSED, EXPECT_OPEN, entries_for
from .engine import Limits, replay
from .rulesets import get_preset
from .services import ProverService
from .verdicts import Closed, Open

CORPUS_LIMITS = Limits(max_nodes=500)


class CorpusTests(SimpleTestCase):
    """Test cases for the benchmark entailments."""

    def run_entry(self, entry, logic=None):
        preset = get_preset(logic or entry.logic)
        return preset, ProverService(preset, CORPUS_LIMITS).prove(entry.premise_formulas, entry.goal_formula)

    def test_positive_entries_close_under_their_logic(self):
        """Test that each positive entry closes within 500 nodes and replays."""
        for entry in CORPUS:
            if entry.expect != EXPECT_CLOSED:
                continue
            with self.subTest(entry=entry.name):
                preset, verdict = self.run_entry(entry)
                self.assertIsInstance(verdict, Closed)
                self.assertLessEqual(verdict.stats.nodes, 500)
                report = replay(verdict.proof, preset)
                self.assertTrue(report, report.reason)

    def test_positive_entries_close_under_stronger_logics(self):
        """Test that positive entries close in VCS too."""
        for entry in entries_for('VCS'):
            if entry.expect != EXPECT_CLOSED:
                continue
            with self.subTest(entry=entry.name):
                _, verdict = self.run_entry(entry, 'VCS')
                self.assertIsInstance(verdict, Closed)

    def test_negative_entries_stay_open(self):
        """Test that negative entries do not close under their logic."""
        for entry in CORPUS:
            if entry.expect != EXPECT_OPEN:
                continue
            with self.subTest(entry=entry.name):
                _, verdict = self.run_entry(entry)
                self.assertNotIsInstance(verdict, Closed)

    def test_weak_negatives_are_certified(self):
        """Test that the Ck counterexamples satisfy every Ck condition."""
        for name in ('S1-open', 'RCEA-open'):
            (entry,) = [entry for entry in CORPUS if entry.name == name]
            with self.subTest(entry=name):
                _, verdict = self.run_entry(entry)
                self.assertIsInstance(verdict, Open)
                self.assertTrue(verdict.certified, verdict.violations)

    def test_entry_selection(self):
        """Test which entries belong to a run."""
        names = {entry.name for entry in entries_for('ck')}
        self.assertEqual(names, {'CM', 'CC', 'CN', 'S1-open', 'RCEA-open'})
        names = {entry.name for entry in entries_for('VCS')}
        self.assertIn('CEM', names)
        self.assertIn('RCEA', names)
        self.assertNotIn('CEM-open', names)
