from dataclasses import replace

from django.test import SimpleTestCase

from formulas.syntax import Atom, Nec, Not

from .corpus import CORPUS, EXPECT_CLOSED
from .engine import Proof, ProofNode, replay
from .prefixed import At
from .rulesets import CK_MINUS, RuleId, get_preset, instantiate


def hand_proof(name):
    (entry,) = [entry for entry in CORPUS if entry.name == name]
    return entry.hand_proof()


def find_parent(proof, rule):
    for node in proof.root.iter_nodes():
        if node.children and node.children[0].justification.rule is rule:
            return node
    raise LookupError(rule)


class HandProofTests(SimpleTestCase):
    """Test cases for the hand-built derivations."""

    def test_hand_proofs_replay(self):
        """Test that every hand proof replays under its own logic."""
        for entry in CORPUS:
            if entry.expect != EXPECT_CLOSED:
                continue
            with self.subTest(entry=entry.name):
                report = replay(entry.hand_proof(), get_preset(entry.logic))
                self.assertTrue(report, report.reason)

    def test_hand_proof_assumptions(self):
        """Test that the root holds the premises and the negated goal."""
        proof = hand_proof('CM')
        self.assertEqual(len(proof.assumptions), 2)
        self.assertTrue(all(item.index == 1 for item in proof.assumptions))


class ReplayRejectionTests(SimpleTestCase):
    """Test cases for proofs replay must reject."""

    def test_wrong_conclusion(self):
        """Test that a child which does not match the box conclusion is rejected."""
        proof = hand_proof('CM')
        parent = find_parent(proof, RuleId.BOX)
        (child,) = parent.children
        parent.children[0] = replace(child, formulas=(At(2, Atom('q')),))
        report = replay(proof, CK_MINUS)
        self.assertFalse(report)
        self.assertIn('conclusions', report.reason)

    def test_premise_off_path(self):
        """Test that a premise absent from the path is rejected."""
        proof = hand_proof('CM')
        parent = find_parent(proof, RuleId.BOX)
        (child,) = parent.children
        instance = replace(child.justification, premises=(child.justification.premises[0], At(1, Atom('s'))))
        parent.children[0] = replace(child, justification=instance)
        report = replay(proof, CK_MINUS)
        self.assertFalse(report)
        self.assertIn('not on the path', report.reason)

    def test_open_leaf(self):
        """Test that a leaf which does not close is rejected."""
        proof = hand_proof('CM')
        proof.root.children = []
        report = replay(proof, CK_MINUS)
        self.assertFalse(report)
        self.assertEqual(report.line, 1)
        self.assertEqual(report.reason, 'leaf does not close')

    def test_rule_outside_preset(self):
        """Test that a VC proof does not replay in Ck."""
        report = replay(hand_proof('S1'), CK_MINUS)
        self.assertFalse(report)
        self.assertIn('is not in Ck', report.reason)

    def test_reused_fresh_index(self):
        """Test that a generated index must be new on the branch."""
        negated = At(1, Not(Nec(Atom('p'), Atom('q'))))
        step = instantiate('nbox', [negated], fresh=2)
        leaf = ProofNode(step.conclusions[0], step)
        proof = Proof('Ck', ProofNode((negated, At(2, Atom('q'))), None, [leaf]))
        report = replay(proof, CK_MINUS)
        self.assertFalse(report)
        self.assertEqual(report.line, 1)

    def test_root_must_not_be_justified(self):
        """Test that the root carries no rule."""
        proof = hand_proof('CN')
        proof.root.justification = proof.root.children[0].justification
        report = replay(proof)
        self.assertFalse(report)
        self.assertEqual(report.line, 1)
