import json

from django.test import SimpleTestCase

from formulas.parser import parse

from .corpus import CORPUS
from .engine import Limits, replay
from .rulesets import CK_MINUS, get_preset
from .serializers import ProofSerializer, VerdictSerializer
from .services import prove
from .utils import render_proof


class ProofFormatTests(SimpleTestCase):
    """Test cases for the proof exchange format."""

    def reload(self, proof):
        serializer = ProofSerializer(data=json.loads(json.dumps(ProofSerializer(proof).data)))
        self.assertTrue(serializer.is_valid(), serializer.errors)
        return serializer.save()

    def test_hand_proofs_reload_and_replay(self):
        """Test that every hand proof survives JSON and still replays."""
        for entry in CORPUS:
            if entry.hand_proof is None:
                continue
            with self.subTest(entry=entry.name):
                proof = self.reload(entry.hand_proof())
                self.assertEqual(proof.logic, entry.hand_proof().logic)
                self.assertTrue(replay(proof, get_preset(entry.logic)))

    def test_node_fields(self):
        """Test the fields written for the root and its first step."""
        data = ProofSerializer(CORPUS[0].hand_proof()).data
        self.assertEqual(data['root']['rule'], 'Ass')
        self.assertEqual(data['assumptions'], ['1: [p](q & r)', '1: ~([p]q & [p]r)'])
        step = data['root']['children'][0]
        self.assertEqual(step['rule'], 'nconj')
        self.assertEqual(step['premises'], ['1: ~([p]q & [p]r)'])

    def test_tampered_conclusion_is_caught_by_replay(self):
        """Test that an edited child loads but no longer replays."""
        data = json.loads(json.dumps(ProofSerializer(CORPUS[0].hand_proof()).data))
        data['root']['children'][0]['formulas'] = ['1: ~[p]r']
        serializer = ProofSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertFalse(replay(serializer.save(), CK_MINUS))

    def test_rejects_unknown_rule_and_bad_items(self):
        """Test field validation."""
        data = json.loads(json.dumps(ProofSerializer(CORPUS[0].hand_proof()).data))
        data['root']['children'][0]['rule'] = 'modus'
        self.assertFalse(ProofSerializer(data=data).is_valid())
        data = {'logic': 'Ck', 'root': {'formulas': ['one: p'], 'rule': 'Ass'}}
        self.assertFalse(ProofSerializer(data=data).is_valid())


class VerdictFormatTests(SimpleTestCase):
    """Test cases for the JSON form of verdicts."""

    def test_closed(self):
        """Test that a closed verdict carries its proof."""
        data = VerdictSerializer(prove([parse('[p](q & r)')], parse('[p]q & [p]r'), CK_MINUS, Limits())).data
        self.assertEqual(data['status'], 'closed')
        self.assertEqual(data['logic'], 'Ck')
        self.assertIn('root', data['proof'])
        self.assertGreater(data['stats']['nodes'], 1)

    def test_open(self):
        """Test that an open verdict carries its countermodel."""
        data = VerdictSerializer(prove([], parse('[p]p'), CK_MINUS, Limits())).data
        self.assertEqual(data['status'], 'open')
        self.assertTrue(data['certified'])
        self.assertEqual(data['violations'], [])
        self.assertEqual(data['countermodel']['access'], [['p', 1, 2]])

    def test_resource_out(self):
        """Test that a resource-out verdict names the limit."""
        data = VerdictSerializer(prove([], parse('[p]p'), CK_MINUS, Limits(max_indices=1))).data
        self.assertEqual(data['status'], 'resource_out')
        self.assertEqual(data['limit'], 'max_indices')


class RenderProofTests(SimpleTestCase):
    """Test cases for the text rendering of proofs."""

    def test_render(self):
        """Test numbering, justifications and closure lines."""
        verdict = prove([parse('[p](q & r)')], parse('[p]q & [p]r'), CK_MINUS, Limits())
        lines = render_proof(verdict.proof).splitlines()
        self.assertEqual(lines[0], '1. 1: [p](q & r)  [Ass]')
        self.assertEqual(lines[2], '  3. 1: ~[p]q  [¬∧: 2]')
        self.assertTrue(any(line.strip().startswith('x closed by') for line in lines))
