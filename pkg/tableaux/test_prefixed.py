from django.test import SimpleTestCase

from formulas.syntax import BOTTOM, NOT_TOP, TOP, Atom, Nec, Not

from .prefixed import (
    At,
    Branch,
    ClosureWitness,
    PrefixedSyntaxError,
    Rel,
    add,
    closure_witness,
    fresh_index,
    parse_prefixed,
    shift,
)

p, q = Atom('p'), Atom('q')


class BranchTests(SimpleTestCase):
    """Test cases for persistent branches."""

    def test_add_relation_bumps_fresh_index(self):
        """Test that r(1,2): p makes 3 the next fresh index."""
        branch = add(Branch(), Rel(1, 2, p))
        self.assertEqual(fresh_index(branch), 3)
        self.assertIn(Rel(1, 2, p), branch)

    def test_add_is_persistent(self):
        """Test that adding leaves the original branch untouched."""
        branch = Branch.from_items([At(1, p)])
        extended = branch.add(At(1, q))
        self.assertEqual(len(branch), 1)
        self.assertEqual(extended.items, (At(1, p), At(1, q)))

    def test_add_existing_item_is_identity(self):
        """Test that re-adding a member returns the same branch."""
        branch = Branch.from_items([At(1, p)])
        self.assertIs(branch.add(At(1, p)), branch)

    def test_fresh_index_of_root_branch(self):
        """Test that a branch at index 1 offers index 2."""
        self.assertEqual(Branch.from_items([At(1, p)]).fresh_index, 2)

    def test_draw_index_advances(self):
        """Test that drawn indices are never reused."""
        branch = Branch.from_items([At(1, p)])
        first, branch = branch.draw_index()
        second, branch = branch.draw_index()
        self.assertEqual((first, second), (2, 3))

    def test_views(self):
        """Test the per-index and per-source lookups."""
        branch = Branch.from_items([At(1, p), Rel(1, 2, q), At(2, q), Rel(2, 3, p)])
        self.assertEqual(branch.indices, (1, 2, 3))
        self.assertEqual(branch.formulas_at(2), (At(2, q),))
        self.assertEqual(branch.relations_from(1), (Rel(1, 2, q),))
        self.assertTrue(branch.has_relation(2, p))
        self.assertFalse(branch.has_relation(1, p))

    def test_shifted(self):
        """Test that shifting raises every index."""
        branch = Branch.from_items([At(1, p), Rel(1, 2, q)]).shifted(3)
        self.assertEqual(branch.items, (At(4, p), Rel(4, 5, q)))
        self.assertEqual(shift(At(1, p), 2), At(3, p))


class ClosureTests(SimpleTestCase):
    """Test cases for branch closure."""

    def test_contradictory_pair(self):
        """Test that 1: p and 1: ~p close at 1."""
        witness = closure_witness(Branch.from_items([At(1, p), At(1, Not(p))]))
        self.assertEqual(witness, ClosureWitness(1, p, (At(1, p), At(1, Not(p)))))

    def test_pair_found_in_either_order(self):
        """Test closure when the negation comes first."""
        witness = closure_witness(Branch.from_items([At(2, Not(q)), At(1, p), At(2, q)]))
        self.assertEqual(witness.index, 2)
        self.assertEqual(witness.premises, (At(2, q), At(2, Not(q))))

    def test_bottom_and_negated_top(self):
        """Test the single-formula closures."""
        self.assertEqual(closure_witness(Branch.from_items([At(1, BOTTOM)])).formula, BOTTOM)
        self.assertEqual(closure_witness(Branch.from_items([At(3, NOT_TOP)])).formula, TOP)

    def test_different_indices_do_not_close(self):
        """Test that 1: p and 2: ~p is open."""
        self.assertIsNone(closure_witness(Branch.from_items([At(1, p), At(2, Not(p))])))

    def test_relations_never_close(self):
        """Test that access facts with a false formula do not close."""
        self.assertIsNone(closure_witness(Branch.from_items([Rel(1, 2, BOTTOM)])))

    def test_witness_from_premises(self):
        """Test rebuilding witnesses from their premises."""
        self.assertEqual(ClosureWitness.from_premises([At(1, NOT_TOP)]).formula, TOP)
        self.assertEqual(ClosureWitness.from_premises([At(1, p), At(1, Not(p))]).formula, p)
        with self.assertRaises(ValueError):
            ClosureWitness.from_premises([At(1, p), At(2, Not(p))])


class PrefixedSyntaxTests(SimpleTestCase):
    """Test cases for the text form of prefixed formulas."""

    def test_parse_assertion(self):
        """Test parsing i: A."""
        self.assertEqual(parse_prefixed('1: [p]q'), At(1, Nec(p, q)))
        self.assertEqual(parse_prefixed('2: ~p'), At(2, Not(p)))

    def test_parse_relation(self):
        """Test parsing r(i,j): A."""
        self.assertEqual(parse_prefixed('r(1, 2): p'), Rel(1, 2, p))

    def test_text_round_trip(self):
        """Test that str() output parses back."""
        for item in (At(1, Not(p)), Rel(3, 4, TOP)):
            self.assertEqual(parse_prefixed(str(item)), item)

    def test_rejects_malformed(self):
        """Test malformed prefixes and formulas."""
        for text in ('p', 'r(1): p', '1: p &', '0: p'):
            with self.assertRaises(PrefixedSyntaxError):
                parse_prefixed(text)
