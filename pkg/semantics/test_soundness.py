from itertools import product

from django.test import SimpleTestCase
from hypothesis import HealthCheck, assume, given, settings as hypothesis_settings, target
from hypothesis import strategies as st

from formulas.syntax import Not
from tableaux.prefixed import At, Branch, Rel
from tableaux.rulesets import CK_MINUS, VC, VCS, RuleId, RuleRegistry

from .conditions import RULE_CONDITIONS, check_conditions, conditions_for
from .priest import evaluate, satisfies_prefixed
from .strategies import KEYS, WORLDS, formulas_over_keys, models

SOUNDNESS_SETTINGS = hypothesis_settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)

RULE_SETTINGS = hypothesis_settings(SOUNDNESS_SETTINGS, max_examples=1000)

# Smallest preset holding each rule; it supplies the cut and ea policies.
HOME_PRESETS = (CK_MINUS, VC, VCS, VC.with_ea_prime())


def true_branch(model, formulas):
    """Every formula or its negation at every world, with all access facts."""
    items = [
        At(world, formula if evaluate(model, world, formula) else Not(formula))
        for world, formula in product(sorted(model.worlds), formulas)
    ]
    items += [Rel(source, target, key) for key, pairs in model.access.items() for source, target in sorted(pairs)]
    return Branch.from_items(items)


class SoundnessTestCase(SimpleTestCase):

    def assertSound(self, model, branch, preset, rules=None):
        """Check that some alternative of every instance holds; returns the number of instances."""
        identity = {world: world for world in model.worlds}
        self.assertTrue(satisfies_prefixed(model, identity, branch))
        count = 0
        for rule in rules or preset.ordered_rules:
            for instance in rule.instances(branch, preset):
                count += 1
                assignments = (
                    [{**identity, instance.fresh: world} for world in WORLDS]
                    if instance.fresh is not None else [identity]
                )
                self.assertTrue(
                    any(
                        satisfies_prefixed(model, assignment, alternative)
                        for alternative in instance.conclusions
                        for assignment in assignments
                    ),
                    str(instance),
                )
        return count


class RuleSoundnessTests(SoundnessTestCase):
    """Every rule keeps a branch true in a model of its condition satisfiable."""

    def assertSoundFor(self, preset, model, formulas):
        assume(check_conditions(model, KEYS, conditions_for(preset)).all_satisfied)
        self.assertSound(model, true_branch(model, formulas), preset)

    @SOUNDNESS_SETTINGS
    @given(models(), st.lists(formulas_over_keys(), min_size=1, max_size=3))
    def test_weakest_logic_rules(self, model, formulas):
        """Test the classical and conditional rules on arbitrary models."""
        self.assertSoundFor(CK_MINUS, model, formulas)

    @SOUNDNESS_SETTINGS
    @given(models(conditions=conditions_for(VC)), st.lists(formulas_over_keys(), min_size=1, max_size=3))
    def test_system_v_rules(self, model, formulas):
        """Test R1-R6, ea and cut on models meeting conditions 1-6 and congruence."""
        self.assertSoundFor(VC, model, formulas)

    @SOUNDNESS_SETTINGS
    @given(models(conditions=conditions_for(VCS)), st.lists(formulas_over_keys(), min_size=1, max_size=3))
    def test_excluded_middle_rule(self, model, formulas):
        """Test the VCS rules, cem included, on models meeting every condition."""
        self.assertSoundFor(VCS, model, formulas)

    @SOUNDNESS_SETTINGS
    @given(models(conditions=conditions_for(VC)), st.lists(formulas_over_keys(), min_size=1, max_size=3))
    def test_combined_ea_rule(self, model, formulas):
        """Test the combined ea/necessity rule."""
        self.assertSoundFor(VC.with_ea_prime(), model, formulas)


def single_rule_test(rule_id):
    """
    Build a test of one rule alone on a thousand models meeting only that rule's condition.

    Hypothesis is steered towards branches with many instances of the rule.
    """
    preset = next(preset for preset in HOME_PRESETS if rule_id in preset.rules)
    conditions = (RULE_CONDITIONS[rule_id],) if rule_id in RULE_CONDITIONS else ()
    rule = RuleRegistry.create_rule(rule_id)

    def test(self, model, formulas):
        assume(check_conditions(model, KEYS, conditions).all_satisfied)
        count = self.assertSound(model, true_branch(model, formulas), preset, [rule])
        target(float(count), label=f'{rule_id.value} instances')

    # Distinct names keep the example database apart per rule
    test.__name__ = test.__qualname__ = f'test_single_rule_{rule_id.value}'
    test.__doc__ = f'Test the {rule.label} rule on its own.'
    strategies = (models(conditions=conditions), st.lists(formulas_over_keys(), min_size=1, max_size=3))
    return RULE_SETTINGS(given(*strategies)(test))


class SingleRuleSoundnessTests(SoundnessTestCase):
    """Each rule checked on its own against models of its own condition."""

    test_conj = single_rule_test(RuleId.CONJ)
    test_nconj = single_rule_test(RuleId.NCONJ)
    test_disj = single_rule_test(RuleId.DISJ)
    test_ndisj = single_rule_test(RuleId.NDISJ)
    test_imp = single_rule_test(RuleId.IMP)
    test_nimp = single_rule_test(RuleId.NIMP)
    test_dneg = single_rule_test(RuleId.DNEG)
    test_box = single_rule_test(RuleId.BOX)
    test_nbox = single_rule_test(RuleId.NBOX)
    test_diamond = single_rule_test(RuleId.DIAMOND)
    test_ndiamond = single_rule_test(RuleId.NDIAMOND)
    test_reflexivity = single_rule_test(RuleId.R1)
    test_projection = single_rule_test(RuleId.R2)
    test_centring = single_rule_test(RuleId.R3)
    test_weak_centring = single_rule_test(RuleId.R4)
    test_conjunction_access = single_rule_test(RuleId.R5)
    test_conjunction_restriction = single_rule_test(RuleId.R6)
    test_excluded_middle = single_rule_test(RuleId.CEM)
    test_equivalent_antecedents = single_rule_test(RuleId.EA)
    test_equivalent_antecedents_box = single_rule_test(RuleId.EA_PRIME)
    test_cut = single_rule_test(RuleId.CUT)

    def test_every_rule_has_a_test(self):
        """Test that no rule identifier lacks its own soundness test."""
        tested = {name for name in dir(self) if name.startswith('test_') and name != 'test_every_rule_has_a_test'}
        self.assertEqual(len(tested), len(RuleId))
