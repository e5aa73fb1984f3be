"""Hypothesis strategies for small models and the formulas they interpret."""
from hypothesis import strategies as st

from formulas.strategies import atoms
from formulas.syntax import TOP, And, Atom, Imp, Nec, Not, Or, Poss

from .priest import PriestModel

WORLDS = (1, 2, 3)
ATOM_NAMES = ('p', 'q')
KEYS = (Atom('p'), Atom('q'), And(Atom('p'), Atom('q')), And(Atom('q'), Atom('p')), TOP)

REPAIR_ROUNDS = 5


def _successors(pairs, world):
    return {target for source, target in pairs if source == world}


def _repair_round(access, truth, worlds, conditions):
    """Apply every requested repair once; the keys' truth sets do not depend on access."""
    keys = list(access)
    if '1' in conditions:
        for key in keys:
            access[key] = {pair for pair in access[key] if pair[1] in truth[key]}
    if 'congruence' in conditions:
        for first in keys:
            for second in keys:
                if first != second and truth[first] == truth[second]:
                    access[first] = access[second] = access[first] | access[second]
    for conjoined in keys:
        if not isinstance(conjoined, And) or conjoined.left not in access or conjoined.right not in truth:
            continue
        left, right = conjoined.left, conjoined.right
        for world in worlds:
            shared = _successors(access[left], world) & truth[right]
            if not shared:
                continue
            current = _successors(access[conjoined], world)
            if '5' in conditions:
                current |= shared
            if '6' in conditions:
                current &= shared
            access[conjoined] = {pair for pair in access[conjoined] if pair[0] != world}
            access[conjoined] |= {(world, target) for target in current}
    if '2' in conditions:
        for first in keys:
            for second in keys:
                for world in worlds:
                    shared = _successors(access[first], world) & truth[second]
                    if shared and not _successors(access[second], world):
                        access[second] = access[second] | {(world, min(shared))}
    if '3' in conditions:
        access[TOP] = {(x, y) for x, y in access.get(TOP, ()) if x == y}
    if 'cem' in conditions:
        for key in keys:
            chosen = {}
            for x, y in sorted(access[key]):
                chosen[x] = x if key == TOP and '4' in conditions else chosen.get(x, y)
            access[key] = set(chosen.items())
    if '4' in conditions:
        access[TOP] = access.get(TOP, set()) | {(x, x) for x in worlds}


def repair(model: PriestModel, keys, conditions) -> PriestModel:
    """
    Move the relations of a model towards the given conditions.

    Repairs run for a few rounds and can still leave a condition violated
    when they interfere; callers check the result.
    """
    access = {key: set(model.access.get(key, ())) for key in keys}
    truth = {key: model.truth_set(key) for key in keys}
    for _ in range(REPAIR_ROUNDS):
        before = {key: frozenset(pairs) for key, pairs in access.items()}
        _repair_round(access, truth, sorted(model.worlds), set(conditions))
        if before == {key: frozenset(pairs) for key, pairs in access.items()}:
            break
    return PriestModel.build(model.worlds, access, model.valuation)


@st.composite
def models(draw, worlds=WORLDS, names=ATOM_NAMES, keys=KEYS, conditions=()):
    """Models over fixed worlds with relations for the given keys, repaired towards the conditions."""
    subsets = st.frozensets(st.sampled_from(worlds))
    pairs = st.frozensets(st.tuples(st.sampled_from(worlds), st.sampled_from(worlds)))
    valuation = {name: draw(subsets) for name in names}
    access = {key: draw(pairs) for key in keys}
    return repair(PriestModel.build(worlds, access, valuation), keys, tuple(conditions))


def formulas_over_keys(max_depth=2, keys=KEYS, names=ATOM_NAMES):
    """Formulas whose conditionals use the antecedents models interpret."""
    strategy = atoms(names)
    for _ in range(max_depth):
        children = strategy
        strategy = st.one_of(
            strategy,
            children.map(Not),
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Imp, children, children),
            st.builds(Nec, st.sampled_from(keys), children),
            st.builds(Poss, st.sampled_from(keys), children),
        )
    return strategy
