"""Hypothesis strategies for formulas, shared by the suites of every app."""
from hypothesis import strategies as st

from .syntax import BOTTOM, TOP, And, Atom, Imp, Nec, Not, Or, Poss

ATOM_NAMES = ('p', 'q', 'r')


def atoms(names=ATOM_NAMES):
    return st.sampled_from([Atom(name) for name in names])


def formulas(max_depth=6, names=ATOM_NAMES, conditionals=True, constants=True):
    """
    Formulas of bounded depth.

    Args:
        max_depth: Maximal nesting of connectives
        names: Atom names to draw from
        conditionals: Whether [A]B and <A>B may occur
        constants: Whether _|_ and true may occur
    """
    base = atoms(names)
    if constants:
        base = st.one_of(base, st.just(BOTTOM), st.just(TOP))
    strategy = base
    for _ in range(max_depth):
        children = strategy
        options = [
            children.map(Not),
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Imp, children, children),
        ]
        if conditionals:
            options += [st.builds(Nec, children, children), st.builds(Poss, children, children)]
        strategy = st.one_of(base, *options)
    return strategy


def propositional_formulas(max_depth=4, names=ATOM_NAMES):
    return formulas(max_depth=max_depth, names=names, conditionals=False)
