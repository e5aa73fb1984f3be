import logging

from formulas.syntax import Atom
from tableaux.prefixed import At, Branch, Rel

from .priest import PriestModel

logger = logging.getLogger(__name__)


def extract_model(branch: Branch) -> tuple[PriestModel, dict[int, int]]:
    """
    Read a model off a branch.

    Worlds are the indices, R_A holds the pairs of the ``r(i,j): A`` facts
    and an atom is true exactly at the indices where it is asserted. The
    assignment maps every index to itself. The branch is expected to be
    open and saturated; otherwise the model need not satisfy it.
    """
    worlds = branch.indices or (1,)
    access: dict = {}
    valuation: dict = {}
    for item in branch.items:
        match item:
            case At(index, Atom(name)):
                valuation.setdefault(name, set()).add(index)
            case Rel(source, target, formula):
                access.setdefault(formula, set()).add((source, target))
    model = PriestModel.build(worlds, access, valuation)
    logger.debug(f"Extracted model with {len(model.worlds)} worlds and {len(model.access)} relations")
    return model, {world: world for world in worlds}
