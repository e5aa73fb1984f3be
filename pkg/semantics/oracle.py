"""
Brute-force validity over small models.

Every model up to a number of worlds is enumerated, interpreting only the
atoms and antecedents of the formula (plus true when centring conditions
are asked for). The search stops at the first world falsifying the formula.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from django.conf import settings

from formulas.syntax import TOP, Formula
from formulas.utils import antecedents, atoms

from .conditions import check_conditions
from .priest import PriestModel, World, evaluate

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_MAX_MODELS = 200000


class OracleBudgetExceeded(RuntimeError):
    """Raised when the enumeration would exceed the model budget."""


@dataclass(frozen=True)
class OracleResult:
    valid: bool
    max_worlds: int
    models_checked: int
    countermodel: Optional[PriestModel] = None
    world: Optional[World] = None

    def __bool__(self) -> bool:
        return self.valid


def _subsets(items: list) -> list[frozenset]:
    return [
        frozenset(item for bit, item in enumerate(items) if mask >> bit & 1)
        for mask in range(1 << len(items))
    ]


def count_models(size: int, atom_count: int, key_count: int) -> int:
    return 2 ** (size * atom_count) * 2 ** (size * size * key_count)


def brute_force_valid(
    formula: Formula,
    max_worlds: int = 3,
    conditions: Iterable[str] = (),
    vocab: Optional[Iterable[Formula]] = None,
    budget: Optional[int] = None,
) -> OracleResult:
    """
    Decide validity of a formula over all models with at most max_worlds worlds.

    Args:
        formula: The formula to test
        max_worlds: Largest model size enumerated
        conditions: Frame conditions a model must meet to count
        vocab: Formulas the conditions quantify over (default: the
            interpreted antecedents)
        budget: Maximal number of models (default ORACLE_MAX_MODELS)

    Returns:
        OracleResult, invalid with the first countermodel found

    Raises:
        OracleBudgetExceeded: If the next model size would pass the budget
    """
    conditions = tuple(conditions)
    budget = budget or getattr(settings, 'ORACLE_MAX_MODELS', DEFAULT_ORACLE_MAX_MODELS)
    names = [atom.name for atom in atoms(formula)]
    keys = list(antecedents(formula))
    if {'3', '4'} & set(conditions) and TOP not in keys:
        keys.append(TOP)
    vocab = tuple(vocab) if vocab is not None else tuple(keys)

    checked = 0
    for size in range(1, max_worlds + 1):
        needed = count_models(size, len(names), len(keys))
        if checked + needed > budget:
            raise OracleBudgetExceeded(
                f"{size}-world models need {needed} more candidates; budget is {budget}"
            )
        worlds = list(range(size))
        relations = _subsets([(x, y) for x in worlds for y in worlds])
        extensions = _subsets(worlds)
        for chosen in product(relations, repeat=len(keys)):
            access = dict(zip(keys, chosen))
            for truth in product(extensions, repeat=len(names)):
                checked += 1
                model = PriestModel.build(worlds, access, dict(zip(names, truth)))
                if conditions and not check_conditions(model, vocab, conditions).all_satisfied:
                    continue
                for world in worlds:
                    if not evaluate(model, world, formula):
                        logger.info(f"Countermodel for {formula} with {size} worlds after {checked} models")
                        return OracleResult(False, max_worlds, checked, model, world)
    return OracleResult(True, max_worlds, checked)
