"""
Proof search and proof replay.

The search is a depth-first expansion of one tableau: every node applies the
highest-priority pending rule instance of its branch, branching rules give
one child per alternative, and a branch stops when it closes. The first open
saturated branch ends the search, as does a tripped limit.
"""
from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional

from django.conf import settings

from .constants import ASSUMPTION_RULE, LIMIT_DEPTH, LIMIT_INDICES, LIMIT_NODES, ROOT_INDEX
from .prefixed import Branch, ClosureWitness, PrefixedFormula, closure_witness
from .rulesets import LogicPreset, RuleInstance, RuleRegistry, apply, select_instance

logger = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10000
DEFAULT_MAX_INDICES = 64
DEFAULT_MAX_DEPTH = 2000


@dataclass(frozen=True)
class Limits:
    max_nodes: int = DEFAULT_MAX_NODES
    max_indices: int = DEFAULT_MAX_INDICES
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @classmethod
    def from_settings(cls, max_nodes=None, max_indices=None, max_depth=None) -> Limits:
        """Limits from the PROVER_* settings, with explicit values taking precedence."""
        return cls(
            max_nodes=max_nodes if max_nodes is not None else getattr(settings, 'PROVER_MAX_NODES', DEFAULT_MAX_NODES),
            max_indices=max_indices if max_indices is not None else getattr(settings, 'PROVER_MAX_INDICES', DEFAULT_MAX_INDICES),
            max_depth=max_depth if max_depth is not None else getattr(settings, 'PROVER_MAX_DEPTH', DEFAULT_MAX_DEPTH),
        )


@dataclass
class ProofNode:
    """
    A node of a proof tree.

    The justification is the rule instance whose conclusion alternative the
    node adds; siblings share it. The root holds the assumptions and has no
    justification. Leaves of a closed proof carry their closure witness.
    """

    formulas: tuple[PrefixedFormula, ...]
    justification: Optional[RuleInstance] = None
    children: list[ProofNode] = field(default_factory=list)
    closure: Optional[ClosureWitness] = None

    @property
    def rule(self) -> str:
        return self.justification.rule.value if self.justification else ASSUMPTION_RULE

    @property
    def premises(self) -> tuple[PrefixedFormula, ...]:
        return self.justification.premises if self.justification else ()

    @property
    def formula(self):
        return self.justification.formula if self.justification else None

    @property
    def index(self):
        return self.justification.index if self.justification else None

    @property
    def fresh(self):
        return self.justification.fresh if self.justification else None

    def iter_nodes(self) -> Iterator[ProofNode]:
        """Pre-order walk of the subtree."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


@dataclass
class Proof:
    logic: str
    root: ProofNode

    @property
    def assumptions(self) -> tuple[PrefixedFormula, ...]:
        return self.root.formulas

    def node_count(self) -> int:
        return sum(1 for _ in self.root.iter_nodes())

    def leaves(self) -> list[ProofNode]:
        return [node for node in self.root.iter_nodes() if not node.children]


@dataclass
class SearchStats:
    nodes: int = 1
    branches_closed: int = 0
    max_index: int = ROOT_INDEX
    max_depth: int = 0
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class Saturation:
    """Outcome of expanding a tableau."""

    root: ProofNode
    stats: SearchStats
    open_branch: Optional[Branch] = None
    saturated: bool = True
    limit: Optional[str] = None

    @property
    def closed(self) -> bool:
        return self.open_branch is None and self.limit is None


class TableauEngine:
    """Depth-first tableau expansion for one preset and one set of limits."""

    def __init__(self, preset: LogicPreset, limits: Optional[Limits] = None):
        self.preset = preset
        self.limits = limits or Limits.from_settings()

    def saturate(self, branch: Branch) -> Saturation:
        started = time.monotonic()
        root = ProofNode(branch.items)
        stats = SearchStats(max_index=max(branch.indices, default=ROOT_INDEX))
        stack = [(root, branch, 0)]

        def finish(open_branch=None, saturated=True, limit=None) -> Saturation:
            stats.elapsed = time.monotonic() - started
            return Saturation(root, stats, open_branch, saturated, limit)

        while stack:
            node, current, depth = stack.pop()
            stats.max_depth = max(stats.max_depth, depth)

            witness = closure_witness(current)
            if witness is not None:
                node.closure = witness
                stats.branches_closed += 1
                continue

            instance = select_instance(current, self.preset)
            if instance is None:
                logger.info(f"Open saturated branch under {self.preset.name} after {stats.nodes} nodes")
                return finish(open_branch=current)

            limit = self._tripped_limit(instance, depth, stats)
            if limit is not None:
                logger.warning(f"Search under {self.preset.name} stopped by {limit} after {stats.nodes} nodes")
                return finish(open_branch=current, saturated=False, limit=limit)

            children = apply(instance, current)
            node.children = [ProofNode(alternative, instance) for alternative in instance.conclusions]
            stats.nodes += len(children)
            if instance.fresh is not None:
                stats.max_index = max(stats.max_index, instance.fresh)
            logger.debug(f"Applied {instance}")

            for child, child_branch in reversed(list(zip(node.children, children))):
                stack.append((child, child_branch, depth + 1))

        return finish()

    def _tripped_limit(self, instance: RuleInstance, depth: int, stats: SearchStats) -> Optional[str]:
        if stats.nodes + len(instance.conclusions) > self.limits.max_nodes:
            return LIMIT_NODES
        if instance.fresh is not None and instance.fresh > self.limits.max_indices:
            return LIMIT_INDICES
        if depth + 1 > self.limits.max_depth:
            return LIMIT_DEPTH
        return None


def saturate(branch: Branch, preset: LogicPreset, limits: Optional[Limits] = None) -> Saturation:
    return TableauEngine(preset, limits).saturate(branch)


@dataclass(frozen=True)
class ReplayReport:
    valid: bool
    line: Optional[int] = None
    node: Optional[ProofNode] = None
    reason: str = ''

    def __bool__(self) -> bool:
        return self.valid


def replay(proof: Proof, preset: Optional[LogicPreset] = None) -> ReplayReport:
    """
    Check a proof tree rule by rule.

    Every step must cite premises present on its path, use a rule of the
    preset (any rule when no preset is given), respect the freshness and
    index side conditions and add exactly the alternatives the rule
    concludes. Every leaf must close.

    Returns:
        ReplayReport naming the first offending node in pre-order
    """
    def invalid(line, node, reason) -> ReplayReport:
        logger.info(f"Replay rejected line {line}: {reason}")
        return ReplayReport(False, line, node, reason)

    if proof.root.justification is not None:
        return invalid(1, proof.root, 'the root must hold the assumptions')

    line = 0
    stack = [(proof.root, Branch.from_items(proof.root.formulas))]
    while stack:
        node, branch = stack.pop()
        line += 1

        if not node.children:
            if closure_witness(branch) is None:
                return invalid(line, node, 'leaf does not close')
            continue

        instance = node.children[0].justification
        if instance is None or any(child.justification != instance for child in node.children):
            return invalid(line, node, 'children do not share one rule instance')
        if preset is not None and instance.rule not in preset.rules:
            return invalid(line, node, f'rule {instance.rule.value} is not in {preset.name}')

        missing = [item for item in instance.premises if item not in branch]
        if missing:
            return invalid(line, node, f"premise {missing[0]} is not on the path")

        rule = RuleRegistry.create_rule(instance.rule)
        reason = rule.side_condition(instance, branch)
        if reason is not None:
            return invalid(line, node, reason)

        expected = rule.conclude(instance.premises, dict(instance.instantiation), instance.fresh)
        if expected is None:
            return invalid(line, node, f'premises do not fit rule {instance.rule.value}')
        if [frozenset(alternative) for alternative in expected] != [frozenset(child.formulas) for child in node.children]:
            return invalid(line, node, f'children do not match the conclusions of {instance.rule.value}')

        for child in reversed(node.children):
            stack.append((child, branch.extend(child.formulas)))

    return ReplayReport(True)
