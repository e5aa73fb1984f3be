from .constants import ASSUMPTION_RULE
from .engine import Proof, ProofNode
from .prefixed import Branch
from .rulesets import RuleRegistry


def _justification(node: ProofNode, lines: dict) -> str:
    if node.justification is None:
        return ASSUMPTION_RULE
    instance = node.justification
    label = RuleRegistry.create_rule(instance.rule).label
    cited = ','.join(str(lines.get(item, '?')) for item in instance.premises)
    text = f'{label}: {cited}' if cited else label
    if instance.formula is not None:
        text += f' on {instance.formula}'
    if instance.index is not None:
        text += f' at {instance.index}'
    return text


def render_proof(proof: Proof) -> str:
    """
    Render a proof tree one prefixed formula per line.

    Lines are numbered in pre-order; every line cites the rule and the line
    numbers of its premises, children are indented under their parent and
    closed leaves end with the formulas that close them.
    """
    output = []
    count = 0
    stack = [(proof.root, 0, {})]
    while stack:
        node, depth, lines = stack.pop()
        indent = '  ' * depth
        justification = _justification(node, lines)
        for item in node.formulas:
            count += 1
            number = count
            output.append(f'{indent}{number}. {item}  [{justification}]')
            lines.setdefault(item, number)
        if node.closure is not None:
            closing = ', '.join(str(lines.get(item, '?')) for item in node.closure.premises)
            output.append(f'{indent}   x closed by {closing}')
        for child in reversed(node.children):
            stack.append((child, depth + 1, lines if len(node.children) == 1 else dict(lines)))
    return '\n'.join(output)


def render_branch(branch: Branch) -> str:
    return '\n'.join(f'{number}. {item}' for number, item in enumerate(branch.items, start=1))
