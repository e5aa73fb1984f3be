from jinja2 import Template as JinjaTemplate

MODEL_TEMPLATE = JinjaTemplate(
    "worlds: {{ worlds | join(', ') }}\n"
    "{% for name, members in valuation %}"
    "  {{ name }} true at {{ members | join(', ') }}\n"
    "{% endfor %}"
    "{% for formula, pairs in access %}"
    "  R[{{ formula }}]: {% for source, target in pairs %}{{ source }}->{{ target }}{% if not loop.last %}, {% endif %}{% endfor %}\n"
    "{% endfor %}"
)

REPORT_TEMPLATE = JinjaTemplate(
    "{% for result in results %}"
    "condition {{ result.condition }}: {% if result.satisfied %}holds{% else %}fails{% endif %}\n"
    "{% if result.counterexample %}  {{ result.counterexample }}\n{% endif %}"
    "{% endfor %}"
)


def render_model(model) -> str:
    """Render a model as indented text with one line per atom and relation."""
    access = sorted((str(formula), sorted(pairs)) for formula, pairs in model.access.items())
    valuation = [(name, sorted(members)) for name, members in sorted(model.valuation.items())]
    return MODEL_TEMPLATE.render(worlds=model.sorted_worlds(), valuation=valuation, access=access)


def render_condition_report(report) -> str:
    return REPORT_TEMPLATE.render(results=report.results)
