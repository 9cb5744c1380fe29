from jinja2 import Environment, PackageLoader, StrictUndefined


def _number(value: float | None) -> str:
    if value is None:
        return "-"
    return f"{value:.12g}"


def _labels(members) -> str:
    return "{" + ",".join(members) + "}"


templates = Environment(
    loader=PackageLoader("fusionkit", "templates"),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    autoescape=False,
)
templates.filters["num"] = _number
templates.filters["labels"] = _labels
templates.globals["zip"] = zip


def render(name: str, **context) -> str:
    return templates.get_template(name).render(**context)
