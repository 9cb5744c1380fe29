from pathlib import Path

from ..models import FiniteGroup
from .ring_files import ParseError, iter_records, parse_ints, read_fixture_text

GROUP_KEYWORDS = ("group", "order", "labels", "mul", "end")


def parse_group_text(text: str, source: str = "<string>") -> FiniteGroup:
    name: str | None = None
    order: int | None = None
    labels: tuple[str, ...] | None = None
    values: list[int] = []

    for line_no, keyword, rest in iter_records(text, source):
        if keyword not in GROUP_KEYWORDS:
            raise ParseError(source, line_no, f"unknown keyword {keyword!r}")
        if keyword == "end":
            continue
        if name is None and keyword != "group":
            raise ParseError(source, line_no, "file must start with group")
        if keyword == "group":
            if name is not None:
                raise ParseError(source, line_no, "duplicate group line")
            if not rest:
                raise ParseError(source, line_no, "group name required")
            name = rest
        elif keyword == "order":
            (order,) = parse_ints(rest, source=source, line_no=line_no, count=1)
            if order < 1:
                raise ParseError(source, line_no, "order must be positive")
        elif order is None:
            raise ParseError(source, line_no, "order must precede " + keyword)
        elif keyword == "labels":
            tokens = tuple(rest.split())
            if len(tokens) != order or len(set(tokens)) != order:
                raise ParseError(source, line_no, f"expected {order} distinct labels")
            labels = tokens
        else:
            row = parse_ints(rest, source=source, line_no=line_no)
            if any(not 0 <= v < order for v in row):
                raise ParseError(source, line_no, "table entry out of range")
            values.extend(row)

    if name is None or order is None:
        raise ParseError(source, 0, "group and order are required")
    if len(values) != order * order:
        raise ParseError(source, 0, f"mul needs {order * order} entries, got {len(values)}")

    table = tuple(tuple(values[r * order : (r + 1) * order]) for r in range(order))
    return FiniteGroup(name=name, table=table, labels=labels)


def load_group_file(path: Path | str) -> FiniteGroup:
    path = Path(path)
    return parse_group_text(read_fixture_text(path), source=str(path))
