from pathlib import Path

from ..models import FusionRing

RING_KEYWORDS = ("ring", "rank", "labels", "unit", "dual", "grade", "nz", "end")


class ParseError(ValueError):
    def __init__(self, source: str, line_no: int, message: str):
        super().__init__(f"{source}:{line_no}: {message}")
        self.source = source
        self.line_no = line_no


def iter_records(text: str, source: str):
    """Yield (line_no, keyword, args) for each non-blank line, comments stripped."""
    ended = False
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise ParseError(source, line_no, "content after end")
        keyword, _, rest = line.partition(" ")
        if keyword == "end":
            ended = True
        yield line_no, keyword, rest.strip()
    if not ended:
        raise ParseError(source, 0, "missing end")


def parse_ints(rest: str, *, source: str, line_no: int, count: int | None = None) -> list[int]:
    try:
        values = [int(token) for token in rest.split()]
    except ValueError as exc:
        raise ParseError(source, line_no, "expected integers") from exc
    if count is not None and len(values) != count:
        raise ParseError(source, line_no, f"expected {count} integers, got {len(values)}")
    return values


def _check_index(value: int, rank: int, *, source: str, line_no: int) -> int:
    if not 0 <= value < rank:
        raise ParseError(source, line_no, f"index {value} out of range for rank {rank}")
    return value


def parse_ring_text(text: str, source: str = "<string>") -> FusionRing:
    name: str | None = None
    rank: int | None = None
    labels: tuple[str, ...] | None = None
    dual: tuple[int, ...] | None = None
    grades: dict[int, str] = {}
    constants: dict[tuple[int, int, int], int] = {}

    for line_no, keyword, rest in iter_records(text, source):
        if keyword not in RING_KEYWORDS:
            raise ParseError(source, line_no, f"unknown keyword {keyword!r}")
        if keyword == "end":
            continue
        if name is None and keyword != "ring":
            raise ParseError(source, line_no, "file must start with ring")
        if keyword == "ring":
            if name is not None:
                raise ParseError(source, line_no, "duplicate ring line")
            if not rest:
                raise ParseError(source, line_no, "ring name required")
            name = rest
        elif keyword == "rank":
            (rank,) = parse_ints(rest, source=source, line_no=line_no, count=1)
            if rank < 1:
                raise ParseError(source, line_no, "rank must be positive")
        elif rank is None:
            raise ParseError(source, line_no, "rank must precede " + keyword)
        elif keyword == "labels":
            tokens = tuple(rest.split())
            if len(tokens) != rank:
                raise ParseError(source, line_no, f"expected {rank} labels")
            if len(set(tokens)) != rank:
                raise ParseError(source, line_no, "labels must be distinct")
            labels = tokens
        elif keyword == "unit":
            (unit,) = parse_ints(rest, source=source, line_no=line_no, count=1)
            if unit != 0:
                raise ParseError(source, line_no, "unit must be basis index 0")
        elif keyword == "dual":
            values = parse_ints(rest, source=source, line_no=line_no, count=rank)
            if sorted(values) != list(range(rank)):
                raise ParseError(source, line_no, "dual must be a permutation")
            dual = tuple(values)
        elif keyword == "grade":
            index_text, _, grade = rest.partition(" ")
            (index,) = parse_ints(index_text, source=source, line_no=line_no, count=1)
            _check_index(index, rank, source=source, line_no=line_no)
            if not grade.strip():
                raise ParseError(source, line_no, "grade label required")
            if index in grades:
                raise ParseError(source, line_no, f"duplicate grade for {index}")
            grades[index] = grade.strip()
        elif keyword == "nz":
            i, j, k, value = parse_ints(rest, source=source, line_no=line_no, count=4)
            for index in (i, j, k):
                _check_index(index, rank, source=source, line_no=line_no)
            if value <= 0:
                raise ParseError(source, line_no, "multiplicity must be positive")
            if (i, j, k) in constants:
                raise ParseError(source, line_no, f"duplicate nz {i} {j} {k}")
            constants[(i, j, k)] = value

    if name is None or rank is None:
        raise ParseError(source, 0, "ring and rank are required")
    if labels is None:
        raise ParseError(source, 0, "labels line required")
    if dual is None:
        raise ParseError(source, 0, "dual line required")
    if grades and len(grades) != rank:
        raise ParseError(source, 0, "grade lines must cover every basis index")

    return FusionRing(
        name=name,
        labels=labels,
        dual=dual,
        constants=constants,
        grades=tuple(grades[i] for i in range(rank)) if grades else None,
    )


def read_fixture_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(str(path), 0, "not valid utf-8") from exc


def load_ring_file(path: Path | str) -> FusionRing:
    path = Path(path)
    return parse_ring_text(read_fixture_text(path), source=str(path))


def format_ring(ring: FusionRing) -> str:
    lines = [
        f"ring {ring.name}",
        f"rank {ring.rank}",
        "labels " + " ".join(ring.labels),
        "dual " + " ".join(str(d) for d in ring.dual),
    ]
    if ring.grades is not None:
        lines.extend(f"grade {i} {g}" for i, g in enumerate(ring.grades))
    lines.extend(
        f"nz {i} {j} {k} {value}" for (i, j, k), value in sorted(ring.constants.items())
    )
    lines.append("end")
    return "\n".join(lines) + "\n"
