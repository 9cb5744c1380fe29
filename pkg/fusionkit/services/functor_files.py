from collections.abc import Mapping
from pathlib import Path

from ..models import FusionRing, RingFunctor
from .ring_files import ParseError, iter_records, parse_ints, read_fixture_text

FUNCTOR_KEYWORDS = ("functor", "source", "target", "subgroup", "m", "end")


def _resolve(rings: Mapping[str, FusionRing], name: str, *, source: str, line_no: int) -> FusionRing:
    ring = rings.get(name)
    if ring is None:
        raise ParseError(source, line_no, f"unknown ring {name!r}")
    return ring


def parse_functor_text(
    text: str, rings: Mapping[str, FusionRing], source: str = "<string>"
) -> RingFunctor:
    name: str | None = None
    src: FusionRing | None = None
    tgt: FusionRing | None = None
    subgroup: tuple[str, tuple[int, ...]] | None = None
    entries: dict[tuple[int, int], int] = {}

    for line_no, keyword, rest in iter_records(text, source):
        if keyword not in FUNCTOR_KEYWORDS:
            raise ParseError(source, line_no, f"unknown keyword {keyword!r}")
        if keyword == "end":
            continue
        if name is None and keyword != "functor":
            raise ParseError(source, line_no, "file must start with functor")
        if keyword == "functor":
            if name is not None:
                raise ParseError(source, line_no, "duplicate functor line")
            if not rest:
                raise ParseError(source, line_no, "functor name required")
            name = rest
        elif keyword == "source":
            src = _resolve(rings, rest, source=source, line_no=line_no)
        elif keyword == "target":
            tgt = _resolve(rings, rest, source=source, line_no=line_no)
        elif keyword == "subgroup":
            group_name, _, members = rest.partition(" ")
            if not group_name:
                raise ParseError(source, line_no, "subgroup needs a group name")
            subgroup = (group_name, tuple(parse_ints(members, source=source, line_no=line_no)))
        elif keyword == "m":
            if src is None or tgt is None:
                raise ParseError(source, line_no, "source and target must precede m lines")
            i, j, value = parse_ints(rest, source=source, line_no=line_no, count=3)
            if not (0 <= i < src.rank and 0 <= j < tgt.rank):
                raise ParseError(source, line_no, f"entry ({i}, {j}) out of range")
            if value <= 0:
                raise ParseError(source, line_no, "multiplicity must be positive")
            if (i, j) in entries:
                raise ParseError(source, line_no, f"duplicate m {i} {j}")
            entries[(i, j)] = value

    if name is None or src is None or tgt is None:
        raise ParseError(source, 0, "functor, source and target are required")

    matrix = tuple(
        tuple(entries.get((i, j), 0) for j in tgt.basis) for i in src.basis
    )
    return RingFunctor(name=name, source=src, target=tgt, matrix=matrix, subgroup=subgroup)


def load_functor_file(path: Path | str, rings: Mapping[str, FusionRing]) -> RingFunctor:
    path = Path(path)
    return parse_functor_text(read_fixture_text(path), rings, source=str(path))


def format_functor(functor: RingFunctor) -> str:
    lines = [
        f"functor {functor.name}",
        f"source {functor.source.name}",
        f"target {functor.target.name}",
    ]
    if functor.subgroup is not None:
        group_name, members = functor.subgroup
        lines.append(f"subgroup {group_name} " + " ".join(str(m) for m in members))
    for i, row in enumerate(functor.matrix):
        lines.extend(f"m {i} {j} {value}" for j, value in enumerate(row) if value)
    lines.append("end")
    return "\n".join(lines) + "\n"
