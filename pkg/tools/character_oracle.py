"""Regenerate the Rep(G) ring and restriction functor fixtures from character tables.

    python -m tools.character_oracle --check fixtures
    python -m tools.character_oracle --write fixtures

Structure constants come from inner products of characters,
N_ab^k = (1/|G|) sum_c |c| chi_a(c) chi_b(c) conj(chi_k(c)), and restriction
multiplicities from inner products over the subgroup through a class fusion map.
Nothing here runs at library time; the tables are data.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from fusionkit.models import FusionRing, RingFunctor
from fusionkit.services.functor_files import format_functor
from fusionkit.services.ring_files import format_ring

logger = logging.getLogger(__name__)

OMEGA = np.exp(2j * np.pi / 3)


@dataclass(frozen=True)
class CharacterTable:
    group: str
    classes_note: str
    sizes: tuple[int, ...]
    labels: tuple[str, ...]
    values: tuple[tuple[complex, ...], ...]

    @property
    def order(self) -> int:
        return sum(self.sizes)


@dataclass(frozen=True)
class Restriction:
    filename: str
    name: str
    group: str
    subgroup_table: str
    description: str
    fusion: tuple[int, ...]
    members: tuple[int, ...]


def _cyclic(n: int) -> CharacterTable:
    values = tuple(
        tuple(complex(np.exp(2j * np.pi * k * g / n)) for g in range(n)) for k in range(n)
    )
    return CharacterTable(
        group=f"Z{n}",
        classes_note="cyclic characters",
        sizes=(1,) * n,
        labels=("1",) + tuple(f"chi{k}" for k in range(1, n)),
        values=values,
    )


def _klein_extension(group: str, classes_note: str, labels: tuple[str, ...]) -> CharacterTable:
    # D4 and Q8 share a character table.
    return CharacterTable(
        group=group,
        classes_note=classes_note,
        sizes=(1, 1, 2, 2, 2),
        labels=labels,
        values=(
            (1, 1, 1, 1, 1),
            (1, 1, 1, -1, -1),
            (1, 1, -1, 1, -1),
            (1, 1, -1, -1, 1),
            (2, -2, 0, 0, 0),
        ),
    )


TABLES: dict[str, CharacterTable] = {
    "S3": CharacterTable(
        group="S3",
        classes_note="classes e, (12), (123)",
        sizes=(1, 3, 2),
        labels=("1", "sgn", "rho"),
        values=((1, 1, 1), (1, -1, 1), (2, 0, -1)),
    ),
    "S4": CharacterTable(
        group="S4",
        classes_note="classes e, (12), (12)(34), (123), (1234)",
        sizes=(1, 6, 3, 8, 6),
        labels=("1", "sgn", "rho2", "std3", "std3sgn"),
        values=(
            (1, 1, 1, 1, 1),
            (1, -1, 1, 1, -1),
            (2, 0, 2, -1, 0),
            (3, 1, -1, 0, -1),
            (3, -1, -1, 0, 1),
        ),
    ),
    "D4": _klein_extension("D4", "classes e, r^2, r, s, sr", ("1", "a", "b", "c", "m")),
    "Q8": _klein_extension("Q8", "classes 1, -1, i, j, k", ("1", "ci", "cj", "ck", "m")),
    "A4": CharacterTable(
        group="A4",
        classes_note="classes e, (12)(34), (123), (132)",
        sizes=(1, 3, 4, 4),
        labels=("1", "w", "w2", "W"),
        values=(
            (1, 1, 1, 1),
            (1, 1, OMEGA, OMEGA**2),
            (1, 1, OMEGA**2, OMEGA),
            (3, -1, 0, 0),
        ),
    ),
    **{f"Z{n}": _cyclic(n) for n in range(2, 7)},
}

# fusion[c] is the class of the big group containing subgroup class c.
RESTRICTIONS: tuple[Restriction, ...] = (
    Restriction("res_s3_z3.functor", "Res(S3,Z3)", "S3", "Z3", "Z3 = <(123)> in S3", (0, 2, 2), (0, 4, 5)),
    Restriction("res_s3_z2.functor", "Res(S3,Z2)", "S3", "Z2", "Z2 = <(12)> in S3 (not normal)", (0, 1), (0, 1)),
    Restriction(
        "res_s4_s3.functor",
        "Res(S4,S3)",
        "S4",
        "S3",
        "S3 = Stab(3) in S4 (not normal)",
        (0, 1, 3),
        (0, 2, 6, 8, 12, 14),
    ),
    Restriction(
        "res_s4_a4.functor",
        "Res(S4,A4)",
        "S4",
        "A4",
        "A4 in S4",
        (0, 2, 3, 3),
        (0, 3, 4, 7, 8, 11, 12, 15, 16, 19, 20, 23),
    ),
    Restriction("res_a4_z3.functor", "Res(A4,Z3)", "A4", "Z3", "Z3 = <(123)> in A4 (not normal)", (0, 2, 3), (0, 4, 6)),
    Restriction("res_d4_z4.functor", "Res(D4,Z4)", "D4", "Z4", "Z4 = <r> in D4", (0, 2, 1, 2), (0, 1, 2, 3)),
    Restriction("res_q8_z4.functor", "Res(Q8,Z4)", "Q8", "Z4", "Z4 = <i> in Q8", (0, 2, 1, 2), (0, 1, 2, 3)),
    Restriction(
        "res_d4_center.functor",
        "Res(D4,Z(D4))",
        "D4",
        "Z2",
        "Z(D4) = <r^2> in D4",
        (0, 1),
        (0, 2),
    ),
)


def _matrix(table: CharacterTable) -> np.ndarray:
    return np.array(table.values, dtype=complex)


def _round(value: complex, tol: float = 1e-6) -> int:
    nearest = int(round(value.real))
    if abs(value - nearest) > tol:
        raise ValueError(f"inner product {value} is not an integer")
    return nearest


def ring_from_table(table: CharacterTable) -> FusionRing:
    chi = _matrix(table)
    sizes = np.array(table.sizes, dtype=float)
    n = len(table.labels)
    dual = []
    for x in range(n):
        matches = [y for y in range(n) if np.allclose(chi[y], np.conj(chi[x]), atol=1e-9)]
        if len(matches) != 1:
            raise ValueError(f"{table.group}: no unique dual for {table.labels[x]}")
        dual.append(matches[0])
    constants = {}
    for a in range(n):
        for b in range(n):
            for k in range(n):
                value = _round(np.sum(sizes * chi[a] * chi[b] * np.conj(chi[k])) / table.order)
                if value:
                    constants[(a, b, k)] = value
    return FusionRing(
        name=f"Rep({table.group})",
        labels=table.labels,
        dual=tuple(dual),
        constants=constants,
    )


def functor_from_restriction(res: Restriction, rings: dict[str, FusionRing]) -> RingFunctor:
    big = TABLES[res.group]
    small = TABLES[res.subgroup_table]
    chi = _matrix(big)[:, list(res.fusion)]
    psi = _matrix(small)
    sizes = np.array(small.sizes, dtype=float)
    matrix = tuple(
        tuple(_round(np.sum(sizes * chi[a] * np.conj(psi[j])) / small.order) for j in range(len(small.labels)))
        for a in range(len(big.labels))
    )
    return RingFunctor(
        name=res.name,
        source=rings[big.group],
        target=rings[small.group],
        matrix=matrix,
        subgroup=(res.group, res.members),
    )


def generate_fixtures() -> dict[str, str]:
    texts: dict[str, str] = {}
    rings: dict[str, FusionRing] = {}
    for key, table in TABLES.items():
        ring = ring_from_table(table)
        rings[key] = ring
        header = (
            f"# Grothendieck ring of {ring.name}.\n"
            f"# provenance: tools/character_oracle.py, character table of {table.group} ({table.classes_note}).\n"
        )
        texts[f"rep_{key.lower()}.ring"] = header + format_ring(ring)
    for res in RESTRICTIONS:
        functor = functor_from_restriction(res, rings)
        header = (
            f"# Restriction functor along {res.description}.\n"
            "# provenance: tools/character_oracle.py, inner products of restricted characters.\n"
        )
        texts[res.filename] = header + format_functor(functor)
    return texts


def check_fixtures(directory: Path) -> list[str]:
    stale = []
    for filename, text in generate_fixtures().items():
        path = directory / filename
        if not path.exists() or path.read_text(encoding="utf-8") != text:
            stale.append(filename)
    return stale


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check", action="store_true")
    mode.add_argument("--write", action="store_true")
    parser.add_argument("directory", nargs="?", default="fixtures")
    args = parser.parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")

    directory = Path(args.directory)
    if args.write:
        directory.mkdir(parents=True, exist_ok=True)
        for filename, text in generate_fixtures().items():
            (directory / filename).write_text(text, encoding="utf-8")
            logger.info("wrote %s", directory / filename)
        return 0
    stale = check_fixtures(directory)
    for filename in stale:
        logger.error("%s differs from the oracle output", filename)
    return 1 if stale else 0


if __name__ == "__main__":
    raise SystemExit(main())
