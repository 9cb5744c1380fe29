import itertools
import logging
from pathlib import Path

from .models import Corpus, FiniteGroup, FusionRing, RingFunctor, Violation
from .partitions import normalize_blocks
from .services.functor_files import load_functor_file
from .services.group_files import load_group_file
from .services.ring_files import load_ring_file

logger = logging.getLogger(__name__)


def validate_group(g: FiniteGroup) -> list[Violation]:
    n = g.order
    violations: list[Violation] = []
    for a in range(n):
        if g.mul(0, a) != a or g.mul(a, 0) != a:
            violations.append(Violation("identity", (a,), "element 0 is not the identity"))
        if sorted(g.table[a]) != list(range(n)):
            violations.append(Violation("latin", (a,), "row is not a permutation"))
        if sorted(g.mul(b, a) for b in range(n)) != list(range(n)):
            violations.append(Violation("latin", (a,), "column is not a permutation"))
    for a, b, c in itertools.product(range(n), repeat=3):
        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)):
            violations.append(Violation("associativity", (a, b, c), "(ab)c != a(bc)"))
    return violations


def _require_valid(g: FiniteGroup) -> None:
    violations = validate_group(g)
    if violations:
        first = violations[0]
        raise ValueError(f"{g.name} is not a group: {first.axiom} at {first.witness}")


def is_subgroup(g: FiniteGroup, members) -> bool:
    members = set(members)
    if g.identity not in members or any(not 0 <= m < g.order for m in members):
        return False
    return all(g.mul(a, g.inverses[b]) in members for a in members for b in members)


def is_normal_subgroup(g: FiniteGroup, members) -> bool:
    members = set(members)
    if not is_subgroup(g, members):
        return False
    return all(
        g.mul(g.mul(x, h), g.inverses[x]) in members for x in range(g.order) for h in members
    )


def _close(g: FiniteGroup, members: set[int]) -> tuple[int, ...]:
    while True:
        grown = members | {g.mul(a, b) for a in members for b in members}
        if grown == members:
            return tuple(sorted(members))
        members = grown


def subgroups(g: FiniteGroup) -> list[tuple[int, ...]]:
    found = {(g.identity,)}
    frontier = [(g.identity,)]
    while frontier:
        grown = []
        for sub in frontier:
            for x in range(g.order):
                if x in sub:
                    continue
                candidate = _close(g, set(sub) | {x})
                if candidate not in found:
                    found.add(candidate)
                    grown.append(candidate)
        frontier = grown
    return sorted(found, key=lambda s: (len(s), s))


def group_double_cosets_oracle(g: FiniteGroup, k, l) -> tuple[tuple[int, ...], ...]:
    if not is_subgroup(g, k) or not is_subgroup(g, l):
        raise ValueError("double cosets need two subgroups")
    blocks = {
        frozenset(g.mul(g.mul(a, x), b) for a in k for b in l) for x in range(g.order)
    }
    return normalize_blocks(blocks)


def group_ring(g: FiniteGroup) -> FusionRing:
    _require_valid(g)
    constants = {(a, b, g.mul(a, b)): 1 for a in range(g.order) for b in range(g.order)}
    return FusionRing(
        name=f"Z[{g.name}]",
        labels=g.element_labels(),
        dual=g.inverses,
        constants=constants,
    )


def quotient_group(g: FiniteGroup, n) -> tuple[FiniteGroup, tuple[tuple[int, ...], ...]]:
    if not is_normal_subgroup(g, n):
        raise ValueError(f"{sorted(n)} is not a normal subgroup of {g.name}")
    cosets = normalize_blocks({frozenset(g.mul(x, h) for h in n) for x in range(g.order)})
    where = {x: i for i, coset in enumerate(cosets) for x in coset}
    table = tuple(
        tuple(where[g.mul(a[0], b[0])] for b in cosets) for a in cosets
    )
    labels = g.element_labels()
    quotient = FiniteGroup(
        name=f"{g.name}/{{{','.join(str(m) for m in sorted(n))}}}",
        table=table,
        labels=tuple(labels[c[0]] + "N" if i else "N" for i, c in enumerate(cosets)),
    )
    return quotient, cosets


def quotient_functor(g: FiniteGroup, n) -> tuple[RingFunctor, FusionRing]:
    """The functor Z[G] -> Z[G/N] sending g to gN, together with its target ring."""
    quotient, cosets = quotient_group(g, n)
    source = group_ring(g)
    target = group_ring(quotient)
    where = {x: i for i, coset in enumerate(cosets) for x in coset}
    matrix = tuple(
        tuple(int(where[x] == j) for j in range(quotient.order)) for x in range(g.order)
    )
    functor = RingFunctor(
        name=f"Quot({g.name},{quotient.name})",
        source=source,
        target=target,
        matrix=matrix,
        subgroup=(g.name, tuple(sorted(n))),
    )
    return functor, target


def load_corpus(directory: Path | str) -> Corpus:
    directory = Path(directory)
    if not directory.is_dir():
        raise OSError(f"{directory} is not a directory")
    rings: dict[str, tuple[str, FusionRing]] = {}
    for path in sorted(directory.glob("*.ring")):
        ring = load_ring_file(path)
        if ring.name in rings:
            raise ValueError(f"{path.name}: ring {ring.name} already defined in {rings[ring.name][0]}")
        rings[ring.name] = (path.name, ring)

    by_name = {name: ring for name, (_, ring) in rings.items()}
    functors = {
        path.name: (path.name, load_functor_file(path, by_name))
        for path in sorted(directory.glob("*.functor"))
    }
    groups = {
        path.name: (path.name, load_group_file(path))
        for path in sorted(directory.glob("*.group"))
    }
    if not (rings or functors or groups):
        logger.warning("no fixtures found in %s", directory)
    logger.info(
        "loaded %d rings, %d functors, %d groups from %s",
        len(rings), len(functors), len(groups), directory,
    )
    return Corpus(rings=rings, functors=functors, groups=groups)
