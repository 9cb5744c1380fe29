import itertools
import logging

from .corpus import subgroups
from .cosets import left_cosets, right_cosets
from .functors import is_normal, kernel, validate_functor
from .models import (
    CheckResult,
    FiniteGroup,
    FPData,
    FusionRing,
    Grading,
    IntermediateMap,
    RingFunctor,
    SubgroupEntry,
    Subring,
)
from .partitions import block_index, normalize_blocks
from .ring_core import product_support
from .subrings import adjoint_subring, commutator, is_subring, radical, subrings_containing

logger = logging.getLogger(__name__)


def build_grading(
    ring: FusionRing,
    components,
    labels=None,
    *,
    error: type[Exception] = ValueError,
) -> Grading:
    blocks = normalize_blocks(components)
    if sorted(i for block in blocks for i in block) != list(ring.basis):
        raise error("components must partition the basis")
    if labels is None:
        labels = tuple(ring.label_set(block) for block in blocks)
    where = block_index(blocks)

    table: list[list[int]] = []
    for g, h in itertools.product(range(len(blocks)), repeat=2):
        if h == 0:
            table.append([])
        hit = {where[k] for k in product_support(ring, blocks[g], blocks[h])}
        if len(hit) != 1:
            raise error(
                f"products of {ring.label_set(blocks[g])} and {ring.label_set(blocks[h])} "
                "straddle components"
            )
        table[g].append(hit.pop())

    order = len(blocks)
    for g in range(order):
        if table[0][g] != g or table[g][0] != g:
            raise error("trivial component does not act as the identity")
        duals = {where[ring.dual[i]] for i in blocks[g]}
        if len(duals) != 1 or table[g][duals.pop()] != 0:
            raise error(f"dual of {ring.label_set(blocks[g])} is not its inverse")
    for a, b, c in itertools.product(range(order), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise error("component law is not associative")

    trivial = blocks[0]
    if not is_subring(ring, trivial):
        raise error("trivial component is not a subring")
    return Grading(
        ring=ring,
        trivial_component=Subring(ring, trivial),
        components=blocks,
        component_labels=tuple(labels),
        group_table=tuple(tuple(row) for row in table),
    )


def coset_grading(ring: FusionRing, sub: Subring, fp: FPData) -> Grading:
    """Grading whose components are the left cosets of sub."""
    classes = left_cosets(ring, sub, fp).classes
    return build_grading(ring, classes, error=RuntimeError)


def universal_grading(ring: FusionRing, fp: FPData) -> Grading:
    return coset_grading(ring, adjoint_subring(ring), fp)


def explicit_grading(ring: FusionRing) -> Grading:
    if ring.grades is None:
        raise ValueError(f"{ring.name} carries no grade lines")
    by_label: dict[str, list[int]] = {}
    for i, grade in enumerate(ring.grades):
        by_label.setdefault(grade, []).append(i)
    blocks = normalize_blocks(by_label.values())
    labels = tuple(ring.grades[block[0]] for block in blocks)
    return build_grading(ring, blocks, labels)


def component_group(grading: Grading) -> FiniteGroup:
    return FiniteGroup(
        name=f"grading({grading.ring.name})",
        table=grading.group_table,
        labels=grading.component_labels,
    )


def grading_subgroups(grading: Grading) -> list[tuple[int, ...]]:
    return subgroups(component_group(grading))


def component_dims_check(grading: Grading, fp: FPData, tol: float) -> CheckResult:
    total = sum(fp.subring_dim(block) for block in grading.components)
    gap = abs(total - fp.ring_dim)
    return CheckResult(
        name="component-dims",
        status="pass" if gap <= tol * max(1.0, fp.ring_dim) else "fail",
        detail=" ".join(f"{fp.subring_dim(block):.6g}" for block in grading.components),
        residual=gap,
    )


def refinement_check(grading: Grading, fp: FPData, cap: int) -> CheckResult:
    """Components refine the left cosets of every subring containing the trivial component."""
    ring = grading.ring
    if ring.rank > cap:
        return CheckResult(name="refines-cosets", status="skip", detail=f"rank above {cap}")
    coarse_fail = []
    for sub in subrings_containing(ring, grading.trivial_component):
        where = block_index(left_cosets(ring, sub, fp).classes)
        for block in grading.components:
            if len({where[i] for i in block}) != 1:
                coarse_fail.append(sub.label)
                break
    return CheckResult(
        name="refines-cosets",
        status="fail" if coarse_fail else "pass",
        detail=" ".join(coarse_fail),
    )


def verify_normal_extension(
    ring: FusionRing, grading: Grading, witness: RingFunctor, fp: FPData
) -> list[CheckResult]:
    if witness.source != ring:
        raise ValueError(f"{witness.name} does not start at {ring.name}")
    if validate_functor(witness):
        raise ValueError(f"{witness.name} is not a valid functor")
    if not is_normal(witness):
        raise ValueError(f"{witness.name} is not normal")
    trivial = grading.trivial_component
    if kernel(witness).members != trivial.members:
        raise ValueError(f"kernel of {witness.name} differs from {trivial.label}")

    left = block_index(left_cosets(ring, trivial, fp).classes)
    right = block_index(right_cosets(ring, trivial, fp).classes)
    results: list[CheckResult] = []
    for label, block in zip(grading.component_labels, grading.components):
        members = set(block)
        ok = all(
            {i for i in ring.basis if left[i] == left[x]} == members
            and {i for i in ring.basis if right[i] == right[x]} == members
            for x in block
        )
        results.append(
            CheckResult(
                name=f"component[{label}]",
                status="pass" if ok else "fail",
                detail=ring.label_set(block),
            )
        )
    full = tuple(ring.basis)
    co = commutator(ring, trivial)
    rad = radical(ring, trivial)
    results.append(
        CheckResult(
            name="commutator-full",
            status="pass" if co.members == full and rad.members == full else "fail",
            detail=f"co={ring.label_set(co.members)} rad={ring.label_set(rad.members)}",
        )
    )
    return results


def intermediate_subring_map(ring: FusionRing, grading: Grading, cap: int) -> IntermediateMap:
    entries = []
    for subgroup in grading_subgroups(grading):
        members = sorted(i for g in subgroup for i in grading.components[g])
        if not is_subring(ring, members):
            raise RuntimeError(f"components over {subgroup} do not form a subring")
        entries.append(SubgroupEntry(subgroup=subgroup, subring=Subring(ring, tuple(members))))
    injective = len({e.subring.members for e in entries}) == len(entries)

    if ring.rank > cap:
        logger.warning("%s: rank %d above %d, skipping the surjectivity check", ring.name, ring.rank, cap)
        surjective = None
    else:
        above = {s.members for s in subrings_containing(ring, grading.trivial_component)}
        surjective = above == {e.subring.members for e in entries}
    return IntermediateMap(entries=tuple(entries), injective=injective, surjective=surjective)
