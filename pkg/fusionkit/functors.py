import itertools
import logging
from fractions import Fraction

import numpy as np

from .cosets import left_cosets, right_cosets
from .fp_numerics import regular_vector
from .models import (
    CheckResult,
    DominantReport,
    FPData,
    FunctorAnalysis,
    FusionRing,
    Relation,
    RingElement,
    RingFunctor,
    Subring,
    Violation,
)
from .partitions import block_index, components_of_matrix, is_equivalence
from .ring_core import (
    basis_element,
    float_multiply,
    indicator,
    invertible_elements,
    multiply,
    product_support,
    restrict_ring,
    structure_tensor,
)
from .subrings import close_generated, commutator, is_subring, make_subring, radical

logger = logging.getLogger(__name__)


def identity_functor(ring: FusionRing) -> RingFunctor:
    matrix = tuple(tuple(int(i == j) for j in ring.basis) for i in ring.basis)
    return RingFunctor(name=f"Id({ring.name})", source=ring, target=ring, matrix=matrix)


def apply(f: RingFunctor, v: RingElement) -> RingElement:
    if v.ring is not f.source and v.ring != f.source:
        raise ValueError("element does not belong to the source ring")
    out = [Fraction(0)] * f.target.rank
    for i in v.support:
        for j, m in enumerate(f.matrix[i]):
            if m:
                out[j] += v.coeffs[i] * m
    return RingElement(f.target, tuple(out))


def apply_adjoint(f: RingFunctor, w: RingElement) -> RingElement:
    if w.ring is not f.target and w.ring != f.target:
        raise ValueError("element does not belong to the target ring")
    out = [Fraction(0)] * f.source.rank
    for j in w.support:
        for i in f.source.basis:
            m = f.matrix[i][j]
            if m:
                out[i] += w.coeffs[j] * m
    return RingElement(f.source, tuple(out))


def apply_vector(f: RingFunctor, v: np.ndarray) -> np.ndarray:
    return np.asarray(v, dtype=float) @ np.array(f.matrix, dtype=float)


def adjoint_vector(f: RingFunctor, w: np.ndarray) -> np.ndarray:
    return np.array(f.matrix, dtype=float) @ np.asarray(w, dtype=float)


def unit_adjoint(f: RingFunctor) -> RingElement:
    """The class of R(1)."""
    return apply_adjoint(f, basis_element(f.target, f.target.unit))


def validate_functor(f: RingFunctor) -> list[Violation]:
    src, tgt = f.source, f.target
    if len(f.matrix) != src.rank or any(len(row) != tgt.rank for row in f.matrix):
        return [Violation("shape", (), f"matrix must be {src.rank}x{tgt.rank}")]

    violations: list[Violation] = []
    for i, row in enumerate(f.matrix):
        if any(v < 0 for v in row):
            violations.append(Violation("nonnegative", (i,), "negative multiplicity"))

    unit_row = tuple(int(j == tgt.unit) for j in tgt.basis)
    if f.matrix[src.unit] != unit_row:
        violations.append(Violation("unit-preservation", (src.unit,), "F(1) is not the target unit"))

    images = [apply(f, basis_element(src, i)) for i in src.basis]
    for i, j in itertools.product(src.basis, repeat=2):
        lhs = apply(f, multiply(basis_element(src, i), basis_element(src, j)))
        if lhs != multiply(images[i], images[j]):
            violations.append(
                Violation(
                    "ring-homomorphism",
                    (i, j),
                    f"F({src.labels[i]}{src.labels[j]}) != F({src.labels[i]})F({src.labels[j]})",
                )
            )

    for i, j in itertools.product(src.basis, tgt.basis):
        if f.matrix[src.dual[i]][j] != f.matrix[i][tgt.dual[j]]:
            violations.append(
                Violation("dual-compatibility", (i, j), f"F({src.labels[i]}*) != F({src.labels[i]})*")
            )

    r1 = unit_adjoint(f)
    for i in src.basis:
        if apply_adjoint(f, images[i]) != multiply(basis_element(src, i), r1):
            violations.append(
                Violation("adjunction", (i,), f"R(F({src.labels[i]})) != {src.labels[i]}R(1)")
            )

    logger.debug("validated functor %s: %d violations", f.name, len(violations))
    return violations


def adjoint_module_check(f: RingFunctor) -> CheckResult:
    """R(F(X)Y) = X R(Y) for every pair of basis elements."""
    src, tgt = f.source, f.target
    failures = []
    for i in src.basis:
        image = apply(f, basis_element(src, i))
        for j in tgt.basis:
            y = basis_element(tgt, j)
            lhs = apply_adjoint(f, multiply(image, y))
            rhs = multiply(basis_element(src, i), apply_adjoint(f, y))
            if lhs != rhs:
                failures.append(f"({src.labels[i]},{tgt.labels[j]})")
    return CheckResult(
        name="adjoint-module",
        status="fail" if failures else "pass",
        detail=" ".join(failures),
    )


def kernel(f: RingFunctor) -> Subring:
    unit = {f.target.unit}
    members = tuple(i for i in f.source.basis if set(f.row_support(i)) <= unit)
    if not is_subring(f.source, members):
        raise ValueError(f"kernel of {f.name} is not a subring")
    return Subring(f.source, members)


def dominant_image(f: RingFunctor) -> Subring:
    covered: set[int] = set()
    for i in f.source.basis:
        covered.update(f.row_support(i))
    return make_subring(f.target, covered)


def is_dominant(f: RingFunctor) -> bool:
    return len(dominant_image(f).members) == f.target.rank


def dominant_corestriction(f: RingFunctor) -> RingFunctor:
    image = dominant_image(f).members
    target = restrict_ring(f.target, image)
    matrix = tuple(tuple(row[j] for j in image) for row in f.matrix)
    return RingFunctor(name=f"{f.name}|image", source=f.source, target=target, matrix=matrix)


def _relation(sim: np.ndarray, members=None) -> Relation:
    table = tuple(tuple(bool(v) for v in row) for row in sim)
    return Relation(
        sim=table,
        classes=components_of_matrix(table),
        transitive=is_equivalence(table, members),
    )


def up_relation(f: RingFunctor) -> Relation:
    m = np.array(f.matrix, dtype=np.int64)
    return _relation((m @ m.T) > 0)


def _composite_classes(f: RingFunctor) -> tuple[tuple[int, ...], ...]:
    """Classes of the target basis under repeated Y -> support F(R(Y))."""
    tgt = f.target
    blocks = []
    for j in tgt.basis:
        reached = {j}
        frontier = {j}
        while frontier:
            step: set[int] = set()
            for y in frontier:
                step.update(apply(f, apply_adjoint(f, basis_element(tgt, y))).support)
            frontier = step - reached
            reached |= step
        blocks.append(tuple(sorted(reached)))
    return tuple(sorted(set(blocks), key=lambda b: b[0]))


def down_relation(f: RingFunctor) -> Relation:
    m = np.array(f.matrix, dtype=np.int64)
    relation = _relation((m.T @ m) > 0, dominant_image(f).members)
    if _composite_classes(f) != relation.classes:
        raise RuntimeError(f"{f.name}: down classes disagree with the F(R(-)) closure")
    return relation


def literal_power_classes(f: RingFunctor) -> tuple[tuple[int, ...], ...]:
    """Classes linking Y' to every constituent of F(R(1))^n Y', n >= 0, on the dominant image."""
    tgt = f.target
    fr1 = apply(f, unit_adjoint(f)).support
    image = dominant_image(f).members
    adjacency = [[0] * tgt.rank for _ in tgt.basis]
    for start in image:
        reached = {start}
        while True:
            grown = reached | product_support(tgt, fr1, reached)
            if grown == reached:
                break
            reached = grown
        for k in reached:
            adjacency[start][k] = adjacency[k][start] = 1
    return components_of_matrix(adjacency, image)


def normality_witnesses(f: RingFunctor) -> dict[str, bool]:
    tgt_unit = f.target.unit
    unit_rows = [i for i in f.source.basis if f.matrix[i][tgt_unit]]
    definition = all(f.row_support(i) == (tgt_unit,) for i in unit_rows)

    image = dominant_image(f).members
    down = down_relation(f).classes
    unit_class = next(block for block in down if tgt_unit in block)
    singleton = tuple(j for j in unit_class if j in image) == (tgt_unit,)

    kernel_members = {
        i for i in f.source.basis if set(apply(f, basis_element(f.source, i)).support) <= {tgt_unit}
    }
    preimage = set(unit_adjoint(f).support) <= kernel_members
    return {"definition": definition, "unit-class": singleton, "unit-preimage": preimage}


def is_normal(f: RingFunctor) -> bool:
    witnesses = normality_witnesses(f)
    if len(set(witnesses.values())) != 1:
        raise RuntimeError(f"{f.name}: normality witnesses disagree: {witnesses}")
    return witnesses["definition"]


def _disjoint_or_equal(sets: list[frozenset[int]]) -> bool:
    return all(a == b or not (a & b) for a, b in itertools.combinations(sets, 2))


def disjoint_or_equal_check(f: RingFunctor) -> list[CheckResult]:
    src, tgt = f.source, f.target
    normal = is_normal(f)
    images = [frozenset(f.row_support(i)) for i in src.basis]
    preimages = [frozenset(i for i in src.basis if f.matrix[i][j]) for j in tgt.basis]
    images_ok = _disjoint_or_equal(images)
    preimages_ok = _disjoint_or_equal(preimages)
    agree = normal == images_ok == preimages_ok
    results = [
        CheckResult(
            name="disjoint-or-equal",
            status="pass" if agree else "fail",
            detail=f"normal={normal} images={images_ok} preimages={preimages_ok}",
        )
    ]
    if normal:
        up = up_relation(f).classes
        down = down_relation(f).classes
        down_of = block_index(down)
        image = set(dominant_image(f).members)
        targets = []
        for block in up:
            covered = set().union(*(images[i] for i in block))
            targets.append({down_of[j] for j in covered})
        hit = [next(iter(t)) for t in targets if len(t) == 1]
        image_classes = {down_of[j] for j in image}
        bijective = len(hit) == len(up) == len(set(hit)) and set(hit) == image_classes
        pairs = ", ".join(
            f"{src.label_set(block)}<->{tgt.label_set(down[next(iter(t))])}"
            for block, t in zip(up, targets)
            if len(t) == 1
        )
        results.append(
            CheckResult(name="class-bijection", status="pass" if bijective else "fail", detail=pairs)
        )
    return results


def _spread(vectors: list[np.ndarray]) -> float:
    if len(vectors) < 2:
        return 0.0
    first = vectors[0]
    return max(float(np.max(np.abs(v - first))) for v in vectors[1:])


def normal_image_description(
    f: RingFunctor, fp_src: FPData, fp_tgt: FPData, tol: float
) -> list[CheckResult]:
    if not is_normal(f):
        raise ValueError(f"{f.name} is not normal")
    src = f.source
    ker = kernel(f)
    up = up_relation(f)
    down = down_relation(f)
    m = np.array(f.matrix, dtype=float)
    left = left_cosets(src, ker, fp_src).classes
    right = right_cosets(src, ker, fp_src).classes

    row_spread = max(
        _spread([m[i] / fp_src.dims[i] for i in block]) for block in up.classes
    )
    image = set(dominant_image(f).members)
    column_spread = max(
        _spread([m[:, j] / fp_tgt.dims[j] for j in block if j in image])
        for block in down.classes
    )
    return [
        CheckResult(
            name="up-classes-left-cosets",
            status="pass" if up.classes == left else "fail",
            detail=f"kernel {ker.label}",
        ),
        CheckResult(
            name="left-right-cosets",
            status="pass" if left == right else "fail",
        ),
        CheckResult(
            name="scaled-rows",
            status="pass" if row_spread <= tol else "fail",
            residual=row_spread,
        ),
        CheckResult(
            name="scaled-columns",
            status="pass" if column_spread <= tol else "fail",
            residual=column_spread,
        ),
        CheckResult(
            name="up-transitive",
            status="pass" if up.transitive else "fail",
        ),
    ]


def unit_adjoint_cosets_check(f: RingFunctor, fp_src: FPData) -> CheckResult:
    """Up classes against left and right cosets of the subring generated by support R(1)."""
    src = f.source
    generated = close_generated(src, unit_adjoint(f).support)
    up = up_relation(f).classes
    left = left_cosets(src, generated, fp_src).classes
    right = right_cosets(src, generated, fp_src).classes
    return CheckResult(
        name="up-classes-r1-cosets",
        status="pass" if up == left == right else "fail",
        detail=f"<R(1)> = {generated.label}",
    )


def unit_adjoint_check(f: RingFunctor, fp_src: FPData, tol: float) -> CheckResult:
    if not is_normal(f):
        raise ValueError(f"{f.name} is not normal")
    src = f.source
    ker = kernel(f)
    r1 = unit_adjoint(f)
    vector = np.array([float(c) for c in r1.coeffs])
    residual = float(np.max(np.abs(vector - regular_vector(src, ker.members, fp_src))))
    generated = close_generated(src, r1.support)
    passed = residual <= tol and generated.members == ker.members
    return CheckResult(
        name="unit-adjoint",
        status="pass" if passed else "fail",
        detail=f"<R(1)> = {generated.label}",
        residual=residual,
    )


def invertible_image_set(f: RingFunctor) -> tuple[int, ...]:
    """Basis X with F(X) a multiple of one invertible target element."""
    inv = set(invertible_elements(f.target))
    out = []
    for i in f.source.basis:
        support = f.row_support(i)
        if len(support) == 1 and support[0] in inv:
            out.append(i)
    return tuple(out)


def invertible_product_check(f: RingFunctor) -> CheckResult:
    src = f.source
    ker = set(kernel(f).members)
    inv = set(invertible_elements(f.target))
    failures = []
    for x, y in itertools.product(src.basis, repeat=2):
        in_kernel = product_support(src, (x,), (y,)) <= ker
        sx = f.row_support(x)
        sy = f.row_support(src.dual[y])
        same_invertible = len(sx) == 1 and sx == sy and sx[0] in inv
        if in_kernel != same_invertible:
            failures.append(f"({src.labels[x]},{src.labels[y]})")
    return CheckResult(
        name="invertible-products",
        status="fail" if failures else "pass",
        detail=" ".join(failures),
    )


def radical_commutator_check(f: RingFunctor) -> CheckResult:
    if not is_normal(f):
        raise ValueError(f"{f.name} is not normal")
    src = f.source
    ker = kernel(f)
    rad = radical(src, ker)
    co = commutator(src, ker)
    inv = invertible_image_set(f)
    passed = rad.members == co.members == inv and rad.is_subring and co.is_subring
    return CheckResult(
        name="radical-commutator",
        status="pass" if passed else "fail",
        detail=f"rad={src.label_set(rad.members)} co={src.label_set(co.members)} inv={src.label_set(inv)}",
    )


def self_trivializing_check(f: RingFunctor, fp_src: FPData, tol: float) -> CheckResult:
    if not is_normal(f):
        raise ValueError(f"{f.name} is not normal")
    src = f.source
    r1 = np.array([float(c) for c in unit_adjoint(f).coeffs])
    dim = float(r1 @ np.array(fp_src.dims))
    square = float_multiply(structure_tensor(src).astype(float), r1, r1)
    residual = float(np.max(np.abs(square - dim * r1)))
    return CheckResult(
        name="self-trivializing",
        status="pass" if residual <= tol * max(1.0, dim) else "fail",
        detail=f"FPdim(R(1)) = {dim:.12g}",
        residual=residual,
    )


def centrality_check(ring: FusionRing, d: Subring, fp: FPData, tol: float) -> bool:
    sum_d = indicator(ring, d.members)
    tensor = structure_tensor(ring).astype(float)
    r_d = regular_vector(ring, d.members, fp)
    for x in ring.basis:
        bx = basis_element(ring, x)
        if set(multiply(sum_d, bx).support) != set(multiply(bx, sum_d).support):
            return False
        e = np.zeros(ring.rank)
        e[x] = 1.0
        gap = np.max(np.abs(float_multiply(tensor, r_d, e) - float_multiply(tensor, e, r_d)))
        if gap > tol:
            return False
    return True


def _restrict_fp(fp: FPData, members) -> FPData:
    dims = tuple(fp.dims[j] for j in members)
    return FPData(dims=dims, ring_dim=sum(d * d for d in dims), residual=fp.residual)


def dominant_analysis(f: RingFunctor, fp_src: FPData, fp_tgt: FPData, tol: float) -> DominantReport:
    src, tgt = f.source, f.target
    image = dominant_image(f).members
    uncovered = [tgt.labels[j] for j in tgt.basis if j not in image]
    if uncovered:
        raise ValueError(f"{f.name} is not dominant; uncovered: {', '.join(uncovered)}")

    up = up_relation(f).classes
    down = down_relation(f).classes
    down_of = block_index(down)
    index = fp_src.ring_dim / fp_tgt.ring_dim
    checks: list[CheckResult] = [
        CheckResult(
            name="class-count",
            status="pass" if len(up) == len(down) else "fail",
            detail=f"{len(up)} up, {len(down)} down",
        )
    ]

    pairs: list[tuple[int, int]] = []
    constants: list[float] = []
    image_gap = 0.0
    proportional_gap = 0.0
    straddling = []
    for i, block in enumerate(up):
        a = regular_vector(src, block, fp_src)
        fa = apply_vector(f, a)
        hit = {down_of[j] for j in np.flatnonzero(fa > 0)}
        if len(hit) != 1:
            straddling.append(src.label_set(block))
            continue
        j = hit.pop()
        pairs.append((i, j))
        b = regular_vector(tgt, down[j], fp_tgt)
        image_gap = max(image_gap, float(np.max(np.abs(fa - index * b))))
        rb = adjoint_vector(f, b)
        c = float(rb @ a / (a @ a))
        constants.append(c)
        proportional_gap = max(proportional_gap, float(np.max(np.abs(rb - c * a))))

    matched = not straddling and len({j for _, j in pairs}) == len(pairs) == len(down)
    checks.append(
        CheckResult(
            name="class-matching",
            status="pass" if matched else "fail",
            detail=", ".join(straddling),
        )
    )
    checks.append(
        CheckResult(
            name="image-of-classes",
            status="pass" if image_gap <= tol * max(1.0, index) else "fail",
            detail=f"index {index:.12g}",
            residual=image_gap,
        )
    )
    regular_gap = float(
        np.max(
            np.abs(
                adjoint_vector(f, regular_vector(tgt, tgt.basis, fp_tgt))
                - regular_vector(src, src.basis, fp_src)
            )
        )
    )
    checks.append(
        CheckResult(
            name="adjoint-of-regular",
            status="pass" if regular_gap <= tol else "fail",
            residual=regular_gap,
        )
    )
    checks.append(
        CheckResult(
            name="adjoint-proportional",
            status="pass" if proportional_gap <= tol * max(1.0, index) else "fail",
            detail="c = " + ", ".join(f"{c:.12g}" for c in constants),
            residual=proportional_gap,
        )
    )
    return DominantReport(index=index, pairs=tuple(pairs), constants=tuple(constants), checks=tuple(checks))


def dominant_analysis_any(f: RingFunctor, fp_src: FPData, fp_tgt: FPData, tol: float) -> DominantReport:
    """Run dominant_analysis, passing through the corestriction when f is not dominant."""
    if is_dominant(f):
        return dominant_analysis(f, fp_src, fp_tgt, tol)
    image = dominant_image(f).members
    return dominant_analysis(dominant_corestriction(f), fp_src, _restrict_fp(fp_tgt, image), tol)


def analyze_functor(f: RingFunctor, fp_src: FPData, fp_tgt: FPData) -> FunctorAnalysis:
    image = dominant_image(f)
    up = up_relation(f)
    return FunctorAnalysis(
        kernel=kernel(f),
        dominant_image=image,
        up_classes=up.classes,
        down_classes=down_relation(f).classes,
        is_normal=is_normal(f),
        is_dominant=len(image.members) == f.target.rank,
        sim_up_transitive=up.transitive,
        index=fp_src.ring_dim / fp_tgt.subring_dim(image.members),
    )


def converse_scan(f: RingFunctor) -> str | None:
    """Describe f when its up relation is already transitive although f is not normal."""
    if up_relation(f).transitive and not is_normal(f):
        return f"{f.name}: up relation transitive but functor not normal"
    return None
