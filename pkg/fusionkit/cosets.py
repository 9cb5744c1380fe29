import logging

import numpy as np

from .fp_numerics import DEFAULT_MAX_ITER, DEFAULT_TOL, RESIDUAL_GATE, power_iterate, regular_vector
from .models import CheckResult, CosetDecomposition, FormulaResult, FPData, FusionRing, Subring
from .partitions import components_of_matrix
from .ring_core import basis_element, indicator, left_operator, multiply, right_operator, structure_tensor
from .subrings import close_generated, is_subring, trivial_subring

logger = logging.getLogger(__name__)


def _require_subring(ring: FusionRing, sub: Subring) -> None:
    if sub.ring != ring or not is_subring(ring, sub.members):
        raise ValueError(f"{sub.label} is not a subring of {ring.name}")


def coset_counts(ring: FusionRing, d: Subring, e: Subring) -> tuple[tuple[int, ...], ...]:
    """Exact T with unit weights: entry (j, i) is the multiplicity of X_j in D X_i E."""
    sum_d = indicator(ring, d.members)
    sum_e = indicator(ring, e.members)
    columns = []
    for i in ring.basis:
        image = multiply(multiply(sum_d, basis_element(ring, i)), sum_e)
        columns.append([int(c) for c in image.coeffs])
    return tuple(tuple(columns[i][j] for i in ring.basis) for j in ring.basis)


def weighted_operator(ring: FusionRing, d: Subring, e: Subring, fp: FPData) -> np.ndarray:
    tensor = structure_tensor(ring).astype(float)
    return left_operator(tensor, regular_vector(ring, d.members, fp)) @ right_operator(
        tensor, regular_vector(ring, e.members, fp)
    )


def double_cosets(ring: FusionRing, d: Subring, e: Subring, fp: FPData) -> CosetDecomposition:
    _require_subring(ring, d)
    _require_subring(ring, e)
    counts = coset_counts(ring, d, e)
    classes = components_of_matrix(counts)
    vectors = tuple(tuple(regular_vector(ring, block, fp)) for block in classes)
    t_matrix = weighted_operator(ring, d, e, fp)
    logger.debug("%s: %d classes for %s\\%s", ring.name, len(classes), d.label, e.label)
    return CosetDecomposition(
        ring=ring,
        left=d,
        right=e,
        classes=classes,
        class_vectors=vectors,
        t_counts=counts,
        t_matrix=tuple(tuple(float(v) for v in row) for row in t_matrix),
    )


def left_cosets(ring: FusionRing, d: Subring, fp: FPData) -> CosetDecomposition:
    return double_cosets(ring, d, trivial_subring(ring), fp)


def right_cosets(ring: FusionRing, e: Subring, fp: FPData) -> CosetDecomposition:
    return double_cosets(ring, trivial_subring(ring), e, fp)


def object_generated_relation(ring: FusionRing, a: int, b: int, fp: FPData) -> CosetDecomposition:
    return double_cosets(ring, close_generated(ring, {a}), close_generated(ring, {b}), fp)


def coset_eigenvalue(dec: CosetDecomposition, fp: FPData) -> float:
    return fp.subring_dim(dec.left.members) * fp.subring_dim(dec.right.members)


def symmetry_check(dec: CosetDecomposition, tol: float) -> CheckResult:
    counts = np.array(dec.t_counts)
    exact = bool(np.array_equal(counts, counts.T))
    relation = counts > 0
    same_relation = bool(np.array_equal(relation, relation.T))
    t = np.array(dec.t_matrix)
    residual = float(np.max(np.abs(t - t.T)))
    passed = exact and same_relation and residual <= tol * max(1.0, float(np.max(t)))
    return CheckResult(
        name="t-symmetry",
        status="pass" if passed else "fail",
        detail="" if exact else "integer counts are not symmetric",
        residual=residual,
    )


def verify_principal_eigendata(
    dec: CosetDecomposition,
    fp: FPData,
    tol: float,
    *,
    iter_tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> list[CheckResult]:
    t = np.array(dec.t_matrix)
    expected = coset_eigenvalue(dec, fp)
    results: list[CheckResult] = []

    worst = 0.0
    for vector in dec.class_vectors:
        a = np.array(vector)
        worst = max(worst, float(np.max(np.abs(t @ a - expected * a)) / np.max(np.abs(a))))
    results.append(
        CheckResult(
            name="class-eigenvectors",
            status="pass" if worst <= tol else "fail",
            residual=worst,
        )
    )

    value, _, _ = power_iterate(t, np.ones(len(t)), tol=iter_tol, max_iter=max_iter)
    gap = abs(value - expected)
    results.append(
        CheckResult(
            name="principal-eigenvalue",
            status="pass" if gap <= tol else "fail",
            detail=f"{value:.12g} vs {expected:.12g}",
            residual=gap,
        )
    )

    split = [
        block
        for block in dec.classes
        if len(components_of_matrix(dec.t_counts, block)) != 1
    ]
    results.append(
        CheckResult(
            name="irreducible-blocks",
            status="fail" if split else "pass",
            detail=f"{len(dec.classes)} blocks" if not split else f"reducible: {split}",
        )
    )
    return results


def coset_product_formula(
    dec: CosetDecomposition, fp: FPData, x: int, tol: float = RESIDUAL_GATE
) -> FormulaResult:
    ring = dec.ring
    class_index = dec.class_of(x)
    a = np.array(dec.class_vectors[class_index])
    a_dim = float(sum(fp.dims[i] ** 2 for i in dec.classes[class_index]))
    scalar = fp.subring_dim(dec.left.members) * fp.dims[x] * fp.subring_dim(dec.right.members) / a_dim
    basis = np.zeros(ring.rank)
    basis[x] = 1.0
    product = np.array(dec.t_matrix) @ basis
    residual = float(np.max(np.abs(product - scalar * a)))
    return FormulaResult(
        index=x,
        class_index=class_index,
        scalar=scalar,
        residual=residual,
        passed=residual <= tol * max(1.0, scalar * float(np.max(a))),
    )


def bimodule_stability_check(dec: CosetDecomposition) -> CheckResult:
    ring = dec.ring
    sum_d = indicator(ring, dec.left.members)
    sum_e = indicator(ring, dec.right.members)
    leaks = []
    for block in dec.classes:
        image = multiply(multiply(sum_d, indicator(ring, block)), sum_e)
        if not set(image.support) <= set(block):
            leaks.append(ring.label_set(block))
    return CheckResult(
        name="bimodule-stability",
        status="fail" if leaks else "pass",
        detail=", ".join(leaks),
    )


def format_blocks(ring: FusionRing, classes) -> str:
    return " ".join(ring.label_set(block) for block in classes)
