import logging

import numpy as np

from .models import CheckResult, FPData, FusionRing, RegularElement, Subring
from .ring_core import float_multiply, structure_tensor

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100_000
RESIDUAL_GATE = 1e-8


def starting_vector(n: int, seed: int | None) -> np.ndarray:
    if seed is None:
        return np.ones(n)
    rng = np.random.default_rng(seed)
    return rng.uniform(0.5, 1.5, size=n)


def power_iterate(
    matrix: np.ndarray,
    start: np.ndarray,
    *,
    tol: float,
    max_iter: int,
) -> tuple[float, np.ndarray, int]:
    """Dominant eigenpair of a nonnegative matrix; stops on relative change <= tol."""
    x = np.asarray(start, dtype=float)
    x = x / np.max(np.abs(x))
    for iteration in range(1, max_iter + 1):
        y = matrix @ x
        scale = float(np.max(np.abs(y)))
        if scale == 0.0:
            raise ValueError("power iteration hit the zero vector")
        y = y / scale
        change = float(np.max(np.abs(y - x)))
        x = y
        if change <= tol:
            value = float(x @ (matrix @ x) / (x @ x))
            logger.debug("power iteration converged after %d steps, eigenvalue %.12g", iteration, value)
            return value, x, iteration
    raise ValueError(f"power iteration did not converge in {max_iter} steps")


def homomorphism_residual(ring: FusionRing, dims: np.ndarray) -> float:
    tensor = structure_tensor(ring)
    lhs = np.einsum("ijk,k->ij", tensor, dims)
    return float(np.max(np.abs(lhs - np.outer(dims, dims))))


def compute_fp_dims(
    ring: FusionRing,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    *,
    seed: int | None = None,
    residual_gate: float = RESIDUAL_GATE,
) -> FPData:
    tensor = structure_tensor(ring).astype(float)
    summed = tensor.sum(axis=0)
    _, vector, iterations = power_iterate(
        summed, starting_vector(ring.rank, seed), tol=tol, max_iter=max_iter
    )
    dims = vector / vector[ring.unit]
    dims[ring.unit] = 1.0
    residual = homomorphism_residual(ring, dims)
    logger.debug("%s: fp residual %.3g after %d iterations", ring.name, residual, iterations)
    if residual > residual_gate:
        raise ValueError(f"{ring.name}: dimension residual {residual:.3g} exceeds {residual_gate:g}")
    return FPData(
        dims=tuple(float(d) for d in dims),
        ring_dim=float(np.sum(dims**2)),
        residual=residual,
        iterations=iterations,
    )


def regular_vector(ring: FusionRing, members, fp: FPData) -> np.ndarray:
    vector = np.zeros(ring.rank)
    for i in members:
        vector[i] = fp.dims[i]
    return vector


def regular_element(ring: FusionRing, sub: Subring, fp: FPData) -> RegularElement:
    if sub.ring != ring:
        raise ValueError("subring belongs to another ring")
    return RegularElement(subring=sub, coeffs=tuple(regular_vector(ring, sub.members, fp)))


def check_regular_absorption(ring: FusionRing, fp: FPData, tol: float = RESIDUAL_GATE) -> list[CheckResult]:
    tensor = structure_tensor(ring).astype(float)
    r_c = regular_vector(ring, ring.basis, fp)
    results: list[CheckResult] = []
    for x in ring.basis:
        basis = np.zeros(ring.rank)
        basis[x] = 1.0
        target = fp.dims[x] * r_c
        left = float(np.max(np.abs(float_multiply(tensor, basis, r_c) - target)))
        right = float(np.max(np.abs(float_multiply(tensor, r_c, basis) - target)))
        residual = max(left, right)
        results.append(
            CheckResult(
                name=f"absorb[{ring.labels[x]}]",
                status="pass" if residual <= tol else "fail",
                residual=residual,
            )
        )
    square = float(np.max(np.abs(float_multiply(tensor, r_c, r_c) - fp.ring_dim * r_c)))
    results.append(
        CheckResult(
            name="regular-square",
            status="pass" if square <= tol else "fail",
            residual=square,
        )
    )
    return results
