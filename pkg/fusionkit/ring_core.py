import itertools
import logging
from collections.abc import Iterable, Mapping
from fractions import Fraction

import numpy as np

from .models import FusionRing, RingElement, Violation

logger = logging.getLogger(__name__)

AXIOMS = ("dual-involution", "unit", "associativity", "rigidity", "frobenius")


def zero_element(ring: FusionRing) -> RingElement:
    return RingElement(ring, tuple(Fraction(0) for _ in ring.basis))


def basis_element(ring: FusionRing, index: int) -> RingElement:
    if not 0 <= index < ring.rank:
        raise ValueError(f"basis index {index} out of range")
    return RingElement(ring, tuple(Fraction(int(i == index)) for i in ring.basis))


def element_from_mapping(ring: FusionRing, coeffs: Mapping[int, object]) -> RingElement:
    values = [Fraction(0)] * ring.rank
    for index, value in coeffs.items():
        if not 0 <= index < ring.rank:
            raise ValueError(f"basis index {index} out of range")
        values[index] += Fraction(value)
    return RingElement(ring, tuple(values))


def indicator(ring: FusionRing, members: Iterable[int]) -> RingElement:
    return element_from_mapping(ring, {i: 1 for i in members})


def _same_ring(a: RingElement, b: RingElement) -> None:
    if a.ring is not b.ring and a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring.name} vs {b.ring.name}")


def add(a: RingElement, b: RingElement) -> RingElement:
    _same_ring(a, b)
    return RingElement(a.ring, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def subtract(a: RingElement, b: RingElement) -> RingElement:
    _same_ring(a, b)
    return RingElement(a.ring, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def scale(a: RingElement, factor) -> RingElement:
    factor = Fraction(factor)
    return RingElement(a.ring, tuple(factor * c for c in a.coeffs))


def multiply(a: RingElement, b: RingElement) -> RingElement:
    _same_ring(a, b)
    ring = a.ring
    out = [Fraction(0)] * ring.rank
    for i in a.support:
        for j in b.support:
            weight = a.coeffs[i] * b.coeffs[j]
            for k, value in ring.product(i, j).items():
                out[k] += weight * value
    return RingElement(ring, tuple(out))


def dual_element(v: RingElement) -> RingElement:
    out = [Fraction(0)] * v.ring.rank
    for i, c in enumerate(v.coeffs):
        out[v.ring.dual[i]] = c
    return RingElement(v.ring, tuple(out))


def form_m(a: RingElement, b: RingElement) -> Fraction:
    _same_ring(a, b)
    return sum((x * y for x, y in zip(a.coeffs, b.coeffs)), Fraction(0))


def product_support(ring: FusionRing, left: Iterable[int], right: Iterable[int]) -> set[int]:
    right = tuple(right)
    out: set[int] = set()
    for i in left:
        for j in right:
            out.update(ring.product(i, j))
    return out


def _triple_product(ring: FusionRing, partial: dict[int, int], other: int, *, left: bool) -> dict[int, int]:
    out: dict[int, int] = {}
    for m, v in partial.items():
        pair = (m, other) if left else (other, m)
        for l, w in ring.product(*pair).items():
            out[l] = out.get(l, 0) + v * w
    return out


def validate_ring(ring: FusionRing) -> list[Violation]:
    """Check the based-ring axioms; an empty list means the ring is valid."""
    violations: list[Violation] = []
    dual = ring.dual
    N = ring.coefficient

    for i in ring.basis:
        if dual[dual[i]] != i:
            violations.append(
                Violation("dual-involution", (i,), f"dual(dual({ring.labels[i]})) != {ring.labels[i]}")
            )

    for j, k in itertools.product(ring.basis, repeat=2):
        expected = int(j == k)
        if N(0, j, k) != expected or N(j, 0, k) != expected:
            violations.append(
                Violation("unit", (j, k), f"unit law fails for ({ring.labels[j]}, {ring.labels[k]})")
            )

    for i, j, k in itertools.product(ring.basis, repeat=3):
        lhs = _triple_product(ring, ring.product(i, j), k, left=True)
        rhs = _triple_product(ring, ring.product(j, k), i, left=False)
        for l in sorted(set(lhs) | set(rhs)):
            if lhs.get(l, 0) != rhs.get(l, 0):
                violations.append(
                    Violation(
                        "associativity",
                        (i, j, k, l),
                        f"(ab)c has {lhs.get(l, 0)}, a(bc) has {rhs.get(l, 0)}",
                    )
                )

    for i, j in itertools.product(ring.basis, repeat=2):
        expected = int(j == dual[i])
        if N(i, j, 0) != expected:
            violations.append(
                Violation("rigidity", (i, j), f"unit multiplicity {N(i, j, 0)}, expected {expected}")
            )

    for i, j, k in itertools.product(ring.basis, repeat=3):
        value = N(i, j, k)
        if value != N(j, dual[k], dual[i]) or value != N(dual[k], i, dual[j]):
            violations.append(
                Violation("frobenius", (i, j, k), "rotated structure constants disagree")
            )

    logger.debug("validated %s: %d violations", ring.name, len(violations))
    return violations


def structure_tensor(ring: FusionRing) -> np.ndarray:
    tensor = np.zeros((ring.rank,) * 3, dtype=np.int64)
    for (i, j, k), value in ring.constants.items():
        tensor[i, j, k] = value
    return tensor


def float_multiply(tensor: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum("i,j,ijk->k", a, b, tensor)


def left_operator(tensor: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Matrix of v -> a*v; column j holds a*X_j."""
    return np.einsum("i,ijk->kj", a, tensor)


def right_operator(tensor: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix of v -> v*b; column i holds X_i*b."""
    return np.einsum("j,ijk->ki", b, tensor)


def invertible_elements(ring: FusionRing) -> tuple[int, ...]:
    return tuple(i for i in ring.basis if ring.product(i, ring.dual[i]) == {0: 1})


def restrict_ring(ring: FusionRing, members: Iterable[int]) -> FusionRing:
    """Re-index the structure constants of a product-closed member set."""
    order = sorted(set(members))
    if not order or order[0] != 0:
        raise ValueError("restricted basis must contain the unit")
    position = {old: new for new, old in enumerate(order)}
    constants: dict[tuple[int, int, int], int] = {}
    for (i, j, k), value in ring.constants.items():
        if i in position and j in position:
            if k not in position:
                raise ValueError(f"{ring.label_set(order)} is not closed under products")
            constants[(position[i], position[j], position[k])] = value
    try:
        dual = tuple(position[ring.dual[i]] for i in order)
    except KeyError as exc:
        raise ValueError(f"{ring.label_set(order)} is not closed under duals") from exc
    return FusionRing(
        name=f"{ring.name}{ring.label_set(order)}",
        labels=tuple(ring.labels[i] for i in order),
        dual=dual,
        constants=constants,
    )
