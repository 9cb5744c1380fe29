import logging
from collections.abc import Iterable

from .models import FusionRing, MemberSet, Subring
from .ring_core import product_support

logger = logging.getLogger(__name__)


def is_subring(ring: FusionRing, members: Iterable[int]) -> bool:
    members = set(members)
    if ring.unit not in members:
        return False
    if any(not 0 <= i < ring.rank for i in members):
        return False
    if any(ring.dual[i] not in members for i in members):
        return False
    return product_support(ring, members, members) <= members


def make_subring(ring: FusionRing, members: Iterable[int]) -> Subring:
    members = set(members)
    if not is_subring(ring, members):
        raise ValueError(f"{ring.label_set(m for m in members if 0 <= m < ring.rank)} is not a subring of {ring.name}")
    return Subring(ring, tuple(sorted(members)))


def trivial_subring(ring: FusionRing) -> Subring:
    return Subring(ring, (ring.unit,))


def full_subring(ring: FusionRing) -> Subring:
    return Subring(ring, tuple(ring.basis))


def close_generated(ring: FusionRing, generators: Iterable[int]) -> Subring:
    members = {ring.unit}
    for g in generators:
        if not 0 <= g < ring.rank:
            raise ValueError(f"basis index {g} out of range")
        members.add(g)
    while True:
        grown = members | {ring.dual[i] for i in members} | product_support(ring, members, members)
        if grown == members:
            return Subring(ring, tuple(sorted(members)))
        members = grown


def adjoint_subring(ring: FusionRing) -> Subring:
    generators: set[int] = set()
    for i in ring.basis:
        generators.update(ring.product(i, ring.dual[i]))
    return close_generated(ring, generators)


def _same_ring(a: Subring, b: Subring) -> None:
    if a.ring != b.ring:
        raise ValueError("subrings belong to different rings")


def intersect(a: Subring, b: Subring) -> Subring:
    _same_ring(a, b)
    return Subring(a.ring, tuple(sorted(set(a.members) & set(b.members))))


def join(a: Subring, b: Subring) -> Subring:
    _same_ring(a, b)
    return close_generated(a.ring, set(a.members) | set(b.members))


def _power_lands_in(ring: FusionRing, x: int, target: set[int]) -> bool:
    current = frozenset({x})
    seen: set[frozenset[int]] = set()
    while current not in seen:
        if current <= target:
            return True
        seen.add(current)
        current = frozenset(product_support(ring, current, (x,)))
    return False


def radical(ring: FusionRing, d: Subring) -> MemberSet:
    """Basis elements some tensor power of which lies entirely in d."""
    target = set(d.members)
    members = tuple(x for x in ring.basis if _power_lands_in(ring, x, target))
    return MemberSet(members=members, is_subring=is_subring(ring, members))


def commutator(ring: FusionRing, d: Subring) -> MemberSet:
    target = set(d.members)
    members = tuple(
        x for x in ring.basis if set(ring.product(x, ring.dual[x])) <= target
    )
    return MemberSet(members=members, is_subring=is_subring(ring, members))


def subrings_containing(ring: FusionRing, base: Subring, cap: int | None = None) -> list[Subring]:
    """Every subring containing base, found by closing base under one extra generator at a time."""
    if cap is not None and ring.rank > cap:
        raise ValueError(f"rank {ring.rank} exceeds the subring enumeration cap {cap}")
    found = {base.members: base}
    frontier = [base]
    while frontier:
        grown: list[Subring] = []
        for sub in frontier:
            for x in ring.basis:
                if x in sub:
                    continue
                candidate = close_generated(ring, set(sub.members) | {x})
                if candidate.members not in found:
                    found[candidate.members] = candidate
                    grown.append(candidate)
        frontier = grown
    logger.debug("%s: %d subrings above %s", ring.name, len(found), base.label)
    return sorted(found.values(), key=lambda s: (len(s.members), s.members))


def all_subrings(ring: FusionRing, cap: int | None = None) -> list[Subring]:
    return subrings_containing(ring, trivial_subring(ring), cap)
