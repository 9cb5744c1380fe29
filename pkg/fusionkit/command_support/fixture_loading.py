import logging
from pathlib import Path

from ..models import FiniteGroup, FusionRing, RingFunctor
from ..services.functor_files import load_functor_file
from ..services.group_files import load_group_file
from ..services.ring_files import load_ring_file

logger = logging.getLogger(__name__)


def _load_ring(path: str | Path) -> FusionRing:
    return load_ring_file(path)


def _load_group(path: str | Path) -> FiniteGroup:
    return load_group_file(path)


def _load_rings(paths) -> dict[str, FusionRing]:
    rings: dict[str, FusionRing] = {}
    for path in paths:
        ring = load_ring_file(path)
        rings[ring.name] = ring
    return rings


def _load_functor(path: str | Path, ring_paths=None, *, extra: dict[str, FusionRing] | None = None) -> RingFunctor:
    """Load a functor file; without explicit ring files the rings next to it are used."""
    path = Path(path)
    if ring_paths:
        rings = _load_rings(ring_paths)
    else:
        siblings = sorted(path.parent.glob("*.ring"))
        logger.info("resolving %s against %d ring files in %s", path.name, len(siblings), path.parent)
        rings = _load_rings(siblings)
    if extra:
        rings.update(extra)
    return load_functor_file(path, rings)
