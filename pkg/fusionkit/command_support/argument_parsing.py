from collections.abc import Sequence

from ..models import FusionRing, Subring
from ..subrings import close_generated, make_subring, trivial_subring


class UsageError(ValueError):
    pass


def _parse_index_list(text: str, labels: Sequence[str], *, field_name: str) -> tuple[int, ...]:
    """Comma separated members; integer tokens are indices, anything else a label."""
    tokens = [token.strip() for token in text.split(",")]
    if not text.strip() or any(not token for token in tokens):
        raise UsageError(f"{field_name} must be a comma separated list")
    indices = []
    for token in tokens:
        if token.isdigit():
            index = int(token)
            if index >= len(labels):
                raise UsageError(f"{field_name}: index {index} out of range")
        elif token in labels:
            index = labels.index(token)
        else:
            raise UsageError(f"{field_name}: unknown label {token!r}")
        indices.append(index)
    return tuple(sorted(set(indices)))


def _parse_subring_spec(ring: FusionRing, spec: str | None, *, field_name: str = "--sub") -> Subring:
    if spec is None:
        return trivial_subring(ring)
    if spec.startswith("gen="):
        generators = _parse_index_list(spec[len("gen="):], ring.labels, field_name=field_name)
        return close_generated(ring, generators)
    members = _parse_index_list(spec, ring.labels, field_name=field_name)
    try:
        return make_subring(ring, members)
    except ValueError as exc:
        raise UsageError(f"{field_name}: {exc}") from exc
