from ..command_support.argument_parsing import _parse_subring_spec
from ..command_support.fixture_loading import _load_ring
from ..command_support.output import _emit
from ..ring_core import validate_ring
from ..schemas import MemberSetPayload
from ..subrings import adjoint_subring, commutator, full_subring, radical


def _labels(ring, members) -> list[str]:
    return [ring.labels[i] for i in sorted(members)]


def _load_valid_ring(path):
    ring = _load_ring(path)
    if validate_ring(ring):
        raise ValueError(f"{ring.name} fails the ring axioms; run validate")
    return ring


def _member_set_command(args, operation: str) -> int:
    ring = _load_valid_ring(args.file)
    if operation == "adjoint":
        sub = full_subring(ring)
        result = adjoint_subring(ring)
        members, is_sub = result.members, True
    else:
        sub = _parse_subring_spec(ring, args.sub)
        found = radical(ring, sub) if operation == "radical" else commutator(ring, sub)
        members, is_sub = found.members, found.is_subring
    payload = MemberSetPayload(
        ring=ring.name,
        operation=operation,
        subring=_labels(ring, sub.members),
        members=_labels(ring, members),
        is_subring=is_sub,
    )
    _emit(payload, "member_set.txt.j2", as_json=args.json)
    return 0


def radical_command(args) -> int:
    return _member_set_command(args, "radical")


def commutator_command(args) -> int:
    return _member_set_command(args, "commutator")


def adjoint_command(args) -> int:
    return _member_set_command(args, "adjoint")


def register(subparsers, common) -> None:
    for name, handler in (("radical", radical_command), ("commutator", commutator_command)):
        parser = subparsers.add_parser(name, parents=[common], help=f"{name} of a subring")
        parser.add_argument("file")
        parser.add_argument("--sub", required=True, help="members 0,1,4 or gen=2,3")
        parser.set_defaults(handler=handler)

    adjoint = subparsers.add_parser("adjoint", parents=[common], help="adjoint subring")
    adjoint.add_argument("file")
    adjoint.set_defaults(handler=adjoint_command)
