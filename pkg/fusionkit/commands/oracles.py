from ..command_support.argument_parsing import _parse_index_list
from ..command_support.fixture_loading import _load_group
from ..command_support.output import _emit
from ..corpus import group_double_cosets_oracle
from ..schemas import BlocksPayload


def double_cosets_command(args) -> int:
    group = _load_group(args.file)
    labels = group.element_labels()
    k = _parse_index_list(args.k, labels, field_name="--k")
    l = _parse_index_list(args.l, labels, field_name="--l")
    blocks = group_double_cosets_oracle(group, k, l)
    payload = BlocksPayload(
        group=group.name,
        k=[labels[i] for i in k],
        l=[labels[i] for i in l],
        blocks=[[labels[i] for i in block] for block in blocks],
    )
    _emit(payload, "blocks.txt.j2", as_json=args.json)
    return 0


def register(subparsers, common) -> None:
    oracle = subparsers.add_parser("oracle", help="brute-force group oracles")
    kinds = oracle.add_subparsers(dest="oracle_kind", required=True)

    double = kinds.add_parser("double-cosets", parents=[common], help="K x L by enumeration")
    double.add_argument("file")
    double.add_argument("--k", required=True)
    double.add_argument("--l", required=True)
    double.set_defaults(handler=double_cosets_command)
