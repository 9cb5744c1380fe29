import logging
from pathlib import Path

from ..command_support.argument_parsing import _parse_index_list
from ..command_support.fixture_loading import _load_group
from ..corpus import group_ring, quotient_functor
from ..services.functor_files import format_functor
from ..services.ring_files import format_ring

logger = logging.getLogger(__name__)


def _slug(name: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in name).strip("_").lower()


def _write_or_print(texts: list[tuple[str, str]], out_dir: str | None) -> None:
    if out_dir is None:
        print("\n".join(text for _, text in texts), end="")
        return
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    for filename, text in texts:
        path = directory / filename
        path.write_text(text, encoding="utf-8")
        logger.info("wrote %s", path)


def group_ring_command(args) -> int:
    group = _load_group(args.file)
    ring = group_ring(group)
    _write_or_print([(f"{_slug(ring.name)}.ring", format_ring(ring))], args.out_dir)
    return 0


def quotient_functor_command(args) -> int:
    group = _load_group(args.file)
    members = _parse_index_list(args.n, group.element_labels(), field_name="--n")
    functor, target = quotient_functor(group, members)
    _write_or_print(
        [
            (f"{_slug(functor.source.name)}.ring", format_ring(functor.source)),
            (f"{_slug(target.name)}.ring", format_ring(target)),
            (f"{_slug(functor.name)}.functor", format_functor(functor)),
        ],
        args.out_dir,
    )
    return 0


def register(subparsers, common) -> None:
    gen = subparsers.add_parser("gen", help="generate fixtures from group tables")
    kinds = gen.add_subparsers(dest="gen_kind", required=True)

    ring = kinds.add_parser("group-ring", parents=[common], help="Z[G] as a fusion ring")
    ring.add_argument("file")
    ring.add_argument("--out-dir", help="write files here instead of stdout")
    ring.set_defaults(handler=group_ring_command)

    quotient = kinds.add_parser("quotient-functor", parents=[common], help="Z[G] -> Z[G/N]")
    quotient.add_argument("file")
    quotient.add_argument("--n", required=True, help="normal subgroup, indices or labels")
    quotient.add_argument("--out-dir", help="write files here instead of stdout")
    quotient.set_defaults(handler=quotient_functor_command)
