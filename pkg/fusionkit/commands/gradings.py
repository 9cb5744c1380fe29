from pathlib import Path

from ..command_support.argument_parsing import _parse_subring_spec
from ..command_support.fixture_loading import _load_functor
from ..command_support.output import _checks_failed, _emit
from ..command_support.settings_access import current_settings
from ..fp_numerics import compute_fp_dims
from ..gradings import (
    component_dims_check,
    coset_grading,
    explicit_grading,
    intermediate_subring_map,
    refinement_check,
    universal_grading,
    verify_normal_extension,
)
from ..schemas import CheckEntry, GradingComponent, GradingPayload
from .subrings import _labels, _load_valid_ring


def _entry(fixture: str, result) -> CheckEntry:
    return CheckEntry(
        fixture=fixture,
        name=result.name,
        status=result.status,
        detail=result.detail,
        residual=result.residual,
    )


def grading_command(args) -> int:
    settings = current_settings(args)
    ring = _load_valid_ring(args.file)
    fixture = Path(args.file).name
    fp = compute_fp_dims(ring, settings.iter_tol, settings.max_iter, residual_gate=settings.residual_gate)

    if args.explicit:
        source, grading = "explicit", explicit_grading(ring)
    elif args.trivial is not None:
        source = "cosets"
        grading = coset_grading(ring, _parse_subring_spec(ring, args.trivial, field_name="--trivial"), fp)
    else:
        source, grading = "universal", universal_grading(ring, fp)

    checks = [
        _entry(fixture, component_dims_check(grading, fp, settings.assert_tol)),
        _entry(fixture, refinement_check(grading, fp, settings.subring_enum_cap)),
    ]
    mapping = intermediate_subring_map(ring, grading, settings.subring_enum_cap)
    if mapping.surjective is None:
        status = "skip" if mapping.injective else "fail"
    else:
        status = "pass" if mapping.injective and mapping.surjective else "fail"
    checks.append(
        CheckEntry(
            fixture=fixture,
            name="intermediate-subrings",
            status=status,
            detail=" ".join(entry.subring.label for entry in mapping.entries),
        )
    )

    if args.verify_extension:
        witness = _load_functor(args.verify_extension, args.rings, extra={ring.name: ring})
        checks.extend(_entry(fixture, r) for r in verify_normal_extension(ring, grading, witness, fp))

    payload = GradingPayload(
        ring=ring.name,
        source=source,
        components=[
            GradingComponent(label=label, members=_labels(ring, block))
            for label, block in zip(grading.component_labels, grading.components)
        ],
        group_table=[list(row) for row in grading.group_table],
        subgroups=[list(entry.subgroup) for entry in mapping.entries],
        checks=checks,
    )
    _emit(payload, "grading.txt.j2", as_json=args.json)
    return 1 if _checks_failed(checks) else 0


def register(subparsers, common) -> None:
    grading = subparsers.add_parser("grading", parents=[common], help="universal or given grading")
    grading.add_argument("file")
    which = grading.add_mutually_exclusive_group()
    which.add_argument("--explicit", action="store_true", help="use the grade lines of the ring file")
    which.add_argument("--trivial", help="grade by the left cosets of this subring")
    grading.add_argument("--verify-extension", metavar="FUNCTOR", help="normal functor with kernel the trivial component")
    grading.add_argument("--rings", nargs="+", help="ring files the functor refers to")
    grading.set_defaults(handler=grading_command)
