from pathlib import Path

from ..command_support.argument_parsing import _parse_subring_spec
from ..command_support.output import _checks_failed, _emit
from ..command_support.settings_access import current_settings
from ..cosets import (
    bimodule_stability_check,
    coset_eigenvalue,
    coset_product_formula,
    double_cosets,
    symmetry_check,
    verify_principal_eigendata,
)
from ..fp_numerics import compute_fp_dims
from ..schemas import CheckEntry, CosetPayload
from .subrings import _labels, _load_valid_ring


def cosets_command(args) -> int:
    settings = current_settings(args)
    ring = _load_valid_ring(args.file)
    left = _parse_subring_spec(ring, args.left, field_name="--left")
    right = _parse_subring_spec(ring, args.right, field_name="--right")
    fp = compute_fp_dims(
        ring, settings.iter_tol, settings.max_iter, residual_gate=settings.residual_gate
    )
    dec = double_cosets(ring, left, right, fp)

    checks: list[CheckEntry] = []
    if args.verify:
        fixture = Path(args.file).name
        results = [symmetry_check(dec, settings.assert_tol)]
        results.extend(
            verify_principal_eigendata(
                dec, fp, settings.assert_tol, iter_tol=settings.iter_tol, max_iter=settings.max_iter
            )
        )
        results.append(bimodule_stability_check(dec))
        for result in results:
            checks.append(
                CheckEntry(
                    fixture=fixture,
                    name=result.name,
                    status=result.status,
                    detail=result.detail,
                    residual=result.residual,
                )
            )
        for x in ring.basis:
            formula = coset_product_formula(dec, fp, x, settings.residual_gate)
            checks.append(
                CheckEntry(
                    fixture=fixture,
                    name=f"formula[{ring.labels[x]}]",
                    status="pass" if formula.passed else "fail",
                    detail=f"c = {formula.scalar:.12g}",
                    residual=formula.residual,
                )
            )

    payload = CosetPayload(
        ring=ring.name,
        left=_labels(ring, left.members),
        right=_labels(ring, right.members),
        blocks=[_labels(ring, block) for block in dec.classes],
        eigenvalue=coset_eigenvalue(dec, fp),
        checks=checks,
    )
    _emit(payload, "cosets.txt.j2", as_json=args.json)
    return 1 if _checks_failed(checks) else 0


def register(subparsers, common) -> None:
    cosets = subparsers.add_parser("cosets", parents=[common], help="double coset decomposition")
    cosets.add_argument("file")
    cosets.add_argument("--left", help="left subring, default trivial")
    cosets.add_argument("--right", help="right subring, default trivial")
    cosets.add_argument("--verify", action="store_true", help="run the eigenvalue and formula checks")
    cosets.set_defaults(handler=cosets_command)
