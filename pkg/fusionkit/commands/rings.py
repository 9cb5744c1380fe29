import logging
from pathlib import Path

from ..command_support.fixture_loading import _load_functor, _load_group, _load_ring
from ..command_support.output import _emit
from ..command_support.settings_access import current_settings
from ..corpus import validate_group
from ..fp_numerics import compute_fp_dims
from ..functors import validate_functor
from ..ring_core import validate_ring
from ..schemas import FPDimPayload, ValidationPayload, ViolationOut

logger = logging.getLogger(__name__)


def _violations_out(violations) -> list[ViolationOut]:
    return [ViolationOut(axiom=v.axiom, witness=list(v.witness), detail=v.detail) for v in violations]


def validate_command(args) -> int:
    path = Path(args.file)
    if path.suffix == ".functor":
        functor = _load_functor(path, args.rings)
        kind, name, violations = "functor", functor.name, validate_functor(functor)
    elif path.suffix == ".group":
        group = _load_group(path)
        kind, name, violations = "group", group.name, validate_group(group)
    else:
        ring = _load_ring(path)
        kind, name, violations = "ring", ring.name, validate_ring(ring)
    logger.info("%s %s: %d violations", kind, name, len(violations))
    payload = ValidationPayload(
        kind=kind, name=name, valid=not violations, violations=_violations_out(violations)
    )
    _emit(payload, "validation.txt.j2", as_json=args.json)
    return 0 if payload.valid else 1


def fpdim_command(args) -> int:
    settings = current_settings(args, iteration=True)
    ring = _load_ring(args.file)
    if validate_ring(ring):
        raise ValueError(f"{ring.name} fails the ring axioms; run validate")
    fp = compute_fp_dims(
        ring,
        settings.iter_tol,
        settings.max_iter,
        seed=args.seed,
        residual_gate=settings.residual_gate,
    )
    payload = FPDimPayload(
        ring=ring.name,
        labels=list(ring.labels),
        dims=list(fp.dims),
        ring_dim=fp.ring_dim,
        residual=fp.residual,
        iterations=fp.iterations,
    )
    _emit(payload, "fpdim.txt.j2", as_json=args.json)
    return 0


def register(subparsers, common) -> None:
    validate = subparsers.add_parser("validate", parents=[common], help="check ring, functor or group axioms")
    validate.add_argument("file")
    validate.add_argument("--rings", nargs="+", help="ring files a functor refers to")
    validate.set_defaults(handler=validate_command)

    fpdim = subparsers.add_parser("fpdim", parents=[common], help="Frobenius-Perron dimensions")
    fpdim.add_argument("file")
    fpdim.set_defaults(handler=fpdim_command)
