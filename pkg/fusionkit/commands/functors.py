import logging
from pathlib import Path

from ..command_support.fixture_loading import _load_functor
from ..command_support.output import _checks_failed, _emit
from ..command_support.settings_access import current_settings
from ..fp_numerics import compute_fp_dims
from ..functors import analyze_functor, validate_functor
from ..schemas import FunctorPayload
from ..verifier import functor_checks
from .rings import _violations_out

logger = logging.getLogger(__name__)


def _blocks(ring, classes) -> list[list[str]]:
    return [[ring.labels[i] for i in block] for block in classes]


def functor_command(args) -> int:
    settings = current_settings(args)
    f = _load_functor(args.file, args.rings)
    violations = validate_functor(f)
    payload = FunctorPayload(
        functor=f.name,
        source=f.source.name,
        target=f.target.name,
        valid=not violations,
        violations=_violations_out(violations),
    )
    if violations:
        _emit(payload, "functor.txt.j2", as_json=args.json)
        return 1

    fp_src = compute_fp_dims(f.source, settings.iter_tol, settings.max_iter, residual_gate=settings.residual_gate)
    fp_tgt = compute_fp_dims(f.target, settings.iter_tol, settings.max_iter, residual_gate=settings.residual_gate)
    analysis = analyze_functor(f, fp_src, fp_tgt)
    payload.kernel = [f.source.labels[i] for i in analysis.kernel.members]
    payload.dominant_image = [f.target.labels[j] for j in analysis.dominant_image.members]
    payload.up_classes = _blocks(f.source, analysis.up_classes)
    payload.down_classes = _blocks(f.target, analysis.down_classes)
    payload.up_transitive = analysis.sim_up_transitive
    payload.is_normal = analysis.is_normal
    payload.is_dominant = analysis.is_dominant
    payload.index = analysis.index

    if args.analyze:
        checks, warnings = functor_checks(Path(args.file).name, f, fp_src, fp_tgt, settings)
        payload.checks = sorted(checks, key=lambda c: c.name)
        for warning in warnings:
            logger.warning(warning)
    _emit(payload, "functor.txt.j2", as_json=args.json)
    return 1 if _checks_failed(payload.checks) else 0


def register(subparsers, common) -> None:
    functor = subparsers.add_parser("functor", parents=[common], help="analyze a ring-level functor")
    functor.add_argument("file")
    functor.add_argument("--rings", nargs="+", help="ring files the functor refers to")
    functor.add_argument("--analyze", action="store_true", help="run every functor check")
    functor.set_defaults(handler=functor_command)
