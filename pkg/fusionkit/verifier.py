import itertools
import logging
from pathlib import Path

import numpy as np

from .corpus import (
    group_double_cosets_oracle,
    group_ring,
    is_normal_subgroup,
    load_corpus,
    quotient_functor,
    subgroups,
    validate_group,
)
from .cosets import (
    bimodule_stability_check,
    coset_product_formula,
    double_cosets,
    symmetry_check,
    verify_principal_eigendata,
)
from .fp_numerics import check_regular_absorption, compute_fp_dims
from .functors import (
    adjoint_module_check,
    apply,
    apply_adjoint,
    centrality_check,
    converse_scan,
    disjoint_or_equal_check,
    dominant_analysis_any,
    dominant_image,
    down_relation,
    invertible_product_check,
    is_normal,
    kernel,
    literal_power_classes,
    normal_image_description,
    normality_witnesses,
    radical_commutator_check,
    self_trivializing_check,
    unit_adjoint_check,
    unit_adjoint_cosets_check,
    up_relation,
    validate_functor,
)
from .gradings import (
    component_dims_check,
    coset_grading,
    explicit_grading,
    intermediate_subring_map,
    refinement_check,
    universal_grading,
    verify_normal_extension,
)
from .models import CheckResult, FiniteGroup, FPData, FusionRing, Grading, RingFunctor, Subring, Violation
from .ring_core import basis_element, dual_element, form_m, multiply, validate_ring
from .schemas import CheckEntry, Report
from .settings import Settings
from .subrings import all_subrings

logger = logging.getLogger(__name__)


class _Collector:
    def __init__(self, fixture: str, checks: list[CheckEntry]):
        self.fixture = fixture
        self.checks = checks

    def add(self, name: str, status: str, detail: str = "", residual: float | None = None) -> bool:
        self.checks.append(
            CheckEntry(fixture=self.fixture, name=name, status=status, detail=detail, residual=residual)
        )
        return status != "fail"

    def result(self, result: CheckResult, prefix: str = "") -> bool:
        return self.add(prefix + result.name, result.status, result.detail, result.residual)

    def combine(self, name: str, results: list[CheckResult], detail: str = "") -> bool:
        failed = [r for r in results if r.status == "fail"]
        residuals = [r.residual for r in results if r.residual is not None]
        if failed:
            detail = "; ".join(f"{r.name}: {r.detail}".rstrip(": ") for r in failed[:3])
        return self.add(
            name,
            "fail" if failed else "pass",
            detail,
            max(residuals) if residuals else None,
        )


def _describe_violations(violations: list[Violation]) -> str:
    first: dict[str, Violation] = {}
    for v in violations:
        first.setdefault(v.axiom, v)
    return "; ".join(f"{axiom} at {v.witness}" for axiom, v in first.items())


def _form_m_check(ring: FusionRing) -> CheckResult:
    failures = 0
    basis = [basis_element(ring, i) for i in ring.basis]
    for a, b, c in itertools.product(basis, repeat=3):
        value = form_m(a, multiply(b, c))
        if value != form_m(dual_element(b), multiply(c, dual_element(a))) or value != form_m(
            dual_element(c), multiply(dual_element(a), b)
        ):
            failures += 1
    for a, b in itertools.product(basis, repeat=2):
        if not form_m(a, b) == form_m(b, a) == form_m(dual_element(b), dual_element(a)):
            failures += 1
    return CheckResult(
        name="form-m",
        status="fail" if failures else "pass",
        detail=f"{failures} failing tuples" if failures else "",
    )


def _pairs(subs: list[Subring], settings: Settings, rank: int) -> list[tuple[Subring, Subring]]:
    pairs = list(itertools.product(subs, repeat=2))
    if rank <= settings.pair_enum_rank or len(pairs) <= settings.pair_sample:
        return pairs
    rng = np.random.default_rng(settings.seed)
    picked = sorted(rng.choice(len(pairs), size=settings.pair_sample, replace=False))
    return [pairs[int(k)] for k in picked]


def _coset_checks(out: _Collector, ring: FusionRing, fp: FPData, settings: Settings) -> None:
    if ring.rank > settings.subring_enum_cap:
        logger.warning("%s: rank %d above the subring cap, skipping coset pairs", ring.name, ring.rank)
        out.add("coset-pairs", "skip", f"rank above {settings.subring_enum_cap}")
        return
    pairs = _pairs(all_subrings(ring), settings, ring.rank)
    symmetry, eigen, formula, stability = [], [], [], []
    for d, e in pairs:
        dec = double_cosets(ring, d, e, fp)
        tag = f"{d.label}|{e.label}"
        symmetry.append(_tagged(symmetry_check(dec, settings.assert_tol), tag))
        for result in verify_principal_eigendata(
            dec, fp, settings.assert_tol, iter_tol=settings.iter_tol, max_iter=settings.max_iter
        ):
            eigen.append(_tagged(result, tag))
        for x in ring.basis:
            res = coset_product_formula(dec, fp, x, settings.residual_gate)
            formula.append(
                CheckResult(
                    name=f"{tag} x={ring.labels[x]}",
                    status="pass" if res.passed else "fail",
                    residual=res.residual,
                )
            )
        stability.append(_tagged(bimodule_stability_check(dec), tag))
    detail = f"{len(pairs)} pairs"
    out.combine("coset-symmetry", symmetry, detail)
    out.combine("coset-eigendata", eigen, detail)
    out.combine("coset-formula", formula, detail)
    out.combine("coset-bimodule", stability, detail)


def _tagged(result: CheckResult, tag: str) -> CheckResult:
    return CheckResult(name=f"{tag} {result.name}", status=result.status, detail=result.detail, residual=result.residual)


def _grading_checks(out: _Collector, prefix: str, grading: Grading, fp: FPData, settings: Settings) -> None:
    ring = grading.ring
    out.add(
        f"{prefix}-grading",
        "pass",
        " ".join(ring.label_set(block) for block in grading.components),
    )
    out.result(component_dims_check(grading, fp, settings.assert_tol), f"{prefix}-")
    out.result(refinement_check(grading, fp, settings.subring_enum_cap), f"{prefix}-")
    mapping = intermediate_subring_map(ring, grading, settings.subring_enum_cap)
    if mapping.surjective is None:
        status = "skip" if mapping.injective else "fail"
    else:
        status = "pass" if mapping.injective and mapping.surjective else "fail"
    out.add(f"{prefix}-intermediate-subrings", status, f"{len(mapping.entries)} subgroups")


def _verify_ring(out: _Collector, ring: FusionRing, settings: Settings) -> FPData | None:
    violations = validate_ring(ring)
    if not out.add("axioms", "fail" if violations else "pass", _describe_violations(violations)):
        return None
    try:
        fp = compute_fp_dims(
            ring, settings.iter_tol, settings.max_iter, residual_gate=settings.residual_gate
        )
        seeded = compute_fp_dims(
            ring,
            settings.iter_tol,
            settings.max_iter,
            seed=settings.seed,
            residual_gate=settings.residual_gate,
        )
    except ValueError as exc:
        out.add("fp-dims", "fail", str(exc))
        return None
    dims_ok = all(d >= 1.0 - settings.assert_tol for d in fp.dims) and all(
        abs(fp.dims[i] - fp.dims[ring.dual[i]]) <= settings.assert_tol for i in ring.basis
    )
    out.add(
        "fp-dims",
        "pass" if dims_ok else "fail",
        " ".join(f"{d:.10g}" for d in fp.dims),
        fp.residual,
    )
    drift = max(abs(a - b) for a, b in zip(fp.dims, seeded.dims))
    out.add("fp-start-independence", "pass" if drift <= 10 * settings.iter_tol else "fail", residual=drift)
    out.result(_form_m_check(ring))
    out.combine("regular-absorption", check_regular_absorption(ring, fp, settings.residual_gate))
    _guarded(out, "coset-pairs", lambda: _coset_checks(out, ring, fp, settings))
    _guarded(
        out,
        "universal-grading",
        lambda: _grading_checks(out, "universal", universal_grading(ring, fp), fp, settings),
    )
    if ring.grades is not None:
        _guarded(
            out,
            "explicit-grading",
            lambda: _grading_checks(out, "explicit", explicit_grading(ring), fp, settings),
        )
    return fp


def _guarded(out: _Collector, name: str, step) -> None:
    try:
        step()
    except (ValueError, RuntimeError) as exc:
        logger.error("%s: %s failed: %s", out.fixture, name, exc)
        out.add(name, "fail", str(exc))


def _verify_group(out: _Collector, g: FiniteGroup, settings: Settings, warnings: list[str]) -> None:
    violations = validate_group(g)
    if not out.add("group-axioms", "fail" if violations else "pass", _describe_violations(violations)):
        return
    if g.order > settings.group_oracle_cap:
        message = f"{out.fixture}: order {g.order} above {settings.group_oracle_cap}, group-ring checks skipped"
        logger.warning(message)
        warnings.append(message)
        out.add("group-ring", "skip", f"order above {settings.group_oracle_cap}")
        return

    ring = group_ring(g)
    ring_violations = validate_ring(ring)
    if not out.add("group-ring-axioms", "fail" if ring_violations else "pass", _describe_violations(ring_violations)):
        return
    fp = compute_fp_dims(ring, settings.iter_tol, settings.max_iter, residual_gate=settings.residual_gate)
    ones = max(abs(d - 1.0) for d in fp.dims)
    out.add(
        "group-ring-fp",
        "pass" if ones <= settings.assert_tol and abs(fp.ring_dim - g.order) <= settings.assert_tol else "fail",
        residual=ones,
    )

    subs = subgroups(g)
    mismatched = []
    for k, l in itertools.product(subs, repeat=2):
        blocks = double_cosets(ring, Subring(ring, k), Subring(ring, l), fp).classes
        if blocks != group_double_cosets_oracle(g, k, l):
            mismatched.append(f"{k}|{l}")
    out.add(
        "double-coset-oracle",
        "fail" if mismatched else "pass",
        "; ".join(mismatched[:3]) or f"{len(subs) ** 2} subgroup pairs",
    )

    central = []
    for h in subs:
        if centrality_check(ring, Subring(ring, h), fp, settings.assert_tol) != is_normal_subgroup(g, h):
            central.append(str(h))
    out.add("centrality", "fail" if central else "pass", " ".join(central))

    quotients: list[CheckResult] = []
    extensions: list[CheckResult] = []
    dominant: list[CheckResult] = []
    for n in (h for h in subs if is_normal_subgroup(g, h)):
        functor, target = quotient_functor(g, n)
        tag = str(n)
        ok = not validate_functor(functor) and is_normal(functor) and kernel(functor).members == n
        quotients.append(CheckResult(name=tag, status="pass" if ok else "fail"))
        if not ok:
            continue
        fp_target = compute_fp_dims(target, settings.iter_tol, settings.max_iter)
        grading = coset_grading(ring, Subring(ring, n), fp)
        extensions.extend(_tagged(r, tag) for r in verify_normal_extension(ring, grading, functor, fp))
        report = dominant_analysis_any(functor, fp, fp_target, settings.assert_tol)
        dominant.extend(_tagged(r, tag) for r in report.checks)
    out.combine("quotient-functors", quotients, f"{len(quotients)} normal subgroups")
    out.combine("normal-extensions", extensions)
    out.combine("quotient-dominant", dominant)

    pointed = universal_grading(ring, fp)
    same_table = pointed.group_table == g.table
    mapping = intermediate_subring_map(ring, pointed, settings.subring_enum_cap)
    bijective = same_table and mapping.injective and bool(mapping.surjective) and len(mapping.entries) == len(subs)
    out.add("pointed-grading", "pass" if bijective else "fail", f"{len(mapping.entries)} subgroups")


def _verify_functor(
    out: _Collector,
    f: RingFunctor,
    fps: dict[str, FPData],
    groups: dict[str, FiniteGroup],
    settings: Settings,
    warnings: list[str],
) -> None:
    fp_src = fps.get(f.source.name)
    fp_tgt = fps.get(f.target.name)
    if fp_src is None or fp_tgt is None:
        out.add("functor-axioms", "skip", "source or target ring failed its checks")
        return
    violations = validate_functor(f)
    if not out.add("functor-axioms", "fail" if violations else "pass", _describe_violations(violations)):
        return
    tol = settings.assert_tol
    out.result(adjoint_module_check(f))

    up = up_relation(f)
    symmetric = all(up.sim[i][j] == up.sim[j][i] for i in f.source.basis for j in f.source.basis)
    images = [set(apply(f, basis_element(f.source, i)).support) for i in f.source.basis]
    preimages = [set(apply_adjoint(f, basis_element(f.target, j)).support) for j in f.target.basis]
    adjoint_ok = all(
        (j in images[i]) == (i in preimages[j]) for i in f.source.basis for j in f.target.basis
    )
    out.add(
        "up-relation",
        "pass" if symmetric and adjoint_ok else "fail",
        f"classes {' '.join(f.source.label_set(b) for b in up.classes)} transitive={up.transitive}",
    )
    out.result(unit_adjoint_cosets_check(f, fp_src))

    def down_step() -> None:
        down = down_relation(f)
        image = set(dominant_image(f).members)
        on_image = tuple(b for b in down.classes if b[0] in image)
        out.add("down-relation", "pass", " ".join(f.target.label_set(b) for b in on_image))
        if literal_power_classes(f) != on_image:
            message = f"{out.fixture}: F(R(1)) power classes differ from the down classes"
            logger.warning(message)
            warnings.append(message)

    _guarded(out, "down-relation", down_step)

    try:
        normal = is_normal(f)
    except RuntimeError as exc:
        out.add("normality", "fail", str(exc))
        return
    witnesses = normality_witnesses(f)
    out.add("normality", "pass", " ".join(f"{k}={v}" for k, v in witnesses.items()))

    if f.subgroup is not None:
        group_name, members = f.subgroup
        group = groups.get(group_name)
        if group is None:
            out.add("normality-oracle", "skip", f"group {group_name} not in corpus")
        else:
            expected = is_normal_subgroup(group, members)
            out.add(
                "normality-oracle",
                "pass" if expected == normal else "fail",
                f"subgroup normal={expected} functor normal={normal}",
            )

    for result in disjoint_or_equal_check(f):
        out.result(result)
    out.result(invertible_product_check(f))
    _guarded(
        out,
        "dominant",
        lambda: out.combine(
            "dominant",
            list(dominant_analysis_any(f, fp_src, fp_tgt, tol).checks),
        ),
    )

    if normal:
        for result in normal_image_description(f, fp_src, fp_tgt, tol):
            out.result(result)
        out.result(unit_adjoint_check(f, fp_src, tol))
        out.result(radical_commutator_check(f))
        out.result(self_trivializing_check(f, fp_src, tol))
        central = centrality_check(f.source, kernel(f), fp_src, tol)
        out.add("kernel-central", "pass" if central else "fail")

    note = converse_scan(f)
    out.add("converse-scan", "pass", note or "")


def functor_checks(
    fixture: str, f: RingFunctor, fp_src: FPData, fp_tgt: FPData, settings: Settings
) -> tuple[list[CheckEntry], list[str]]:
    checks: list[CheckEntry] = []
    warnings: list[str] = []
    fps = {f.source.name: fp_src, f.target.name: fp_tgt}
    _verify_functor(_Collector(fixture, checks), f, fps, {}, settings, warnings)
    return checks, warnings


def verify_corpus(directory: Path | str, settings: Settings) -> Report:
    corpus = load_corpus(directory)
    checks: list[CheckEntry] = []
    warnings: list[str] = []
    if not (corpus.rings or corpus.functors or corpus.groups):
        warnings.append(f"no fixtures found in {directory}")

    fps: dict[str, FPData] = {}
    for fixture, ring in sorted(corpus.rings.values(), key=lambda item: item[0]):
        fp = _verify_ring(_Collector(fixture, checks), ring, settings)
        if fp is not None:
            fps[ring.name] = fp

    groups_by_name = {g.name: g for _, g in corpus.groups.values()}
    for fixture, (_, g) in sorted(corpus.groups.items()):
        out = _Collector(fixture, checks)
        _guarded(out, "group", lambda out=out, g=g: _verify_group(out, g, settings, warnings))

    for fixture, (_, f) in sorted(corpus.functors.items()):
        out = _Collector(fixture, checks)
        _guarded(out, "functor", lambda out=out, f=f: _verify_functor(out, f, fps, groups_by_name, settings, warnings))

    checks.sort(key=lambda c: (c.fixture, c.name))
    status = "fail" if any(c.status == "fail" for c in checks) else "pass"
    logger.info("verify-corpus: %d checks, status %s", len(checks), status)
    return Report(command="verify-corpus", checks=checks, status=status, warnings=warnings)
