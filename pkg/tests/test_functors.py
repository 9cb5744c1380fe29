import pytest

from fusionkit.fp_numerics import compute_fp_dims
from fusionkit.functors import (
    adjoint_module_check,
    analyze_functor,
    apply,
    apply_adjoint,
    converse_scan,
    disjoint_or_equal_check,
    dominant_analysis,
    dominant_analysis_any,
    dominant_corestriction,
    dominant_image,
    down_relation,
    identity_functor,
    invertible_image_set,
    invertible_product_check,
    is_dominant,
    is_normal,
    kernel,
    normal_image_description,
    normality_witnesses,
    radical_commutator_check,
    self_trivializing_check,
    unit_adjoint,
    unit_adjoint_check,
    unit_adjoint_cosets_check,
    up_relation,
    validate_functor,
)
from fusionkit.models import RingFunctor
from fusionkit.ring_core import basis_element, element_from_mapping

FUNCTOR_FIXTURES = [
    "res_s3_z3.functor",
    "res_s3_z2.functor",
    "res_s4_s3.functor",
    "res_s4_a4.functor",
    "res_a4_z3.functor",
    "res_d4_z4.functor",
    "res_q8_z4.functor",
    "res_d4_center.functor",
]
NORMAL = {
    "res_s3_z3.functor",
    "res_s4_a4.functor",
    "res_d4_z4.functor",
    "res_q8_z4.functor",
    "res_d4_center.functor",
}


def _fps(f):
    return compute_fp_dims(f.source), compute_fp_dims(f.target)


@pytest.mark.parametrize("filename", FUNCTOR_FIXTURES)
def test_shipped_functors_are_valid(functor, filename):
    f = functor(filename)
    assert validate_functor(f) == []
    assert adjoint_module_check(f).passed


@pytest.mark.parametrize("filename", FUNCTOR_FIXTURES)
def test_normality_matches_subgroup_normality(functor, filename):
    f = functor(filename)
    witnesses = normality_witnesses(f)
    assert len(set(witnesses.values())) == 1
    assert is_normal(f) is (filename in NORMAL)


@pytest.mark.parametrize(
    "filename,expected",
    [("res_s3_z3.functor", True), ("res_s3_z2.functor", False), ("res_s4_a4.functor", True), ("res_s4_s3.functor", False)],
)
def test_unit_adjoint_lies_in_the_kernel_exactly_when_normal(functor, filename, expected):
    assert normality_witnesses(functor(filename))["unit-preimage"] is expected


@pytest.mark.parametrize("filename", FUNCTOR_FIXTURES)
def test_up_classes_are_cosets_of_the_unit_adjoint(functor, filename):
    f = functor(filename)
    src_fp, _ = _fps(f)
    assert unit_adjoint_cosets_check(f, src_fp).passed


@pytest.mark.parametrize("filename", FUNCTOR_FIXTURES)
def test_disjoint_or_equal_tracks_normality(functor, filename):
    assert all(c.passed for c in disjoint_or_equal_check(functor(filename)))


@pytest.mark.parametrize("filename", FUNCTOR_FIXTURES)
def test_kernel_products_and_invertible_images(functor, filename):
    assert invertible_product_check(functor(filename)).passed


@pytest.mark.parametrize("filename", sorted(NORMAL))
def test_normal_functor_image_description(functor, filename):
    f = functor(filename)
    src_fp, tgt_fp = _fps(f)
    assert all(c.passed for c in normal_image_description(f, src_fp, tgt_fp, 1e-9))
    assert unit_adjoint_check(f, src_fp, 1e-9).passed
    assert radical_commutator_check(f).passed
    assert self_trivializing_check(f, src_fp, 1e-9).passed


@pytest.mark.parametrize("filename", FUNCTOR_FIXTURES)
def test_dominant_analysis(functor, filename):
    f = functor(filename)
    src_fp, tgt_fp = _fps(f)
    report = dominant_analysis_any(f, src_fp, tgt_fp, 1e-9)
    assert all(c.passed for c in report.checks)
    assert report.index == pytest.approx(src_fp.ring_dim / tgt_fp.ring_dim)


def test_restriction_s3_to_z3(functor):
    f = functor("res_s3_z3.functor")
    src_fp, tgt_fp = _fps(f)
    assert kernel(f).members == (0, 1)
    assert up_relation(f).classes == ((0, 1), (2,))
    assert down_relation(f).classes == ((0,), (1, 2))
    assert unit_adjoint(f) == element_from_mapping(f.source, {0: 1, 1: 1})

    report = dominant_analysis(f, src_fp, tgt_fp, 1e-9)
    assert report.index == pytest.approx(2.0)
    assert report.pairs == ((0, 0), (1, 1))
    assert report.constants == pytest.approx((1.0, 1.0))

    analysis = analyze_functor(f, src_fp, tgt_fp)
    assert analysis.is_normal and analysis.is_dominant and analysis.sim_up_transitive
    assert invertible_image_set(f) == (0, 1)


def test_restriction_s4_to_s3_up_relation_is_not_transitive(functor):
    f = functor("res_s4_s3.functor")
    up = up_relation(f)
    one, rho2, std3 = 0, 2, 3
    assert up.sim[one][std3] and up.sim[std3][rho2]
    assert not up.sim[one][rho2]
    assert not up.transitive
    assert unit_adjoint(f).support == (one, std3)
    assert converse_scan(f) is None


def test_center_restriction_kernel_is_pointed_part(functor):
    f = functor("res_d4_center.functor")
    assert kernel(f).members == (0, 1, 2, 3)
    assert apply(f, basis_element(f.source, 4)).coeffs == (0, 2)
    assert radical_commutator_check(f).passed


def test_apply_adjoint_is_transpose(functor):
    f = functor("res_a4_z3.functor")
    image = apply_adjoint(f, basis_element(f.target, 1))
    assert image.support == (1, 3)


def test_normal_only_operations_reject_non_normal(functor):
    f = functor("res_s3_z2.functor")
    src_fp, tgt_fp = _fps(f)
    with pytest.raises(ValueError, match="not normal"):
        normal_image_description(f, src_fp, tgt_fp, 1e-9)
    with pytest.raises(ValueError, match="not normal"):
        radical_commutator_check(f)


def test_identity_functor_is_normal_and_dominant(ring):
    f = identity_functor(ring("ising.ring"))
    assert validate_functor(f) == []
    assert is_normal(f) and is_dominant(f)
    assert kernel(f).members == (0,)


def _collapse_to_unit(source, target) -> RingFunctor:
    matrix = tuple(tuple(int(j == 0) for j in target.basis) for _ in source.basis)
    return RingFunctor(name="collapse", source=source, target=target, matrix=matrix)


def test_non_dominant_functor_uses_its_corestriction(ring):
    z2 = ring("rep_z2.ring")
    z4 = ring("rep_z4.ring")
    matrix = ((1, 0, 0, 0), (0, 0, 1, 0))
    f = RingFunctor(name="Inf(Z2,Z4)", source=z2, target=z4, matrix=matrix)
    assert validate_functor(f) == []
    assert dominant_image(f).members == (0, 2)
    assert not is_dominant(f)
    with pytest.raises(ValueError, match="not dominant"):
        dominant_analysis(f, compute_fp_dims(z2), compute_fp_dims(z4), 1e-9)

    corestricted = dominant_corestriction(f)
    assert corestricted.target.labels == ("1", "chi2")
    report = dominant_analysis_any(f, compute_fp_dims(z2), compute_fp_dims(z4), 1e-9)
    assert all(c.passed for c in report.checks)
    assert report.index == pytest.approx(1.0)


@pytest.mark.parametrize(
    "matrix,axiom",
    [
        (((1, 0), (0, 1), (1, 2)), "ring-homomorphism"),
        (((0, 1), (0, 1), (1, 1)), "unit-preservation"),
        (((1, 0), (0, 1)), "shape"),
    ],
)
def test_broken_functors_are_reported(ring, matrix, axiom):
    f = RingFunctor(name="bad", source=ring("rep_s3.ring"), target=ring("rep_z2.ring"), matrix=matrix)
    assert axiom in {v.axiom for v in validate_functor(f)}


def test_collapse_to_unit_is_not_a_homomorphism(ring):
    f = _collapse_to_unit(ring("rep_s3.ring"), ring("rep_z2.ring"))
    assert "ring-homomorphism" in {v.axiom for v in validate_functor(f)}
