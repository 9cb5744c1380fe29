import numpy as np
import pytest

from fusionkit.corpus import group_ring
from fusionkit.cosets import (
    bimodule_stability_check,
    coset_counts,
    coset_eigenvalue,
    coset_product_formula,
    double_cosets,
    format_blocks,
    left_cosets,
    object_generated_relation,
    right_cosets,
    symmetry_check,
    verify_principal_eigendata,
)
from fusionkit.fp_numerics import compute_fp_dims
from fusionkit.models import Subring
from fusionkit.subrings import all_subrings, make_subring, trivial_subring

from conftest import FIXTURES

RING_FILES = sorted(p.name for p in FIXTURES.glob("*.ring"))


def test_ising_left_cosets_of_psi(ring):
    ising = ring("ising.ring")
    fp = compute_fp_dims(ising)
    dec = left_cosets(ising, make_subring(ising, (0, 1)), fp)
    assert dec.classes == ((0, 1), (2,))
    assert format_blocks(ising, dec.classes) == "{1,ψ} {σ}"
    assert dec.class_vectors[1] == pytest.approx((0.0, 0.0, np.sqrt(2)))


def test_trivial_subrings_give_singletons(ring):
    s4 = ring("rep_s4.ring")
    fp = compute_fp_dims(s4)
    dec = double_cosets(s4, trivial_subring(s4), trivial_subring(s4), fp)
    assert dec.classes == tuple((i,) for i in s4.basis)


def test_group_ring_double_cosets_by_a_transposition(group):
    s3 = group("s3.group")
    zs3 = group_ring(s3)
    fp = compute_fp_dims(zs3)
    k = Subring(zs3, (0, 1))
    dec = double_cosets(zs3, k, k, fp)
    assert sorted(len(block) for block in dec.classes) == [2, 4]
    assert dec.classes[0] == (0, 1)


def test_left_and_right_cosets_of_a_non_normal_subgroup_differ(group):
    zs3 = group_ring(group("s3.group"))
    fp = compute_fp_dims(zs3)
    k = Subring(zs3, (0, 1))
    left = left_cosets(zs3, k, fp).classes
    right = right_cosets(zs3, k, fp).classes
    assert len(left) == len(right) == 3
    assert left != right


def test_coset_counts_are_exact_and_symmetric(ring):
    d4 = ring("rep_d4.ring")
    d = make_subring(d4, (0, 1, 2, 3))
    counts = np.array(coset_counts(d4, d, d))
    assert np.array_equal(counts, counts.T)
    # m absorbs the pointed part from both sides: D m D = 16 m.
    assert counts[4][4] == 16


@pytest.mark.parametrize("filename", ["ising.ring", "rep_s3.ring", "rep_d4.ring", "ty_z2z2.ring", "fibonacci.ring"])
def test_principal_eigendata_for_every_subring_pair(ring, filename):
    r = ring(filename)
    fp = compute_fp_dims(r)
    for d in all_subrings(r):
        for e in all_subrings(r):
            dec = double_cosets(r, d, e, fp)
            assert symmetry_check(dec, 1e-9).passed
            assert all(c.passed for c in verify_principal_eigendata(dec, fp, 1e-9))
            assert bimodule_stability_check(dec).passed
            for x in r.basis:
                formula = coset_product_formula(dec, fp, x)
                assert formula.passed
                assert formula.class_index == dec.class_of(x)


def test_eigenvalue_is_product_of_subring_dimensions(ring):
    ising = ring("ising.ring")
    fp = compute_fp_dims(ising)
    d = make_subring(ising, (0, 1))
    dec = double_cosets(ising, d, d, fp)
    assert coset_eigenvalue(dec, fp) == pytest.approx(4.0)
    value = max(abs(np.linalg.eigvals(np.array(dec.t_matrix))))
    assert value == pytest.approx(4.0)


def test_formula_scalar_on_ising(ring):
    ising = ring("ising.ring")
    fp = compute_fp_dims(ising)
    d = make_subring(ising, (0, 1))
    result = coset_product_formula(left_cosets(ising, d, fp), fp, 2)
    # R_D sigma = 2 sigma and A = sqrt(2) sigma with FPdim 2.
    assert result.scalar == pytest.approx(2 * np.sqrt(2) / 2)
    assert result.residual <= 1e-9


def test_object_generated_relation(ring):
    ising = ring("ising.ring")
    fp = compute_fp_dims(ising)
    assert object_generated_relation(ising, 1, 0, fp).classes == ((0, 1), (2,))
    assert object_generated_relation(ising, 2, 0, fp).classes == ((0, 1, 2),)


def test_double_cosets_reject_non_subrings(ring):
    ising = ring("ising.ring")
    fp = compute_fp_dims(ising)
    with pytest.raises(ValueError, match="not a subring"):
        double_cosets(ising, Subring(ising, (0, 2)), trivial_subring(ising), fp)


@pytest.mark.parametrize("filename", RING_FILES)
def test_unit_block_contains_the_subring(ring, filename):
    r = ring(filename)
    fp = compute_fp_dims(r)
    for d in all_subrings(r):
        for dec in (double_cosets(r, d, d, fp), left_cosets(r, d, fp), right_cosets(r, d, fp)):
            unit_block = dec.classes[dec.class_of(r.unit)]
            assert set(d.members) <= set(unit_block)


def test_principal_eigendata_uses_an_absolute_tolerance(ring):
    s4 = ring("rep_s4.ring")
    fp = compute_fp_dims(s4)
    full = make_subring(s4, s4.basis)
    dec = double_cosets(s4, full, full, fp)
    checks = verify_principal_eigendata(dec, fp, 1e-9)
    assert coset_eigenvalue(dec, fp) == pytest.approx(576.0)
    assert all(c.passed for c in checks)
    assert all(c.residual <= 1e-9 for c in checks if c.residual is not None)
