import pytest

from fusionkit.subrings import (
    adjoint_subring,
    all_subrings,
    close_generated,
    commutator,
    full_subring,
    intersect,
    is_subring,
    join,
    make_subring,
    radical,
    subrings_containing,
    trivial_subring,
)

from conftest import FIXTURES

RING_FILES = sorted(p.name for p in FIXTURES.glob("*.ring"))


@pytest.mark.parametrize(
    "filename,members,expected",
    [
        ("ising.ring", (0, 1), True),
        ("ising.ring", (0, 2), False),
        ("ising.ring", (1,), False),
        ("rep_s3.ring", (0, 1), True),
        ("rep_s3.ring", (0, 2), False),
        ("rep_z4.ring", (0, 2), True),
        ("rep_z4.ring", (0, 1), False),
    ],
)
def test_is_subring(ring, filename, members, expected):
    assert is_subring(ring(filename), members) is expected


def test_make_subring_rejects_non_subrings(ring):
    with pytest.raises(ValueError, match="is not a subring"):
        make_subring(ring("ising.ring"), (0, 2))


def test_close_generated(ring):
    z6 = ring("rep_z6.ring")
    assert close_generated(z6, {2}).members == (0, 2, 4)
    assert close_generated(z6, {3}).members == (0, 3)
    assert close_generated(z6, {1}).members == tuple(range(6))
    assert close_generated(ring("ising.ring"), {2}).members == (0, 1, 2)


@pytest.mark.parametrize("filename", RING_FILES)
def test_closing_nothing_gives_the_unit(ring, filename):
    r = ring(filename)
    assert close_generated(r, set()).members == (r.unit,)


@pytest.mark.parametrize("filename", RING_FILES)
def test_close_generated_is_idempotent(ring, filename):
    r = ring(filename)
    for x in r.basis:
        closed = close_generated(r, {x})
        assert close_generated(r, closed.members).members == closed.members
        assert is_subring(r, closed.members)
    for s in all_subrings(r):
        assert close_generated(r, s.members).members == s.members


@pytest.mark.parametrize("filename", RING_FILES)
def test_close_generated_is_monotone(ring, filename):
    r = ring(filename)
    for x in r.basis:
        for y in r.basis:
            small = set(close_generated(r, {x}).members)
            large = set(close_generated(r, {x, y}).members)
            assert small <= large
            assert set(close_generated(r, {y}).members) <= large


@pytest.mark.parametrize(
    "filename,expected",
    [
        ("ising.ring", (0, 1)),
        ("fibonacci.ring", (0, 1)),
        ("rep_s3.ring", (0, 1, 2)),
        ("rep_d4.ring", (0, 1, 2, 3)),
        ("ty_z2z2.ring", (0, 1, 2, 3)),
        ("rep_z4.ring", (0,)),
    ],
)
def test_adjoint_subring(ring, filename, expected):
    assert adjoint_subring(ring(filename)).members == expected


def test_intersect_and_join(ring):
    d4 = ring("rep_d4.ring")
    a = make_subring(d4, (0, 1))
    b = make_subring(d4, (0, 2))
    assert intersect(a, b).members == (0,)
    assert join(a, b).members == (0, 1, 2, 3)
    assert join(a, make_subring(d4, (0, 1, 2, 3))).members == (0, 1, 2, 3)


def test_subring_operations_need_one_ring(ring):
    with pytest.raises(ValueError):
        intersect(trivial_subring(ring("ising.ring")), trivial_subring(ring("rep_s3.ring")))


@pytest.mark.parametrize(
    "filename,members,expected",
    [
        ("rep_s3.ring", (0, 1), (0, 1)),
        ("ising.ring", (0, 1), (0, 1, 2)),
        ("fibonacci.ring", (0,), (0,)),
        ("rep_d4.ring", (0, 1), (0, 1, 2, 3)),
        ("rep_d4.ring", (0, 1, 2, 3), (0, 1, 2, 3, 4)),
    ],
)
def test_radical_equals_commutator_on_examples(ring, filename, members, expected):
    r = ring(filename)
    d = make_subring(r, members)
    rad = radical(r, d)
    co = commutator(r, d)
    assert rad.members == expected
    assert co.members == expected
    assert rad.is_subring and co.is_subring


def test_radical_contains_subring_and_commutator(ring):
    s4 = ring("rep_s4.ring")
    for d in all_subrings(s4):
        rad = set(radical(s4, d).members)
        assert set(d.members) <= rad
        assert set(commutator(s4, d).members) <= rad


def test_commutator_of_trivial_is_pointed_part(ring):
    assert commutator(ring("ty_z2z2.ring"), trivial_subring(ring("ty_z2z2.ring"))).members == (0, 1, 2, 3)


@pytest.mark.parametrize(
    "filename,count",
    [
        ("ising.ring", 3),
        ("fibonacci.ring", 2),
        ("rep_s3.ring", 3),
        ("rep_z6.ring", 4),
        ("rep_d4.ring", 6),
    ],
)
def test_all_subrings(ring, filename, count):
    subs = all_subrings(ring(filename))
    assert len(subs) == count
    assert subs[0].members == (0,)
    assert subs[-1] == full_subring(ring(filename))


def test_subrings_containing(ring):
    d4 = ring("rep_d4.ring")
    above = subrings_containing(d4, make_subring(d4, (0, 1, 2, 3)))
    assert [s.members for s in above] == [(0, 1, 2, 3), (0, 1, 2, 3, 4)]


def test_subring_enumeration_cap(ring):
    with pytest.raises(ValueError, match="cap"):
        all_subrings(ring("rep_z6.ring"), cap=3)
