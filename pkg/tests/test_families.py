import pytest
from hypothesis import given, strategies as st

from setflow import (
    Family,
    classify,
    family_dual,
    family_vector,
    full_mask,
    link,
    link_preimage,
    set_complement,
    star,
)
from setflow.enumeration import enumerate_downsets

from helpers import (
    all_families,
    fam,
    majority,
    oracle_inclusion_maximal_intersecting,
    star_powerset,
)

families_st = st.integers(1, 6).flatmap(
    lambda n: st.builds(Family, st.just(n), st.integers(0, (1 << (1 << n)) - 1))
)


# ---------------------------------------------------------------- complement


def test_complement_of_empty_set():
    assert set_complement(0, 3) == 0b111


def test_complement_example():
    assert set_complement(0b0101, 4) == 0b1010  # {1,3} -> {2,4}


def test_complement_involution_n4():
    for A in range(16):
        assert set_complement(set_complement(A, 4), 4) == A


def test_complement_rejects_stray_bits():
    with pytest.raises(ValueError):
        set_complement(0b1000, 3)


# ---------------------------------------------------------------------- dual


def test_dual_example():
    assert family_dual(fam(2, [1], [1, 2])) == fam(2, [2], [])


def test_dual_of_powerset():
    assert family_dual(Family.powerset(2)) == Family.powerset(2)


def test_dual_involution_and_size_exhaustive_n3():
    for F in all_families(3):
        assert family_dual(family_dual(F)) == F
        assert len(family_dual(F)) == len(F)


def test_dual_swaps_closure_direction_exhaustive_n3():
    for F in all_families(3):
        flags = classify(F)
        dual_flags = classify(family_dual(F))
        assert flags.superset_closed == dual_flags.subset_closed
        assert flags.subset_closed == dual_flags.superset_closed


# ------------------------------------------------------------------ classify


def test_classify_majority3():
    flags = classify(majority(3))
    assert flags.intersecting
    assert flags.self_dual
    assert flags.superset_closed
    assert flags.maximal_intersecting
    assert flags.central
    assert not flags.subset_closed


def test_classify_star_not_central():
    flags = classify(star_powerset(3, 1))
    assert flags.maximal_intersecting
    assert not flags.central  # contains {1} with 2*1 < 3


def test_classify_singleton_empty_set():
    flags = classify(fam(2, []))
    assert flags.subset_closed
    assert not flags.intersecting  # the empty set meets nothing, itself included


def test_classify_empty_family_is_vacuously_closed():
    flags = classify(Family.empty(2))
    assert flags.intersecting and flags.subset_closed and flags.superset_closed
    assert not flags.self_dual and not flags.maximal_intersecting


def test_maximal_flag_matches_inclusion_maximality_oracle():
    for n in (1, 2, 3):
        for F in all_families(n):
            assert classify(F).maximal_intersecting == oracle_inclusion_maximal_intersecting(F)


def test_self_dual_families_have_half_size():
    for n in (1, 2, 3):
        for F in all_families(n):
            if classify(F).self_dual:
                assert len(F) == 1 << (n - 1)


# ---------------------------------------------------------------------- star


def test_star_examples():
    assert star(Family.powerset(2), 1) == fam(2, [1], [1, 2])
    assert star(fam(2, [], [2]), 1) == Family.empty(2)


def test_star_of_powerset_is_maximal_intersecting():
    for n in range(1, 5):
        for a in range(1, n + 1):
            assert classify(star(Family.powerset(n), a)).maximal_intersecting


# -------------------------------------------------------------------- vector


def test_family_vector_single_pair():
    v = family_vector(fam(1, [1]))
    assert v.entries == (-1, 1)


def test_family_vector_mixed():
    v = family_vector(fam(2, [], [1]))
    # +1 at {} and {1}, -1 at {2} and {1,2}
    assert v.entries == (1, 1, -1, -1)


def test_family_vector_of_powerset_is_zero():
    assert family_vector(Family.powerset(2)).entries == (0, 0, 0, 0)


def test_family_vector_antisymmetry_exhaustive_n3():
    for F in all_families(3):
        v = family_vector(F)
        for A in range(8):
            assert v[A] == -v[A ^ 7]


@given(families_st)
def test_family_vector_antisymmetry_random(F):
    v = family_vector(F)
    full = full_mask(F.n)
    for A in range(1 << F.n):
        assert v[A] == -v[A ^ full]


@given(families_st)
def test_dual_involution_random(F):
    assert family_dual(family_dual(F)) == F


# ---------------------------------------------------------------------- link


def test_link_examples():
    maj = majority(3)
    assert link(maj, 0b001, 0b010).members == {0b001}        # only {1,2} present
    assert link(maj, 0b001, 0b110).members == {0, 0b001}     # {2,3} and {1,2,3}


def test_link_degenerate_universe():
    F = fam(2, [2])
    assert link(F, 0, 0b10).members == {0}
    assert link(F, 0, 0b01).members == set()


def test_link_rejects_overlapping_base():
    with pytest.raises(ValueError):
        link(majority(3), 0b011, 0b010)


def test_link_preimage_dual_majority():
    dual = family_dual(majority(3))
    pre = link_preimage(dual, 1, (0,))
    assert pre.members == {0b010, 0b100}  # {2} and {3}
    assert pre.universe == 0b110


def test_link_preimage_dual_star():
    dual = family_dual(star_powerset(3, 1))
    pre = link_preimage(dual, 1, (0,))
    assert pre.members == {0, 0b010, 0b100, 0b110}  # all of P({2,3})


def test_link_preimage_enumeration_agrees_with_direct_scan():
    # the preimage is, by definition, the subsets whose link hits the target
    dual = family_dual(majority(3))
    for target in ((), (0,), (0b001,), (0, 0b001)):
        pre = link_preimage(dual, 1, target)
        for B in (0, 0b010, 0b100, 0b110):
            expected = link(dual, 0b001, B).members == frozenset(target)
            assert (B in pre.members) == expected


def test_link_preimage_of_lifted_target_empty_for_downsets():
    for F in enumerate_downsets(3):
        for a in (1, 2, 3):
            assert len(link_preimage(F, a, (1 << (a - 1),))) == 0


def test_link_preimage_rejects_bad_target():
    with pytest.raises(ValueError):
        link_preimage(majority(3), 1, (0b010,))


# ----------------------------------------------------------------- validation


def test_family_rejects_bad_ground_set():
    with pytest.raises(ValueError):
        Family(0, 0)
    with pytest.raises(ValueError):
        Family(17, 0)


def test_family_rejects_members_outside_powerset():
    with pytest.raises(ValueError):
        Family(1, 0b10000)  # bit index 4 is not a subset of [1]


def test_from_sets_roundtrip():
    F = fam(3, [1, 3], [2], [1, 2, 3])
    assert F.sets() == ((2,), (1, 3), (1, 2, 3))
    assert Family.from_masks(3, list(F.masks())) == F
