import pytest

from borelideals.ideals import (
    Ideal,
    NotAnIdeal,
    NotInImage,
    abelian_from_alcoves,
    affine_inversion_set,
    affine_to_ideal,
    enumerate_abelian,
    enumerate_ad_nilpotent,
    ideal_powers,
    ideal_to_affine,
    ideal_weight,
    in_ideal_image,
)
from borelideals.rootsys import build_root_system
from borelideals.symmspace import nilradical_of_weight
from borelideals.weyl import AffineRoot, ExtAffineElt, affine_elements_up_to
from conftest import RANK4_TYPES, SMALL_TYPES
from oracles import is_abelian_set, upward_closed_sets

SWEEP = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]


@pytest.mark.parametrize("name", SWEEP)
def test_ideals_match_closure_oracle(name):
    rs = build_root_system(name)
    found = {i.root_set for i in enumerate_ad_nilpotent(rs)}
    oracle = upward_closed_sets(rs)
    assert found == oracle
    abelian = {i.root_set for i in enumerate_abelian(rs)}
    assert abelian == {s for s in oracle if is_abelian_set(rs, s)}
    assert len(abelian) == 2 ** rs.rank


def test_ideal_counts():
    # Catalan-type numbers of the root posets
    counts = {"A1": 2, "A2": 5, "A3": 14, "A4": 42, "B2": 6, "B3": 20, "C3": 20, "D4": 50, "G2": 8, "F4": 105}
    for name, n in counts.items():
        assert len(enumerate_ad_nilpotent(build_root_system(name))) == n


def test_a2_abelian_ideals():
    rs = build_root_system("A2")
    got = {i.root_set for i in enumerate_abelian(rs)}
    assert got == {frozenset(), frozenset({(1, 1)}), frozenset({(1, 0), (1, 1)}), frozenset({(0, 1), (1, 1)})}


def test_ideal_validation():
    rs = build_root_system("A2")
    with pytest.raises(NotAnIdeal):
        Ideal.from_roots(rs, [(1, 0)])


def test_generators():
    rs = build_root_system("A3")
    i = Ideal.from_roots(rs, rs.dual_order_ideal((1, 0, 0)) | rs.dual_order_ideal((0, 0, 1)))
    assert set(i.generators()) == {(1, 0, 0), (0, 0, 1)}


def test_powers_examples():
    rs = build_root_system("A2")
    assert ideal_powers(Ideal(rs, 0)) == []
    assert affine_inversion_set(Ideal(rs, 0)) == frozenset()
    top = Ideal.from_roots(rs, [(1, 1)])
    assert affine_inversion_set(top) == {AffineRoot((-1, -1), 1)}
    full = Ideal.from_roots(rs, rs.positive_roots)
    assert ideal_powers(full) == [frozenset(rs.positive_roots), {(1, 1)}]


def test_ideal_to_affine_examples():
    rs = build_root_system("A2")
    assert ideal_to_affine(Ideal(rs, 0)) == ExtAffineElt.identity(rs)
    top = Ideal.from_roots(rs, [(1, 1)])
    s0 = ideal_to_affine(top)
    assert s0 == ExtAffineElt.simple(rs, 0)
    assert s0.inversion_set() == {AffineRoot((-1, -1), 1)}
    two = Ideal.from_roots(rs, [(1, 0), (1, 1)])
    assert ideal_to_affine(two).inversion_set() == affine_inversion_set(two)


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_round_trip(name):
    rs = build_root_system(name)
    seen = set()
    for i in enumerate_ad_nilpotent(rs):
        w = ideal_to_affine(i)
        assert w.inversion_set() == affine_inversion_set(i)
        assert affine_to_ideal(w) == i
        seen.add(w)
    assert len(seen) == len(enumerate_ad_nilpotent(rs))


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_abelian_iff_single_level(name):
    rs = build_root_system(name)
    for i in enumerate_ad_nilpotent(rs):
        levels = {a.level for a in affine_inversion_set(i)}
        assert i.is_abelian() == (len(ideal_powers(i)) <= 1) == (levels <= {1})


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_abelian_ideal_inside_nilradical_of_its_weight(name):
    rs = build_root_system(name)
    for i in enumerate_abelian(rs):
        assert i.root_set <= nilradical_of_weight(rs, ideal_weight(i))


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_abelian_images_are_the_alcoves_in_twice_the_alcove(name):
    rs = build_root_system(name)
    images = {ideal_to_affine(i) for i in enumerate_abelian(rs)}
    assert abelian_from_alcoves(rs) == images


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_image_membership_on_short_elements(name):
    rs = build_root_system(name)
    images = {ideal_to_affine(i) for i in enumerate_ad_nilpotent(rs)}
    for w in affine_elements_up_to(rs, 7):
        assert in_ideal_image(w) == (w in images)


def test_not_in_image():
    rs = build_root_system("A2")
    s1 = ExtAffineElt.simple(rs, 1)
    assert not in_ideal_image(s1)
    with pytest.raises(NotInImage):
        affine_to_ideal(s1)
    # translations by coweights outside the coroot lattice are not in the affine Weyl group
    assert not in_ideal_image(ExtAffineElt.translation(rs, rs.fundamental_coweights[0]))


def test_to_json():
    rs = build_root_system("B2")
    i = Ideal.from_roots(rs, [(1, 1), (1, 2)])
    assert i.to_json() == {"roots": [[1, 1], [1, 2]], "generators": [[1, 1]]}
