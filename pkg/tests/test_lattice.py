from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from borelideals.ideals import enumerate_abelian, enumerate_ad_nilpotent
from borelideals.lattice import (
    abelian_coroot_points,
    abelian_points,
    affine_element,
    affine_element_via_stabilizer,
    chamber_element,
    coroot_simplex_points,
    coweight_coords,
    dominant,
    extended_element,
    ideal_of_point,
    in_simplex,
    is_abelian_point,
    simplex_orbit,
    simplex_points,
    simplex_vertices,
)
from borelideals.rootsys import Point, build_root_system
from conftest import RANK4_TYPES, SMALL_TYPES
from oracles import simplex_points_by_box

# |simplex points|, |coroot points|, |abelian points|, frozen from the box scan
COUNTS = {
    "A1": (4, 2, 4), "A2": (15, 5, 12), "A3": (56, 14, 32), "B2": (12, 6, 8),
    "B3": (40, 20, 16), "C3": (40, 20, 16), "G2": (8, 8, 4), "D4": (200, 50, 64), "F4": (105, 105, 16),
}


@pytest.mark.parametrize("name", SMALL_TYPES + ["A4", "B4", "C4", "D4"])
def test_simplex_points_match_box_scan(name):
    rs = build_root_system(name)
    pts = simplex_points(rs)
    assert len(pts) == len(set(pts))
    assert set(pts) == simplex_points_by_box(rs)


@pytest.mark.parametrize("name,counts", sorted(COUNTS.items()))
def test_point_counts(name, counts):
    rs = build_root_system(name)
    assert (len(simplex_points(rs)), len(coroot_simplex_points(rs)), len(abelian_points(rs))) == counts


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_counts_against_ideals(name):
    rs = build_root_system(name)
    assert len(coroot_simplex_points(rs)) == len(enumerate_ad_nilpotent(rs))
    assert len(simplex_points(rs)) == rs.center_order * len(enumerate_ad_nilpotent(rs))
    assert len(abelian_coroot_points(rs)) == len(enumerate_abelian(rs))
    assert len(abelian_points(rs)) == rs.center_order * len(enumerate_abelian(rs))


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_abelian_points_filter(name):
    rs = build_root_system(name)
    expected = [z for z in simplex_points(rs) if is_abelian_point(rs, z)]
    assert set(abelian_points(rs)) == set(expected)


def test_a1_points():
    rs = build_root_system("A1")
    assert [coweight_coords(rs, z) for z in simplex_points(rs)] == [(1,), (0,), (-1,), (-2,)]
    assert ideal_of_point(rs, rs.fundamental_coweights[0]).root_set == {(1,)}


def test_a2_example():
    rs = build_root_system("A2")
    z = rs.fundamental_coweights[0] * -2
    assert chamber_element(rs, z).inversion_set() == {(1, 0), (1, 1)}
    assert ideal_of_point(rs, z).root_set == {(0, 1), (1, 1)}
    assert rs.is_dominant(dominant(rs, z))


def test_vertices_lie_in_the_simplex():
    for name in ("A3", "B3", "G2", "E6"):
        rs = build_root_system(name)
        for v in simplex_vertices(rs):
            assert in_simplex(rs, v)
            assert rs.pairing(rs.highest_root, v) == -2 or v == rs.rho_vee
    with pytest.raises(ValueError):
        coweight_coords(rs, rs.rho_vee * Q(1, 2))


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_chamber_element_inversions(name):
    rs = build_root_system(name)
    for z in simplex_points(rs):
        v = chamber_element(rs, z)
        assert v.inversion_set() == {a for a in rs.positive_roots if rs.pairing(a, z) < 0}
        assert rs.is_dominant(v.inverse()(z))


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_affine_element_two_routes(name):
    rs = build_root_system(name)
    for z in simplex_points(rs):
        w = affine_element(rs, z)
        assert w.in_affine_weyl_group()
        assert w == affine_element_via_stabilizer(rs, z)
        v = chamber_element(rs, z).inverse()
        assert w.alcove_point() == v(z + rs.rho_vee * Q(1, rs.coxeter_number))
        assert extended_element(rs, z).alcove_point() == w.alcove_point()


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_ideal_routes_agree(name):
    rs = build_root_system(name)
    for z in simplex_points(rs):
        i = ideal_of_point(rs, z)
        assert ideal_of_point(rs, z, "separation") == i
        if is_abelian_point(rs, z):
            assert ideal_of_point(rs, z, "abelian") == i
            assert i.is_abelian()


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_coroot_points_biject_onto_ideals(name):
    rs = build_root_system(name)
    images = [ideal_of_point(rs, z) for z in coroot_simplex_points(rs)]
    assert set(images) == set(enumerate_ad_nilpotent(rs))
    assert len(set(images)) == len(images)


@pytest.mark.parametrize("name", SMALL_TYPES + ["B4", "F4"])
def test_ideal_is_constant_on_simplex_orbits(name):
    rs = build_root_system(name)
    pts = set(simplex_points(rs))
    for z in pts:
        orbit = simplex_orbit(rs, z)
        assert orbit <= pts
        assert len(orbit) == rs.center_order
        assert len({ideal_of_point(rs, y) for y in orbit}) == 1
        assert sum(rs.in_coroot_lattice(y) for y in orbit) == 1


def test_bad_route():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        ideal_of_point(rs, Point.zero(2), "nope")
    with pytest.raises(ValueError):
        ideal_of_point(rs, rs.fundamental_coweights[0] * -3, "abelian")


@given(st.sampled_from(SMALL_TYPES), st.data())
def test_simplex_membership_property(name, data):
    rs = build_root_system(name)
    c = data.draw(st.lists(st.integers(-8, 2), min_size=rs.rank, max_size=rs.rank))
    z = rs.coweight_point(c)
    assert in_simplex(rs, z) == (z in set(simplex_points(rs)))
