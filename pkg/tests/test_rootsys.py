import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from borelideals.rootsys import InvalidType, Point, build_root_system, parse_type, product_of_exponents_plus_one
from conftest import RANK4_TYPES
from oracles import add, antichains, orbit_size, upward_closed_sets

# (type, |positive roots|, marks, Coxeter number, |W|)
CLASSICAL_DATA = [
    ("A1", 1, (1,), 2, 2),
    ("A2", 3, (1, 1), 3, 6),
    ("A4", 10, (1, 1, 1, 1), 5, 120),
    ("B3", 9, (1, 2, 2), 6, 48),
    ("C3", 9, (2, 2, 1), 6, 48),
    ("D4", 12, (1, 2, 1, 1), 6, 192),
    ("G2", 6, (3, 2), 6, 12),
    ("F4", 24, (2, 3, 4, 2), 12, 1152),
    ("E6", 36, (1, 2, 2, 3, 2, 1), 12, 51840),
    ("E7", 63, (2, 2, 3, 4, 3, 2, 1), 18, 2903040),
    ("E8", 120, (2, 3, 4, 6, 5, 4, 3, 2), 30, 696729600),
]


@pytest.mark.parametrize("name,npos,marks,h,order", CLASSICAL_DATA)
def test_classification_data(name, npos, marks, h, order):
    rs = build_root_system(name)
    assert len(rs.positive_roots) == npos
    assert rs.marks == marks
    assert rs.coxeter_number == h
    assert rs.weyl_order == order


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_weyl_order_matches_orbit_of_generic_point(name):
    rs = build_root_system(name)
    assert rs.weyl_order == orbit_size(rs, rs.simple_roots)


def test_a2_basics():
    rs = build_root_system("A", 2)
    assert len(rs.positive_roots) == 3
    assert rs.highest_root == (1, 1)
    assert rs.coxeter_number == 3
    assert rs.minuscule_indices == (0, 1)
    assert rs.pairing((1, 0), (0, 1)) == -1


def test_g2_has_no_minuscule_coweights():
    rs = build_root_system("G2")
    assert rs.minuscule_indices == ()
    assert rs.center_order == 1


def test_e6_minuscule_nodes():
    rs = build_root_system("E6")
    assert [i + 1 for i in rs.minuscule_indices] == [1, 6]
    assert rs.center_order == 3


@pytest.mark.parametrize("name", RANK4_TYPES + ["E6"])
def test_normalisation_and_coweights(name):
    rs = build_root_system(name)
    assert rs.norm2(rs.highest_root) == 2
    for i, om in enumerate(rs.fundamental_coweights):
        assert rs.dual_coords(om) == tuple(Q(int(i == j)) for j in range(rs.rank))


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_root_coefficients_bounded_by_marks(name):
    rs = build_root_system(name)
    for b in rs.positive_roots:
        assert all(0 <= c <= m for c, m in zip(b, rs.marks))


@pytest.mark.parametrize("name", RANK4_TYPES)
def test_jacobi_closure_positive_roots(name):
    rs = build_root_system(name)
    roots = rs.positive_roots
    for a, b, g in itertools.product(roots, repeat=3):
        ab = add(a, b)
        if rs.is_root(ab) and rs.is_root(add(ab, g)):
            assert rs.is_root(add(a, g)) or rs.is_root(add(b, g))


@pytest.mark.parametrize("name", ["A2", "A3", "B3", "C3", "G2", "D4"])
def test_jacobi_closure_all_roots_up_to_cartan(name):
    # over all roots, a zero sum (a bracket landing in the Cartan subalgebra) must count
    rs = build_root_system(name)
    zero = (0,) * rs.rank
    roots = rs.all_roots

    def root_or_zero(v):
        return v == zero or rs.is_root(v)

    for a, b, g in itertools.product(roots, repeat=3):
        ab = add(a, b)
        if rs.is_root(ab) and rs.is_root(add(ab, g)):
            assert root_or_zero(add(a, g)) or root_or_zero(add(b, g))


def test_jacobi_closure_needs_zero_sums_over_all_roots():
    rs = build_root_system("A2")
    a, b, g = (1, 0), (0, 1), (0, -1)
    assert rs.is_root(add(a, b)) and rs.is_root(add(add(a, b), g))
    assert not rs.is_root(add(a, g)) and not rs.is_root(add(b, g))


def test_dual_order_ideal_examples():
    rs = build_root_system("A2")
    assert rs.dual_order_ideal((1, 1)) == {(1, 1)}
    assert rs.dual_order_ideal((1, 0)) == {(1, 0), (1, 1)}


def test_chain_between_examples():
    a2 = build_root_system("A2")
    assert a2.chain_between((1, 0), (1, 1)) == [(0, 1)]
    assert a2.chain_between((1, 0), (1, 0)) == []
    b2 = build_root_system("B2")
    chain = b2.chain_between((0, 1), (1, 2))
    assert len(chain) == 2
    assert add((0, 1), chain[0]) == (1, 1)
    with pytest.raises(ValueError):
        a2.chain_between((1, 1), (1, 0))


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4"])
def test_chain_partial_sums_are_roots(name):
    rs = build_root_system(name)
    for a, b in itertools.product(rs.positive_roots, repeat=2):
        if a != b and rs.leq(a, b):
            cur = a
            for step in rs.chain_between(a, b):
                cur = add(cur, step)
                assert rs.is_root(cur) and sum(cur) > 0
            assert cur == b


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "G2"])
def test_order_ideal_counts_agree(name):
    rs = build_root_system(name)
    assert antichains(rs) == len(upward_closed_sets(rs))


def test_invalid_types():
    for bad in [("B", 1), ("C", 1), ("D", 3), ("E", 5), ("F", 3), ("G", 3), ("X", 2), ("A", 0)]:
        with pytest.raises(InvalidType):
            build_root_system(*bad)
    with pytest.raises(InvalidType):
        parse_type("A3", 4)


def test_parse_type_forms():
    assert parse_type("e6") == ("E", 6)
    assert parse_type("B", 3) == ("B", 3)


def test_lattice_membership():
    rs = build_root_system("A1")
    om = rs.fundamental_coweights[0]
    assert rs.in_coweight_lattice(om) and not rs.in_coroot_lattice(om)
    assert rs.in_coroot_lattice(om * 2)
    assert rs.coset_label(om) == 0 and rs.coset_label(om * 2) == -1


def test_exponent_product():
    # A2 heights 1, 1, 2 give exponents 1, 2
    assert product_of_exponents_plus_one([1, 1, 2]) == 6


@given(st.sampled_from(RANK4_TYPES), st.data())
def test_reflection_is_an_isometric_involution(name, data):
    rs = build_root_system(name)
    a = data.draw(st.sampled_from(rs.positive_roots))
    coords = data.draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=rs.rank, max_size=rs.rank))
    x = Point.of(coords)
    y = rs.reflect(x, a)
    assert rs.reflect(y, a) == x
    assert rs.norm2(y) == rs.norm2(x)
    assert rs.pairing(y, a) == -rs.pairing(x, a)


@given(st.sampled_from(RANK4_TYPES), st.data())
def test_reflect_root_stays_in_root_system(name, data):
    rs = build_root_system(name)
    a = data.draw(st.sampled_from(rs.all_roots))
    b = data.draw(st.sampled_from(rs.all_roots))
    assert rs.is_root(rs.reflect_root(b, a))


def test_info_is_json_ready():
    import json

    info = build_root_system("B2").info()
    assert json.loads(json.dumps(info))["num_positive_roots"] == 4
