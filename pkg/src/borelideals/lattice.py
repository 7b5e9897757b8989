"""Coweight lattice points of the simplex {(x, alpha_i) <= 1, (x, theta) >= -2}
and their affine Weyl group elements and ad-nilpotent ideals.

Points are enumerated by an integer scan in fundamental-coweight coordinates
c_i = (x, alpha_i), pruned by the bound sum_i m_i c_i >= -2.
"""
from __future__ import annotations

from fractions import Fraction as Q
from typing import Sequence

from .ideals import Ideal, affine_to_ideal
from .rootsys import Point, Root, RootSystem
from .weyl import ExtAffineElt, WeylElt, element_from_inversions, inversions_at_point, simplex_stabilizer


def coweight_coords(rs: RootSystem, x: Sequence) -> tuple[int, ...]:
    d = rs.dual_coords(x)
    if any(c.denominator != 1 for c in d):
        raise ValueError("point is not in the coweight lattice")
    return tuple(int(c) for c in d)


def simplex_vertices(rs: RootSystem) -> list[Point]:
    rv = rs.rho_vee
    h1 = rs.coxeter_number + 1
    return [rv] + [rv - o * h1 for o in rs.minuscule_vertices]


def in_simplex(rs: RootSystem, x: Sequence) -> bool:
    return all(c <= 1 for c in rs.dual_coords(x)) and rs.pairing(rs.highest_root, x) >= -2


def _scan(rs: RootSystem, low: Sequence[int], high: Sequence[int], floor: int) -> list[tuple[int, ...]]:
    marks = rs.marks
    n = rs.rank
    best_rest = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        best_rest[i] = best_rest[i + 1] + marks[i] * high[i]
    out = []
    cur = [0] * n

    def walk(i: int, acc: int) -> None:
        if i == n:
            out.append(tuple(cur))
            return
        for c in range(high[i], low[i] - 1, -1):
            if acc + marks[i] * c + best_rest[i + 1] < floor:
                break
            cur[i] = c
            walk(i + 1, acc + marks[i] * c)

    walk(0, 0)
    return sorted(out, reverse=True)


def simplex_points(rs: RootSystem) -> list[Point]:
    """All coweight lattice points of the simplex."""
    h1 = rs.coxeter_number + 1
    low = [-((h1 - m) // m) for m in rs.marks]  # ceil(1 - (h+1)/m)
    return [rs.coweight_point(c) for c in _scan(rs, low, [1] * rs.rank, -2)]


def coroot_simplex_points(rs: RootSystem) -> list[Point]:
    return [z for z in simplex_points(rs) if rs.in_coroot_lattice(z)]


def is_abelian_point(rs: RootSystem, z: Sequence) -> bool:
    return all(rs.pairing(b, z) in (0, 1, -1, -2) for b in rs.positive_roots)


def abelian_points(rs: RootSystem) -> list[Point]:
    """Coweight lattice points pairing with every positive root into {0, 1, -1, -2}."""
    coords = _scan(rs, [-2] * rs.rank, [1] * rs.rank, -2)
    out = []
    for c in coords:
        vals = (sum(x * y for x, y in zip(b, c)) for b in rs.positive_roots)
        if all(-2 <= v <= 1 for v in vals):
            out.append(rs.coweight_point(c))
    return out


def abelian_coroot_points(rs: RootSystem) -> list[Point]:
    return [z for z in abelian_points(rs) if rs.in_coroot_lattice(z)]


def chamber_element(rs: RootSystem, z: Sequence) -> WeylElt:
    """The shortest v with v^{-1}(z) dominant; its inversion set is
    {alpha > 0 : (alpha, z) < 0}."""
    x = Point.of(z)
    word = []
    while True:
        d = rs.dual_coords(x)
        i = next((i for i, c in enumerate(d) if c < 0), None)
        if i is None:
            break
        x = rs.reflect(x, rs.simple_root(i))
        word.append(i)
    return WeylElt.from_word(rs, word)


def dominant(rs: RootSystem, z: Sequence) -> Point:
    """The dominant W-conjugate of z."""
    return chamber_element(rs, z).inverse()(Point.of(z))


def level_set(rs: RootSystem, z: Sequence, value: int) -> frozenset[Root]:
    """Positive roots alpha with (alpha, z) == value."""
    return frozenset(a for a in rs.positive_roots if rs.pairing(a, z) == value)


def extended_element(rs: RootSystem, z: Sequence) -> ExtAffineElt:
    """t_{v(z)} v with v the inverse of chamber_element(z); it maps the fundamental
    alcove onto v(z + C_1)."""
    v = chamber_element(rs, z).inverse()
    return ExtAffineElt(v(Point.of(z)), v)


def affine_element(rs: RootSystem, z: Sequence) -> ExtAffineElt:
    """The affine Weyl group element mapping C_1 onto the alcove v(z + C_1)."""
    v = chamber_element(rs, z).inverse()
    p = v(Point.of(z) + rs.rho_vee * Q(1, rs.coxeter_number))
    return element_from_inversions(rs, inversions_at_point(rs, p))


def affine_element_via_stabilizer(rs: RootSystem, z: Sequence) -> ExtAffineElt:
    """Same as affine_element, computed by stripping the alcove stabilizer from the
    extended element."""
    from .weyl import alcove_stabilizer

    ext = extended_element(rs, z)
    hits = [ext * om.inverse() for om in alcove_stabilizer(rs, 1)]
    hits = [w for w in hits if w.in_affine_weyl_group()]
    if len(hits) != 1:
        raise RuntimeError("expected exactly one stabilizer element to land in the affine Weyl group")
    return hits[0]


def affine_and_coset(rs: RootSystem, z: Sequence) -> tuple[ExtAffineElt, int]:
    """The affine element of z together with the label of z modulo the coroot lattice
    (-1 for the trivial coset, otherwise the mark-one index j with z = omega_j mod Q^vee)."""
    return affine_element(rs, z), rs.coset_label(z)


def ideal_of_point(rs: RootSystem, z: Sequence, route: str = "affine") -> Ideal:
    """The ad-nilpotent ideal attached to a point of the simplex.

    ``affine`` reads it off the inversion set of affine_element(z).
    ``separation`` uses the hyperplanes (alpha, x) = 1 separating C_1 from its image.
    ``abelian`` uses the closed formula for points of abelian_points.
    """
    if route == "affine":
        return affine_to_ideal(affine_element(rs, z))
    v_z = chamber_element(rs, z)
    vinv = v_z.inverse()
    if route == "separation":
        ext = extended_element(rs, z)
        tau, v = ext.tau, ext.v
        above = {a for a in rs.positive_roots if rs.pairing(a, tau) > 1}
        ones = level_set(rs, tau, 1) - v.inversion_set()
        return Ideal.from_roots(rs, above | ones)
    if route == "abelian":
        if not is_abelian_point(rs, z):
            raise ValueError("closed formula needs a point with root values in {0, 1, -1, -2}")
        neg = {tuple(-c for c in vinv(a)) for a in level_set(rs, z, -2)}
        pos = {vinv(a) for a in level_set(rs, z, 1)}
        return Ideal.from_roots(rs, neg | pos)
    raise ValueError(f"unknown route {route!r}")


def simplex_action(rs: RootSystem, s: ExtAffineElt, z: Sequence) -> Point:
    """Action of an element of simplex_stabilizer on a point."""
    return s(Point.of(z))


def simplex_orbit(rs: RootSystem, z: Sequence) -> set[Point]:
    return {s(Point.of(z)) for s in simplex_stabilizer(rs)}


# -- operation names used in the interface description --------------------------------

enumerate_Ztilde = simplex_points
enumerate_Z = coroot_simplex_points
enumerate_Ztilde_ab = abelian_points
enumerate_Z_ab = abelian_coroot_points
v_of_z = chamber_element
dom = dominant
F_tilde = extended_element
F = affine_element


def H(rs: RootSystem, z: Sequence) -> tuple[ExtAffineElt, int]:
    return affine_and_coset(rs, z)


def sigma_act(rs: RootSystem, j: int, z: Sequence) -> Point:
    """Apply t_{-omega_j} w_0^j w_0 for a mark-one node j (1-based), or the identity for j = 0."""
    if j == 0:
        return Point.of(z)
    idx = list(rs.minuscule_indices)
    if j - 1 not in idx:
        raise ValueError(f"node {j} does not have mark one")
    return simplex_action(rs, simplex_stabilizer(rs)[1 + idx.index(j - 1)], z)
