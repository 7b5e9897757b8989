"""ad-nilpotent ideals of a Borel subalgebra and their affine Weyl group elements.

An ad-nilpotent ideal is identified with its set of roots, an upward closed
subset of the positive roots, stored as a bitmask over the canonical root order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable

from .rootsys import Point, Root, RootSystem
from .weyl import AffineRoot, ExtAffineElt, NotBiclosed, element_from_inversions


class NotAnIdeal(ValueError):
    pass


class NotInImage(ValueError):
    """The affine element does not come from an ad-nilpotent ideal."""


@dataclass(frozen=True)
class Ideal:
    rs: RootSystem = field(compare=False, repr=False)
    mask: int

    @classmethod
    def from_roots(cls, rs: RootSystem, roots: Iterable[Root]) -> "Ideal":
        mask = 0
        for r in roots:
            mask |= 1 << rs.index[tuple(r)]
        ideal = cls(rs, mask)
        if not ideal.is_upward_closed():
            raise NotAnIdeal("root set is not upward closed")
        return ideal

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(r for k, r in enumerate(self.rs.positive_roots) if self.mask >> k & 1)

    @property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, alpha) -> bool:
        k = self.rs.index.get(tuple(alpha))
        return k is not None and bool(self.mask >> k & 1)

    def is_upward_closed(self) -> bool:
        ups = self.rs.upper_masks
        return all(ups[k] & ~self.mask == 0 for k in range(len(ups)) if self.mask >> k & 1)

    def is_abelian(self) -> bool:
        roots = self.roots
        rs = self.rs
        for i, a in enumerate(roots):
            for b in roots[i:]:
                if rs.is_root(tuple(x + y for x, y in zip(a, b))):
                    return False
        return True

    def generators(self) -> tuple[Root, ...]:
        """Minimal roots of the ideal."""
        rs = self.rs
        return tuple(a for a in self.roots if not any(b != a and rs.leq(b, a) for b in self.roots))

    def to_json(self) -> dict:
        return {"roots": [list(r) for r in self.roots], "generators": [list(r) for r in self.generators()]}

    def __repr__(self) -> str:
        return f"Ideal({self.rs.name}, {list(self.generators())})"


def _sort_key(ideal: Ideal):
    return (len(ideal), [k for k in range(len(ideal.rs.positive_roots)) if ideal.mask >> k & 1])


def enumerate_ad_nilpotent(rs: RootSystem) -> list[Ideal]:
    """All upward closed subsets of the positive roots, one per antichain of generators."""
    roots = rs.positive_roots
    ups = rs.upper_masks
    n = len(roots)
    comparable = []
    for k in range(n):
        m = ups[k]
        for j in range(n):
            if ups[j] >> k & 1:
                m |= 1 << j
        comparable.append(m)
    out: list[Ideal] = []

    def walk(start: int, blocked: int, mask: int) -> None:
        out.append(Ideal(rs, mask))
        for k in range(start, n):
            if not blocked >> k & 1:
                walk(k + 1, blocked | comparable[k], mask | ups[k])

    walk(0, 0, 0)
    return sorted(out, key=_sort_key)


def enumerate_abelian(rs: RootSystem) -> list[Ideal]:
    return [i for i in enumerate_ad_nilpotent(rs) if i.is_abelian()]


def ideal_powers(ideal: Ideal) -> list[frozenset[Root]]:
    """[Phi, Phi^2, ...] with Phi^k = (Phi^{k-1} + Phi) intersected with the roots."""
    rs = ideal.rs
    base = ideal.roots
    cur = frozenset(base)
    out = []
    while cur:
        out.append(cur)
        cur = frozenset(
            s for a in cur for b in base if rs.is_root(s := tuple(x + y for x, y in zip(a, b)))
        )
    return out


def affine_inversion_set(ideal: Ideal) -> frozenset[AffineRoot]:
    """Union over k >= 1 of -Phi^k + k delta."""
    out = set()
    for k, level in enumerate(ideal_powers(ideal), start=1):
        out.update(AffineRoot(tuple(-c for c in a), k) for a in level)
    return frozenset(out)


def ideal_to_affine(ideal: Ideal) -> ExtAffineElt:
    """The affine Weyl group element whose inversion set is affine_inversion_set(ideal)."""
    return element_from_inversions(ideal.rs, affine_inversion_set(ideal))


def _coordinate_test(w: ExtAffineElt) -> bool:
    rs = w.rs
    sigma = w.v.inverse()(w.tau)
    d = rs.dual_coords(sigma)
    return all(c <= 1 for c in d) and rs.pairing(rs.highest_root, sigma) >= -2


def in_ideal_image(w: ExtAffineElt) -> bool:
    """Membership in the image of ideal_to_affine, decided twice: by the alcove and
    coordinate criterion, and by reading an ideal off N(w) and mapping it back."""
    rs = w.rs
    if not w.in_affine_weyl_group():
        return False
    by_geometry = all(rs.is_dominant(p) for p in w.alcove_vertices()) and _coordinate_test(w)
    inv = w.inversion_set()
    roots = [tuple(-c for c in a.alpha) for a in inv if a.level == 1]
    by_roundtrip = False
    if all(a.level >= 1 for a in inv):
        try:
            ideal = Ideal.from_roots(rs, roots)
            by_roundtrip = ideal_to_affine(ideal) == w
        except (NotAnIdeal, NotBiclosed, KeyError):
            by_roundtrip = False
    if by_geometry != by_roundtrip:
        raise RuntimeError(f"inconsistent membership tests for {w!r}")
    return by_geometry


def affine_to_ideal(w: ExtAffineElt) -> Ideal:
    """Inverse of ideal_to_affine: alpha is in the ideal iff -alpha + delta is in N(w)."""
    if not in_ideal_image(w):
        raise NotInImage(repr(w))
    roots = [tuple(-c for c in a.alpha) for a in w.inversion_set() if a.level == 1]
    return Ideal.from_roots(w.rs, roots)


def ideal_weight(ideal: Ideal) -> Point:
    """Sum of the roots of the ideal."""
    n = ideal.rs.rank
    return Point(tuple(sum((Q(r[i]) for r in ideal.roots), Q(0)) for i in range(n)))


def abelian_from_alcoves(rs: RootSystem) -> set[ExtAffineElt]:
    """Affine elements w with w(C_1) inside 2 C_1, found by a length-bounded search.

    Only hyperplanes (alpha, x) = 1 can separate alcoves of 2 C_1, so length at most
    the number of positive roots suffices.
    """
    from .weyl import affine_elements_up_to, maps_alcove_into

    return {w for w in affine_elements_up_to(rs, len(rs.positive_roots)) if maps_alcove_into(w, 2)}


# -- operation names used in the interface description --------------------------------

L_of_ideal = affine_inversion_set
ideal_to_w = ideal_to_affine
w_to_ideal = affine_to_ideal
