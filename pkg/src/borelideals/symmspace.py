"""Inner involutions attached to coweights of the doubled fundamental alcove.

A coweight tau with 0 <= (tau, alpha_i) and (tau, theta) <= 2 grades the roots by
(alpha, tau) in {-2, ..., 2}.  Even levels span the fixed subalgebra k_tau and odd
levels its complement p_tau.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .ideals import Ideal, enumerate_abelian
from .lattice import (
    abelian_points,
    chamber_element,
    coweight_coords,
    dominant,
    ideal_of_point,
    level_set,
    simplex_points,
    simplex_stabilizer,
)
from .rootsys import Point, Root, RootSystem, product_of_exponents_plus_one, solve_in_span
from .weyl import WeylElt, alcove_stabilizer, canonical_coset_rep, finite_from_inversions


class HypothesisViolation(ValueError):
    """The requested coweight lies outside the range where the statement applies."""


def _add(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _neg(a: Sequence[int]) -> Root:
    return tuple(-x for x in a)


# -- coweight labels ---------------------------------------------------------------

def parse_coweight(rs: RootSystem, text: str) -> tuple[int, ...]:
    """Parse 'w1+w6', '2w3' or '0' into fundamental-coweight coefficients."""
    coeffs = [0] * rs.rank
    text = text.replace(" ", "")
    if text in ("", "0"):
        return tuple(coeffs)
    for term in text.split("+"):
        m = re.fullmatch(r"(\d*)w(\d+)", term)
        if not m:
            raise ValueError(f"cannot parse coweight term {term!r}")
        i = int(m.group(2))
        if not 1 <= i <= rs.rank:
            raise ValueError(f"index {i} out of range for {rs.name}")
        coeffs[i - 1] += int(m.group(1) or 1)
    return tuple(coeffs)


def format_coweight(coeffs: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c:
            terms.append(f"{'' if c == 1 else c}w{i + 1}")
    return "+".join(terms) or "0"


# -- grading coweights -------------------------------------------------------------

@dataclass(frozen=True)
class GradingCoweight:
    rs: RootSystem = field(compare=False, repr=False)
    coeffs: tuple[int, ...]

    @classmethod
    def of(cls, rs: RootSystem, value) -> "GradingCoweight":
        if isinstance(value, str):
            coeffs = parse_coweight(rs, value)
        elif isinstance(value, Point):
            coeffs = coweight_coords(rs, value)
        else:
            coeffs = tuple(int(c) for c in value)
        if any(c < 0 for c in coeffs) or sum(m * c for m, c in zip(rs.marks, coeffs)) > 2:
            raise HypothesisViolation(f"{format_coweight(coeffs)} is not in the doubled alcove")
        return cls(rs, coeffs)

    @cached_property
    def point(self) -> Point:
        return self.rs.coweight_point(self.coeffs)

    @property
    def label(self) -> str:
        return format_coweight(self.coeffs)

    def __repr__(self) -> str:
        return f"GradingCoweight({self.rs.name}, {self.label})"

    def value(self, alpha: Sequence[int]) -> int:
        return sum(a * c for a, c in zip(alpha, self.coeffs))

    def level(self, k: int) -> frozenset[Root]:
        return frozenset(a for a in self.rs.positive_roots if self.value(a) == k)

    @cached_property
    def kind(self) -> int:
        """1: 2 w_i (mark 1); 2: w_i (mark 2); 3: w_i + w_j (marks 1); 4: w_i (mark 1); 5: 0."""
        support = [i for i, c in enumerate(self.coeffs) if c]
        marks = self.rs.marks
        if not support:
            return 5
        if len(support) == 2:
            return 3
        (i,) = support
        if self.coeffs[i] == 2:
            return 1
        return 2 if marks[i] == 2 else 4

    @cached_property
    def compact_positive(self) -> frozenset[Root]:
        """Positive system -level(2) + level(0) of the even subsystem."""
        return frozenset(_neg(a) for a in self.level(2)) | self.level(0)

    @cached_property
    def compact_roots(self) -> frozenset[Root]:
        pos = self.compact_positive
        return pos | frozenset(_neg(a) for a in pos)

    def is_compact(self, alpha: Sequence[int]) -> bool:
        return self.value(alpha) % 2 == 0

    @cached_property
    def compact_simple(self) -> tuple[Root, ...]:
        """Simple roots orthogonal to tau, with -theta appended when (tau, theta) = 2."""
        rs = self.rs
        out = [a for a in rs.simple_roots if self.value(a) == 0]
        if self.value(rs.highest_root) == 2:
            out.append(_neg(rs.highest_root))
        return tuple(out)

    @cached_property
    def compact_weyl_order(self) -> int:
        simple = self.compact_simple
        heights = []
        for b in self.compact_positive:
            c = solve_in_span(simple, b)
            heights.append(int(sum(c)))
        return product_of_exponents_plus_one(heights)

    @cached_property
    def index(self) -> int:
        """[W : W_tau], the number of cosets of the compact Weyl group."""
        return self.rs.weyl_order // self.compact_weyl_order

    def coset_key(self, w: WeylElt) -> WeylElt:
        """The element u of W_tau w with u^{-1}(compact_positive) inside the positive roots."""
        return canonical_coset_rep(self.rs, w, self.compact_simple)

    def nilradical(self) -> frozenset[Root]:
        """Roots of the nilradical: positive levels 1 and 2."""
        return self.level(1) | self.level(2)


def grading_coweights(rs: RootSystem) -> list[GradingCoweight]:
    """All coweights in the closed doubled alcove, in a fixed order."""
    out = []
    for c in itertools.product(range(3), repeat=rs.rank):
        if sum(m * x for m, x in zip(rs.marks, c)) <= 2:
            out.append(GradingCoweight(rs, tuple(c)))
    return sorted(out, key=lambda t: (t.kind, t.coeffs[::-1]))


def special_coweight_table(rs: RootSystem) -> dict[int, list[GradingCoweight]]:
    """Coweights with nonempty level 2, grouped by kind 1, 2, 3."""
    table: dict[int, list[GradingCoweight]] = {1: [], 2: [], 3: []}
    for t in grading_coweights(rs):
        if t.level(2):
            table[t.kind].append(t)
    for k in table:
        table[k].sort(key=lambda t: [i for i, c in enumerate(t.coeffs) for _ in range(c)])
    return table


def _as_tau(rs: RootSystem, tau) -> GradingCoweight:
    return tau if isinstance(tau, GradingCoweight) else GradingCoweight.of(rs, tau)


# -- fibres of the dominance map -------------------------------------------------------

def abelian_fiber(rs: RootSystem, tau) -> list[Point]:
    """Points z with root values in {0, 1, -1, -2} and dominant conjugate tau."""
    t = _as_tau(rs, tau)
    return [z for z in abelian_points(rs) if dominant(rs, z) == t.point]


def simplex_fiber(rs: RootSystem, tau) -> list[Point]:
    """All coweight lattice points of the simplex with dominant conjugate tau."""
    t = _as_tau(rs, tau)
    return [z for z in simplex_points(rs) if dominant(rs, z) == t.point]


def borel_roots(rs: RootSystem, z: Sequence) -> frozenset[Root]:
    """v_z^{-1}(positive roots): the roots of the Borel subalgebra b_z."""
    vinv = chamber_element(rs, z).inverse()
    return frozenset(vinv(a) for a in rs.positive_roots)


def is_compatible_borel(rs: RootSystem, z: Sequence, tau=None) -> bool:
    """No three roots of b_z in p_tau with alpha + beta and alpha + beta + gamma roots."""
    t = _as_tau(rs, tau if tau is not None else dominant(rs, z))
    odd = [b for b in borel_roots(rs, z) if not t.is_compact(b)]
    sums = {s for a in odd for b in odd if rs.is_root(s := _add(a, b))}
    return not any(rs.is_root(_add(s, c)) for s in sums for c in odd)


def compatible_fiber(rs: RootSystem, tau) -> dict[str, object]:
    """The compatible points over tau and the matching with the stabilizer of 2 C_1.

    Each s = t_nu v in the stabilizer is sent to the point z of the abelian fibre with
    W_tau v_z^{-1} = W_tau v.
    """
    t = _as_tau(rs, tau)
    if t.kind in (1, 5):
        raise HypothesisViolation(f"{t.label} is 0 or twice a minuscule coweight")
    fiber = abelian_fiber(rs, t)
    compatible = [z for z in fiber if is_compatible_borel(rs, z, t)]
    matching = []
    for s in alcove_stabilizer(rs, 2):
        key = t.coset_key(s.v)
        z = key.inverse()(t.point)
        matching.append((s, z))
    return {"tau": t, "fiber": fiber, "compatible": compatible, "matching": matching}


# -- special, nilradical and submodule ideals ---------------------------------------------

def special_ideal(rs: RootSystem, tau) -> Ideal:
    t = _as_tau(rs, tau)
    return Ideal.from_roots(rs, t.level(2))


def nilradical_of_weight(rs: RootSystem, x: Sequence) -> frozenset[Root]:
    """Positive roots pairing positively with a dominant x; an upward-closed set."""
    if not rs.is_dominant(x):
        raise ValueError("weight must be dominant")
    return frozenset(a for a in rs.positive_roots if rs.pairing(a, x) > 0)


def commutator_roots(rs: RootSystem, roots: Iterable[Root]) -> frozenset[Root]:
    roots = list(roots)
    return frozenset(s for a in roots for b in roots if rs.is_root(s := _add(a, b)))


def centralizer_roots(rs: RootSystem, roots: Iterable[Root]) -> frozenset[Root]:
    """Roots gamma of the set with gamma + alpha never a root for alpha in the set."""
    roots = list(roots)
    return frozenset(g for g in roots if not any(rs.is_root(_add(g, a)) for a in roots))


def is_special(ideal: Ideal) -> bool:
    """[n, n] is contained in the ideal, which equals the centre of n, where n is the
    nilradical cut out by the sum of the roots of the ideal."""
    from .ideals import ideal_weight

    rs = ideal.rs
    n = nilradical_of_weight(rs, ideal_weight(ideal))
    roots = ideal.root_set
    return commutator_roots(rs, n) <= roots and centralizer_roots(rs, n) == roots


def is_nilradical_ideal(ideal: Ideal) -> bool:
    """Is the ideal V_omega for a mark-one coweight omega (or empty)?"""
    rs = ideal.rs
    return ideal.root_set in {frozenset(v) for v in minuscule_nilradicals(rs).values()}


def minuscule_nilradicals(rs: RootSystem) -> dict[int, frozenset[Root]]:
    """V_omega for omega in {0} and the mark-one coweights, keyed by index (-1 for 0)."""
    out = {-1: frozenset()}
    for j in rs.minuscule_indices:
        out[j] = rs.dual_order_ideal(rs.simple_root(j))
    return out


def decompositions(ideal: Ideal) -> list[tuple[GradingCoweight, frozenset[Root]]]:
    """All ways to write an abelian ideal as level(2) of some tau plus a set inside level(1)."""
    rs = ideal.rs
    roots = ideal.root_set
    out = []
    for t in grading_coweights(rs):
        top = t.level(2)
        if top and top <= roots and roots - top <= t.level(1):
            out.append((t, roots - top))
    return out


def containing_minuscule(ideal: Ideal) -> set[int]:
    """Indices of the V_omega containing the ideal (-1 stands for omega = 0)."""
    return {j for j, v in minuscule_nilradicals(ideal.rs).items() if ideal.root_set <= v}


def containing_minuscule_via_points(ideal: Ideal) -> set[int]:
    """The same set, read from the dominant conjugates of a simplex orbit."""
    rs = ideal.rs
    z = next(z for z in abelian_points(rs) if ideal_of_point(rs, z, "abelian") == ideal)
    labels = {}
    labels[rs.coweight_point([0] * rs.rank)] = -1
    for j in rs.minuscule_indices:
        labels[rs.fundamental_coweights[j]] = j
    out = set()
    for s in simplex_stabilizer(rs):
        d = dominant(rs, s(z))
        if d in labels:
            out.add(labels[d])
    return out


def is_bk_submodule(t: GradingCoweight, s: Iterable[Root]) -> bool:
    rs = t.rs
    s = set(s)
    zero = t.level(0)
    return all(_add(a, b) in s for b in s for a in zero if rs.is_root(_add(a, b)))


def bk_submodules(rs: RootSystem, tau) -> list[frozenset[Root]]:
    """Subsets of level(1) stable under adding level-0 positive roots (brute force)."""
    t = _as_tau(rs, tau)
    ones = sorted(t.level(1), key=lambda r: (sum(r), r))
    out = []
    for k in range(len(ones) + 1):
        for combo in itertools.combinations(ones, k):
            if is_bk_submodule(t, combo):
                out.append(frozenset(combo))
    return out


def abelian_bk_submodules(rs: RootSystem, tau) -> list[frozenset[Root]]:
    return [s for s in bk_submodules(rs, tau) if not commutator_roots(rs, s)]


def submodule_of_point(rs: RootSystem, z: Sequence) -> frozenset[Root]:
    """v_z^{-1} of the positive roots with (alpha, z) = 1."""
    vinv = chamber_element(rs, z).inverse()
    return frozenset(vinv(a) for a in level_set(rs, z, 1))


def point_from_submodule(rs: RootSystem, tau, s: Iterable[Root]) -> Point:
    """A simplex point z over tau with submodule_of_point(z) == s, for s a
    b_k-submodule of level(1)."""
    t = _as_tau(rs, tau)
    s = frozenset(s)
    flips = (t.level(2) - commutator_roots(rs, s)) | (t.level(1) - s)
    v = finite_from_inversions(rs, flips)
    return v.inverse()(t.point)


# -- operation names used in the interface description --------------------------------

enumerate_X = grading_coweights
table_I = special_coweight_table
fiber_Ztilde_tau = abelian_fiber
fiber_Zhat_tau = simplex_fiber
cmpt_fiber = compatible_fiber
submodules_bp = bk_submodules
abelian_submodules_bp = abelian_bk_submodules
