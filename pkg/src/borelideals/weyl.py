"""Finite, affine and extended affine Weyl groups.

A finite Weyl group element is an integer matrix acting on simple-root
coordinates (column i is the image of alpha_i).  An extended affine element
``t_tau v`` acts by ``x -> v(x) + tau`` and composes by
``(t_tau v)(t_sigma u) = t_{tau + v(sigma)} vu``.

Affine roots ``alpha + k delta`` are the affine functions ``x -> (alpha, x) + k``;
they are positive exactly when positive on the fundamental alcove.  Affine
words use 0 for the affine node and 1..n for the simple roots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .rootsys import Point, Root, RootSystem

Matrix = tuple[tuple[int, ...], ...]

MAX_GROUP_ORDER = 10**6


class NotBiclosed(ValueError):
    """The given set is not the inversion set of any group element."""


class GroupTooLarge(RuntimeError):
    pass


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n) if a[r][k]) for c in range(n)) for r in range(n)
    )


def _apply(m: Matrix, x: Sequence):
    n = len(m)
    return tuple(sum(m[r][c] * x[c] for c in range(n) if x[c]) for r in range(n))


def reflection_matrix(rs: RootSystem, alpha: Root) -> Matrix:
    cols = [rs.reflect_root(rs.simple_root(c), alpha) for c in range(rs.rank)]
    return tuple(tuple(cols[c][r] for c in range(rs.rank)) for r in range(rs.rank))


def _is_negative(v: Sequence[int]) -> bool:
    return any(c < 0 for c in v)


@dataclass(frozen=True)
class WeylElt:
    rs: RootSystem = field(compare=False, repr=False)
    mat: Matrix

    @classmethod
    def identity(cls, rs: RootSystem) -> "WeylElt":
        return cls(rs, _identity(rs.rank))

    @classmethod
    def simple(cls, rs: RootSystem, i: int) -> "WeylElt":
        return _simple_reflections(rs)[i]

    @classmethod
    def reflection(cls, rs: RootSystem, alpha: Root) -> "WeylElt":
        return cls(rs, reflection_matrix(rs, alpha))

    @classmethod
    def from_word(cls, rs: RootSystem, word: Iterable[int]) -> "WeylElt":
        """Product s_{w[0]} s_{w[1]} ... with 0-based indices."""
        w = cls.identity(rs)
        for i in word:
            w = w * cls.simple(rs, i)
        return w

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return WeylElt(self.rs, _matmul(self.mat, other.mat))

    def __call__(self, x):
        if isinstance(x, Point):
            return Point(_apply(self.mat, x.coords))
        return _apply(self.mat, x)

    def inverse(self) -> "WeylElt":
        return self._inverse

    @cached_property
    def _inverse(self) -> "WeylElt":
        # w preserves the form F, so w^{-1} = F^{-1} w^T F
        rs = self.rs
        n = rs.rank
        f, finv = rs.form, rs.form_inverse
        wt_f = [[sum(self.mat[k][r] * f[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
        inv = tuple(
            tuple(int(sum(finv[r][k] * wt_f[k][c] for k in range(n))) for c in range(n)) for r in range(n)
        )
        return WeylElt(rs, inv)

    def is_identity(self) -> bool:
        return self.mat == _identity(self.rs.rank)

    def column(self, i: int) -> Root:
        return tuple(row[i] for row in self.mat)

    @cached_property
    def word(self) -> tuple[int, ...]:
        """Canonical reduced word (0-based), stripping the smallest right descent first."""
        rs = self.rs
        w = self
        out: list[int] = []
        while True:
            i = next((i for i in range(rs.rank) if _is_negative(w.column(i))), None)
            if i is None:
                break
            out.append(i)
            w = w * WeylElt.simple(rs, i)
        return tuple(reversed(out))

    @property
    def length(self) -> int:
        return sum(1 for a in self.rs.positive_roots if _is_negative(self(a)))

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def inversion_set(self) -> frozenset[Root]:
        """{alpha > 0 : w^{-1} alpha < 0}."""
        inv = self.inverse()
        return frozenset(a for a in self.rs.positive_roots if _is_negative(inv(a)))

    def bourbaki_word(self) -> list[int]:
        return [i + 1 for i in self.word]

    def __repr__(self) -> str:
        return f"WeylElt({self.rs.name}, s{self.bourbaki_word()})"


_SIMPLE_CACHE: dict[str, list[WeylElt]] = {}
_AFFINE_CACHE: dict[str, list["ExtAffineElt"]] = {}


def _simple_reflections(rs: RootSystem) -> list[WeylElt]:
    if rs.name not in _SIMPLE_CACHE:
        _SIMPLE_CACHE[rs.name] = [WeylElt(rs, reflection_matrix(rs, a)) for a in rs.simple_roots]
    return _SIMPLE_CACHE[rs.name]


def _affine_simple_reflections(rs: RootSystem) -> list["ExtAffineElt"]:
    if rs.name not in _AFFINE_CACHE:
        theta = rs.highest_root
        gens = [ExtAffineElt(rs.coroot(theta), WeylElt.reflection(rs, theta))]
        gens += [ExtAffineElt(Point.zero(rs.rank), w) for w in _simple_reflections(rs)]
        _AFFINE_CACHE[rs.name] = gens
    return _AFFINE_CACHE[rs.name]


def finite_from_inversions(rs: RootSystem, roots: Iterable[Root]) -> WeylElt:
    """The w in W with N(w) equal to the given set of positive roots."""
    target = frozenset(roots)
    cur = set(target)
    word: list[int] = []
    while cur:
        i = next((i for i in range(rs.rank) if rs.simple_root(i) in cur), None)
        if i is None:
            raise NotBiclosed("no simple root in the remaining set")
        a = rs.simple_root(i)
        cur.discard(a)
        cur = {rs.reflect_root(b, a) for b in cur}
        if any(_is_negative(b) for b in cur):
            raise NotBiclosed("peeling produced a negative root")
        word.append(i)
    w = WeylElt.from_word(rs, word)
    if w.inversion_set() != target:
        raise NotBiclosed("set is not an inversion set")
    return w


def longest_element(rs: RootSystem, subset: Iterable[int] | None = None) -> WeylElt:
    """Longest element of the parabolic subgroup generated by the given simple indices."""
    idx = sorted(range(rs.rank) if subset is None else set(subset))
    u = WeylElt.identity(rs)
    while True:
        i = next((i for i in idx if not _is_negative(u.column(i))), None)
        if i is None:
            return u
        u = u * WeylElt.simple(rs, i)


def generate_group(rs: RootSystem, generators: Sequence[WeylElt], limit: int = MAX_GROUP_ORDER) -> list[WeylElt]:
    """All elements of the subgroup generated, by breadth-first search."""
    seen = {_identity(rs.rank)}
    out = [WeylElt.identity(rs)]
    frontier = list(out)
    while frontier:
        nxt = []
        for w in frontier:
            for g in generators:
                m = _matmul(w.mat, g.mat)
                if m not in seen:
                    seen.add(m)
                    e = WeylElt(rs, m)
                    out.append(e)
                    nxt.append(e)
                    if len(out) > limit:
                        raise GroupTooLarge(f"group exceeds {limit} elements")
        frontier = nxt
    return out


def enumerate_weyl_group(rs: RootSystem) -> list[WeylElt]:
    if rs.weyl_order > MAX_GROUP_ORDER:
        raise GroupTooLarge(f"|W({rs.name})| = {rs.weyl_order} is too large to materialize")
    return generate_group(rs, [WeylElt.simple(rs, i) for i in range(rs.rank)])


def reflection_subgroup(rs: RootSystem, simple: Sequence[Root]) -> list[WeylElt]:
    return generate_group(rs, [WeylElt.reflection(rs, b) for b in simple])


# -- subsystems and cosets ----------------------------------------------------------

def _as_root(v) -> Root:
    return tuple(int(c) for c in v)


def subsystem_simple_roots(rs: RootSystem, positive: Iterable[Root]) -> tuple[Root, ...]:
    """Indecomposable elements of a positive system of a closed subsystem."""
    pos = set(positive)
    out = []
    for b in sorted(pos, key=lambda r: (rs.height(r), r)):
        if not any(_as_root(x - y for x, y in zip(b, a)) in pos for a in pos if a != b):
            out.append(b)
    return tuple(out)


def check_closed_positive_system(rs: RootSystem, positive: Iterable[Root]) -> None:
    pos = set(positive)
    neg = {tuple(-c for c in r) for r in pos}
    if pos & neg:
        raise ValueError("not a positive system: contains a root and its negative")
    full = pos | neg
    for a in full:
        if not rs.is_root(a):
            raise ValueError(f"{a} is not a root")
        for b in full:
            s = tuple(x + y for x, y in zip(a, b))
            if rs.is_root(s) and s not in full:
                raise ValueError("subsystem is not closed")
    for a in pos:
        for b in pos:
            s = tuple(x + y for x, y in zip(a, b))
            if s in full and s not in pos:
                raise ValueError("not a positive system: not closed under addition")


def canonical_coset_rep(rs: RootSystem, w: WeylElt, subsystem_simple: Sequence[Root]) -> WeylElt:
    """Representative u of the coset W' w with u(positive roots) containing the
    positive roots of W'.  When those simple roots are all positive it is the
    shortest element of the coset."""
    refl = {b: WeylElt.reflection(rs, b) for b in subsystem_simple}
    while True:
        inv = w.inverse()
        b = next((b for b in subsystem_simple if _is_negative(inv(b))), None)
        if b is None:
            return w
        w = refl[b] * w


def coset_reps(rs: RootSystem, subsystem_positive: Iterable[Root]) -> tuple[list[WeylElt], int]:
    """Shortest representatives of the right cosets W' w of the reflection subgroup
    attached to a positive system of a closed subsystem, and their number [W : W']."""
    pos = [tuple(r) for r in subsystem_positive]
    check_closed_positive_system(rs, pos)
    simple = subsystem_simple_roots(rs, pos)
    reps = {canonical_coset_rep(rs, w, simple) for w in enumerate_weyl_group(rs)}
    return sorted(reps, key=lambda u: (u.length, u.word)), len(reps)


# -- affine roots and extended affine elements -----------------------------------------

class AffineRoot(NamedTuple):
    alpha: Root
    level: int

    def is_positive(self) -> bool:
        if self.level > 0:
            return True
        return self.level == 0 and not _is_negative(self.alpha)

    def evaluate(self, rs: RootSystem, x: Sequence) -> Q:
        return rs.pairing(self.alpha, x) + self.level

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "level": self.level}


def affine_simple_root(rs: RootSystem, i: int) -> AffineRoot:
    """i = 0 gives -theta + delta, i >= 1 gives alpha_i."""
    if i == 0:
        return AffineRoot(tuple(-c for c in rs.highest_root), 1)
    return AffineRoot(rs.simple_root(i - 1), 0)


@dataclass(frozen=True)
class ExtAffineElt:
    tau: Point
    v: WeylElt

    @property
    def rs(self) -> RootSystem:
        return self.v.rs

    @classmethod
    def identity(cls, rs: RootSystem) -> "ExtAffineElt":
        return cls(Point.zero(rs.rank), WeylElt.identity(rs))

    @classmethod
    def translation(cls, rs: RootSystem, tau: Point) -> "ExtAffineElt":
        return cls(tau, WeylElt.identity(rs))

    @classmethod
    def simple(cls, rs: RootSystem, i: int) -> "ExtAffineElt":
        return _affine_simple_reflections(rs)[i]

    @classmethod
    def from_word(cls, rs: RootSystem, word: Iterable[int]) -> "ExtAffineElt":
        w = cls.identity(rs)
        for i in word:
            w = w * cls.simple(rs, i)
        return w

    def __mul__(self, other: "ExtAffineElt") -> "ExtAffineElt":
        return ExtAffineElt(self.tau + self.v(other.tau), self.v * other.v)

    def inverse(self) -> "ExtAffineElt":
        vi = self.v.inverse()
        return ExtAffineElt(-vi(self.tau), vi)

    def __call__(self, x: Point) -> Point:
        return self.v(Point.of(x)) + self.tau

    def act_root(self, a: AffineRoot) -> AffineRoot:
        va = self.v(a.alpha)
        k = a.level - self.rs.pairing(va, self.tau)
        return AffineRoot(va, int(k))

    def in_affine_weyl_group(self) -> bool:
        return self.rs.in_coroot_lattice(self.tau)

    def alcove_point(self) -> Point:
        """Image of an interior point of the fundamental alcove."""
        rs = self.rs
        return self(rs.rho_vee * Q(1, rs.coxeter_number))

    def alcove_vertices(self) -> list[Point]:
        rs = self.rs
        return [self(Point.zero(rs.rank))] + [self(o) for o in rs.minuscule_vertices]

    def inversion_set(self) -> frozenset[AffineRoot]:
        """N(w) = {a > 0 : w^{-1} a < 0}, read off from the hyperplanes separating the
        fundamental alcove from its image."""
        return _inversions_of(self)

    @property
    def length(self) -> int:
        return len(self.inversion_set())

    def affine_word(self) -> list[int]:
        """Reduced word of the affine Weyl group part (requires tau in the coroot lattice)."""
        if not self.in_affine_weyl_group():
            raise ValueError("element is not in the affine Weyl group")
        return affine_word_from_inversions(self.rs, self.inversion_set())

    def to_json(self) -> dict:
        return {"tau": self.tau.to_json(), "v": self.v.bourbaki_word()}

    @classmethod
    def from_json(cls, rs: RootSystem, data: dict) -> "ExtAffineElt":
        return cls(Point.of(Q(t) for t in data["tau"]), WeylElt.from_word(rs, [i - 1 for i in data["v"]]))

    def __repr__(self) -> str:
        return f"t[{', '.join(str(c) for c in self.tau)}]{self.v!r}"


def inversions_at_point(rs: RootSystem, p: Point) -> frozenset[AffineRoot]:
    """Positive affine roots negative at p (p must lie off every affine hyperplane)."""
    out = []
    for a in rs.positive_roots:
        t = rs.pairing(a, p)
        if t.denominator == 1:
            raise ValueError("point lies on an affine hyperplane")
        if t < 0:
            out.extend(AffineRoot(a, k) for k in range(0, math.ceil(-t)))
        else:
            neg = tuple(-c for c in a)
            out.extend(AffineRoot(neg, k) for k in range(1, math.ceil(t)))
    return frozenset(out)


def _inversions_of(w: "ExtAffineElt") -> frozenset[AffineRoot]:
    # at the alcove point, (alpha, p) = (alpha, tau) + ht(v^{-1} alpha) / h with
    # 0 < |ht| < h, so every count below is an integer computation
    rs = w.rs
    tau_d = rs.dual_coords(w.tau)
    if any(c.denominator != 1 for c in tau_d):
        raise ValueError("translation part is not in the coweight lattice")
    tau_d = [int(c) for c in tau_d]
    vinv = w.v.inverse().mat
    n = rs.rank
    colsum = [sum(vinv[r][j] for r in range(n)) for j in range(n)]
    out = []
    for alpha in rs.positive_roots:
        a = sum(x * y for x, y in zip(alpha, tau_d))
        b = sum(x * y for x, y in zip(alpha, colsum))
        if a < 0 or (a == 0 and b < 0):
            top = -a if b > 0 else -a + 1
            out.extend(AffineRoot(alpha, k) for k in range(0, top))
        else:
            top = a + 1 if b > 0 else a
            neg = tuple(-c for c in alpha)
            out.extend(AffineRoot(neg, k) for k in range(1, top))
    return frozenset(out)


class _Peeler:
    """Integer action of the affine simple reflections on affine roots."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        self.theta = rs.highest_root
        self.theta_dual = [int(c) for c in rs.dual_coords(self.theta)]
        self.cartan_cols = [[rs.cartan[j][i] for j in range(n)] for i in range(n)]
        self.simples = [affine_simple_root(rs, i) for i in range(n + 1)]

    def reflect(self, i: int, a: AffineRoot) -> AffineRoot:
        beta, k = a
        if i == 0:
            c = sum(x * y for x, y in zip(beta, self.theta_dual))
            return AffineRoot(tuple(x - c * t for x, t in zip(beta, self.theta)), k + c)
        col = self.cartan_cols[i - 1]
        c = sum(x * y for x, y in zip(beta, col))
        if not c:
            return a
        b = list(beta)
        b[i - 1] -= c
        return AffineRoot(tuple(b), k)


_PEELERS: dict[str, _Peeler] = {}


def _peeler(rs: RootSystem) -> _Peeler:
    p = _PEELERS.get(rs.name)
    if p is None:
        p = _PEELERS[rs.name] = _Peeler(rs)
    return p


def affine_word_from_inversions(rs: RootSystem, roots: Iterable[AffineRoot]) -> list[int]:
    """Greedy peeling of simple affine roots; raises NotBiclosed when stuck."""
    peel = _peeler(rs)
    cur = set(roots)
    word: list[int] = []
    while cur:
        i = next((i for i, s in enumerate(peel.simples) if s in cur), None)
        if i is None:
            raise NotBiclosed("no simple affine root in the remaining set")
        cur.discard(peel.simples[i])
        cur = {peel.reflect(i, b) for b in cur}
        if not all(b.is_positive() for b in cur):
            raise NotBiclosed("peeling produced a negative affine root")
        word.append(i)
    return word


def element_from_inversions(rs: RootSystem, roots: Iterable[AffineRoot]) -> ExtAffineElt:
    """The unique element of the affine Weyl group whose inversion set is the given
    finite set of positive affine roots."""
    target = frozenset(AffineRoot(tuple(a.alpha), a.level) for a in roots)
    if not all(a.is_positive() for a in target):
        raise NotBiclosed("set contains a non-positive affine root")
    w = ExtAffineElt.from_word(rs, affine_word_from_inversions(rs, target))
    if w.inversion_set() != target:
        raise NotBiclosed("set is not an inversion set")
    return w


# -- alcove geometry ----------------------------------------------------------------

def in_orbit_of_alcove(rs: RootSystem, x: Sequence, k) -> bool:
    """Is x in the W-orbit of the closed dilated alcove k * C_1?"""
    return all(abs(rs.pairing(b, x)) <= k for b in rs.positive_roots)


def in_closed_alcove(rs: RootSystem, x: Sequence, k) -> bool:
    """Is x in the closure of {(x, alpha_i) > 0, (x, theta) < k}?"""
    return rs.is_dominant(x) and rs.pairing(rs.highest_root, x) <= k


def maps_alcove_into(w: ExtAffineElt, k) -> bool:
    """w(C_1) inside C_k (k may be math.inf for the dominant chamber)."""
    rs = w.rs
    if k == math.inf:
        return all(rs.is_dominant(p) for p in w.alcove_vertices())
    return all(in_closed_alcove(rs, p, k) for p in w.alcove_vertices())


def separates(rs: RootSystem, alpha: Root, w: ExtAffineElt) -> bool:
    """Does the hyperplane (alpha, x) = 1 separate C_1 from w(C_1)?"""
    return rs.pairing(alpha, w.alcove_point()) > 1


def _coweight_stabilizer(rs: RootSystem, r: int) -> list[ExtAffineElt]:
    w0 = longest_element(rs)
    out = [ExtAffineElt.identity(rs)]
    for j in rs.minuscule_indices:
        w0j = longest_element(rs, [i for i in range(rs.rank) if i != j])
        out.append(ExtAffineElt(rs.fundamental_coweights[j] * r, w0j * w0))
    return out


def alcove_stabilizer(rs: RootSystem, r: int = 1) -> list[ExtAffineElt]:
    """Elements of the extended affine Weyl group stabilizing the dilated alcove r C_1,
    listed as the identity followed by one element per mark-one node."""
    return _coweight_stabilizer(rs, r)


def simplex_stabilizer(rs: RootSystem) -> list[ExtAffineElt]:
    """The group of symmetries t_{-omega_j} w_0^j w_0 of the simplex of lattice points."""
    return _coweight_stabilizer(rs, -1)


def affine_elements_up_to(rs: RootSystem, max_length: int) -> list[ExtAffineElt]:
    """All elements of the affine Weyl group of length at most max_length."""
    gens = [ExtAffineElt.simple(rs, i) for i in range(rs.rank + 1)]
    start = ExtAffineElt.identity(rs)
    seen = {start.alcove_point()}
    out = [start]
    frontier = [start]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for g in gens:
                u = w * g
                p = u.alcove_point()
                if p not in seen:
                    seen.add(p)
                    out.append(u)
                    nxt.append(u)
        frontier = nxt
    return out


# -- operation names used in the interface description --------------------------------

def act(w: ExtAffineElt, x: Sequence) -> Point:
    return w(Point.of(x))


def inversion_set_affine(w: ExtAffineElt) -> frozenset[AffineRoot]:
    return w.inversion_set()


in_W_orbit_of_alcove = in_orbit_of_alcove
omega_r = alcove_stabilizer
sigma = simplex_stabilizer
