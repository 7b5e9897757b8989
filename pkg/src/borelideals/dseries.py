"""Minimal K-types and truncated K-spectra of discrete series attached to points
of the abelian fibres.

For a point z over tau, the Borel subalgebra b_z has roots v_z^{-1}(positive roots).
A Harish-Chandra parameter lambda belongs to z when lambda is regular and its
positive roots are exactly those of b_z.  Characters of the Levi factor m are
Counters mapping weights (Points in simple-root coordinates) to multiplicities.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import cached_property
from typing import Iterable, Sequence

from .lattice import chamber_element, dominant, ideal_of_point, is_abelian_point
from .rootsys import Point, Root, RootSystem, build_root_system, solve_in_span
from .symmspace import GradingCoweight, HypothesisViolation, is_compatible_borel
from .weyl import WeylElt, _identity, _matmul

Character = Counter


class NotAParameter(ValueError):
    pass


def _pt(v) -> Point:
    return v if isinstance(v, Point) else Point.of(v)


def _sum_roots(rs: RootSystem, roots: Iterable[Root]) -> Point:
    acc = [Q(0)] * rs.rank
    for r in roots:
        for i, c in enumerate(r):
            acc[i] += c
    return Point(tuple(acc))


# -- parameters ----------------------------------------------------------------

@dataclass(frozen=True)
class HCParameter:
    rs: RootSystem = field(compare=False, repr=False)
    lam: Point
    z: Point
    tau: GradingCoweight

    @cached_property
    def v_z(self) -> WeylElt:
        return chamber_element(self.rs, self.z)

    @cached_property
    def positive_roots(self) -> frozenset[Root]:
        vinv = self.v_z.inverse()
        return frozenset(vinv(a) for a in self.rs.positive_roots)


def cell_rho(rs: RootSystem, z: Sequence) -> Point:
    """v_z^{-1}(rho), the smallest parameter attached to z."""
    return chamber_element(rs, z).inverse()(rs.rho)


def parameter_at(rs: RootSystem, z: Sequence, lam: Sequence | None = None) -> HCParameter:
    """Harish-Chandra parameter lam (default v_z^{-1} rho) attached to z."""
    z = _pt(z)
    if not is_abelian_point(rs, z):
        raise NotAParameter("z must have root values in {0, 1, -1, -2}")
    tau = GradingCoweight.of(rs, dominant(rs, z))
    lam = cell_rho(rs, z) if lam is None else _pt(lam)
    hc = HCParameter(rs, lam, z, tau)
    _check(hc)
    return hc


def parameter_for(rs: RootSystem, lam: Sequence, tau) -> HCParameter:
    """Locate the point z over tau whose Borel subalgebra is the positive system of lam."""
    lam = _pt(lam)
    t = tau if isinstance(tau, GradingCoweight) else GradingCoweight.of(rs, tau)
    v = chamber_element(rs, lam)  # positive roots of lam are v(positive roots)
    z = v.inverse()(t.point)
    if not is_abelian_point(rs, z) or chamber_element(rs, z) != v.inverse():
        raise NotAParameter("positive system of lambda does not contain the compact positive roots")
    hc = HCParameter(rs, lam, z, t)
    _check(hc)
    return hc


def _check(hc: HCParameter) -> None:
    rs = hc.rs
    if not rs.in_weight_lattice(hc.lam):
        raise NotAParameter("lambda is not integral")
    vinv = hc.v_z.inverse()
    if not all(rs.pairing(hc.lam, vinv(a)) > 0 for a in rs.simple_roots):
        raise NotAParameter("lambda is singular or not in the chamber of b_z")


# -- minimal K-type -------------------------------------------------------------------

def half_sums(hc: HCParameter) -> tuple[Point, Point]:
    """(rho_c, rho_n): half sums of compact and noncompact roots of b_z."""
    rs = hc.rs
    comp = [b for b in hc.positive_roots if hc.tau.is_compact(b)]
    nonc = [b for b in hc.positive_roots if not hc.tau.is_compact(b)]
    return _sum_roots(rs, comp) * Q(1, 2), _sum_roots(rs, nonc) * Q(1, 2)


def minimal_k_type(hc: HCParameter) -> Point:
    """lambda + rho_n - rho_c."""
    rho_c, rho_n = half_sums(hc)
    return hc.lam + rho_n - rho_c


def tau_tilde(rs: RootSystem, tau: Sequence) -> Point:
    """sum over all roots of (alpha, tau) alpha."""
    acc = _sum_roots(rs, [])
    for a in rs.positive_roots:
        acc = acc + Point.of(a) * (2 * rs.pairing(a, tau))
    return acc


def minimal_k_type_from_ideal(hc: HCParameter) -> Point:
    """lambda - rho_z + 2 <i_z> - tau_tilde / 2, with <i_z> the root sum of the ideal of z."""
    rs = hc.rs
    ideal = ideal_of_point(rs, hc.z, "abelian")
    rho_z = cell_rho(rs, hc.z)
    return hc.lam - rho_z + _sum_roots(rs, ideal.roots) * 2 - tau_tilde(rs, hc.tau.point) * Q(1, 2)


def is_compact_dominant(hc: HCParameter, mu: Sequence) -> bool:
    rs = hc.rs
    return all(rs.pairing(mu, b) >= 0 for b in hc.tau.compact_simple)


def cohomological_degree(rs: RootSystem, z: Sequence) -> int:
    """Number of roots in the ideal attached to z."""
    return len(ideal_of_point(rs, z, "abelian"))


# -- Levi data -----------------------------------------------------------------------------

@dataclass
class LeviDatum:
    """The theta-stable parabolic m + u of a parameter: m is spanned by the compact
    simple roots of b_z."""

    rs: RootSystem
    tau: GradingCoweight
    positive: frozenset[Root]
    simple: tuple[Root, ...]
    m_positive: frozenset[Root]
    u_roots: frozenset[Root]
    u_p: frozenset[Root]
    u_k: frozenset[Root]

    @cached_property
    def rho_m(self) -> Point:
        return _sum_roots(self.rs, self.m_positive) * Q(1, 2)

    @cached_property
    def weyl_group(self) -> list[tuple[WeylElt, int]]:
        return signed_reflection_group(self.rs, self.simple)

    def is_dominant(self, mu: Sequence) -> bool:
        return all(self.rs.pairing(mu, b) >= 0 for b in self.simple)


def levi_datum(hc: HCParameter) -> LeviDatum:
    return levi_for_point(hc.rs, hc.z, hc.tau)


def levi_for_point(rs: RootSystem, z: Sequence, tau: GradingCoweight | None = None) -> LeviDatum:
    tau = tau or GradingCoweight.of(rs, dominant(rs, z))
    vinv = chamber_element(rs, z).inverse()
    compact_idx = [i for i in range(rs.rank) if tau.is_compact(vinv(rs.simple_root(i)))]
    positive = frozenset(vinv(a) for a in rs.positive_roots)
    simple = tuple(vinv(rs.simple_root(i)) for i in compact_idx)
    m_pos = frozenset(vinv(a) for a in rs.positive_roots if all(a[i] == 0 for i in range(rs.rank) if i not in compact_idx))
    u = positive - m_pos
    u_p = frozenset(b for b in u if not tau.is_compact(b))
    return LeviDatum(rs, tau, positive, simple, m_pos, u, u_p, u - u_p)


def signed_reflection_group(rs: RootSystem, simple: Sequence[Root]) -> list[tuple[WeylElt, int]]:
    gens = [WeylElt.reflection(rs, b).mat for b in simple]
    start = _identity(rs.rank)
    seen = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = _matmul(m, g)
                if p not in seen:
                    seen[p] = -seen[m]
                    nxt.append(p)
        frontier = nxt
    return [(WeylElt(rs, m), s) for m, s in seen.items()]


# -- characters ----------------------------------------------------------------------------

def symmetric_power_weights(roots: Iterable[Root], n: int, rank: int | None = None) -> Character:
    """Weights of S^n of the span of the given root vectors."""
    roots = sorted(set(roots))
    out: Character = Counter()
    if n == 0:
        k = rank if rank is not None else len(roots[0])
        out[Point.zero(k)] += 1
        return out
    for combo in itertools.combinations_with_replacement(roots, n):
        out[Point.of(map(sum, zip(*combo)))] += 1
    return out


def tensor(a: Character, b: Character) -> Character:
    out: Character = Counter()
    for x, m in a.items():
        for y, k in b.items():
            out[x + y] += m * k
    return out


def weyl_dimension(levi: LeviDatum, mu: Sequence) -> int:
    rs = levi.rs
    shifted = _pt(mu) + levi.rho_m
    num = Q(1)
    for a in levi.m_positive:
        num *= rs.pairing(shifted, a) / rs.pairing(levi.rho_m, a)
    return int(num)


def levi_character(levi: LeviDatum, mu: Sequence) -> Character:
    """Character of the irreducible m-module of highest weight mu (Freudenthal)."""
    rs = levi.rs
    mu = _pt(mu)
    if not levi.is_dominant(mu):
        raise ValueError("highest weight is not dominant for m")
    rho = levi.rho_m
    top = rs.norm2(mu + rho)
    pos = list(levi.m_positive)
    mult: dict[Point, int] = {mu: 1}
    frontier = [mu]
    while frontier:
        candidates = {nu - Point.of(b) for nu in frontier for b in levi.simple}
        nxt = []
        for nu in sorted(candidates, key=lambda p: p.coords):
            acc = Q(0)
            for a in pos:
                step = Point.of(a)
                k = 1
                cur = nu + step
                while cur in mult:
                    acc += mult[cur] * rs.pairing(cur, a)
                    k += 1
                    cur = cur + step
            if acc == 0:
                continue
            den = top - rs.norm2(nu + rho)
            val = 2 * acc / den
            if val.denominator != 1 or val < 0:
                raise ArithmeticError("Freudenthal recursion produced a non-integer")
            if val:
                mult[nu] = int(val)
                nxt.append(nu)
        frontier = nxt
    return Counter(mult)


def levi_decompose(char: Character, levi: LeviDatum) -> dict[Point, int]:
    """Multiplicities of irreducible m-modules in a W_m-invariant character:
    m(mu) = sum over w in W_m of sign(w) * char(w(mu + rho_m) - rho_m)."""
    rho = levi.rho_m
    group = levi.weyl_group
    out = {}
    for mu in sorted(char, key=lambda p: p.coords):
        if not levi.is_dominant(mu):
            continue
        shifted = mu + rho
        total = sum(s * char.get(w(shifted) - rho, 0) for w, s in group)
        if total:
            out[mu] = total
    return out


# -- K-type multiplicities ---------------------------------------------------------------------

@dataclass
class KMultiplicity:
    per_degree: list[int]
    truncated: bool

    @property
    def total(self) -> int:
        return sum(self.per_degree)


def k_type_multiplicity(hc: HCParameter, mu: Sequence, n_max: int, require_compatible: bool = True) -> KMultiplicity:
    """Sum over n <= n_max of dim Hom_M(F(mu), S^n(u cap p) (x) F(mu_lambda)).

    For compatible Borel subalgebras the untruncated sum is the multiplicity of the
    K-type of highest weight mu.  ``truncated`` says whether terms beyond n_max could
    still contribute.
    """
    rs = hc.rs
    if require_compatible and not is_compatible_borel(rs, hc.z, hc.tau):
        raise HypothesisViolation("the Borel subalgebra of this parameter is not compatible")
    mu = _pt(mu)
    levi = levi_datum(hc)
    base = levi_character(levi, minimal_k_type(hc))
    per = []
    if levi.is_dominant(mu):
        for n in range(n_max + 1):
            char = tensor(symmetric_power_weights(levi.u_p, n, rs.rank), base)
            per.append(levi_decompose(char, levi).get(mu, 0))
    else:
        per = [0] * (n_max + 1)
    truncated = False
    if levi.u_p:
        lam = hc.lam
        step = min(rs.pairing(a, lam) for a in levi.u_p)
        low = min(rs.pairing(nu, lam) for nu in base)
        bound = (rs.pairing(mu, lam) - low) / step
        truncated = bound >= n_max + 1
    return KMultiplicity(per, truncated)


def k_spectrum(hc: HCParameter, n_max: int, require_compatible: bool = True) -> dict[Point, list[int]]:
    """Every m-highest weight met in S^n(u cap p) (x) F(mu_lambda) for n <= n_max, with
    its multiplicity in each degree."""
    rs = hc.rs
    if require_compatible and not is_compatible_borel(rs, hc.z, hc.tau):
        raise HypothesisViolation("the Borel subalgebra of this parameter is not compatible")
    levi = levi_datum(hc)
    base = levi_character(levi, minimal_k_type(hc))
    out: dict[Point, list[int]] = {}
    for n in range(n_max + 1):
        dec = levi_decompose(tensor(symmetric_power_weights(levi.u_p, n, rs.rank), base), levi)
        for mu, m in dec.items():
            out.setdefault(mu, [0] * (n_max + 1))[n] = m
    return dict(sorted(out.items(), key=lambda kv: (next(i for i, x in enumerate(kv[1]) if x), kv[0].coords)))


# -- the E6 example -----------------------------------------------------------------------------

def _e6_simple_in_eps() -> list[tuple[Q, ...]]:
    h = Q(1, 2)
    return [
        (h, -h, -h, -h, -h, -h, -h, h),
        (1, 1, 0, 0, 0, 0, 0, 0),
        (-1, 1, 0, 0, 0, 0, 0, 0),
        (0, -1, 1, 0, 0, 0, 0, 0),
        (0, 0, -1, 1, 0, 0, 0, 0),
        (0, 0, 0, -1, 1, 0, 0, 0),
    ]


def e6_from_eps(v: Sequence) -> Point:
    """Simple-root coordinates of a vector of the E6 span in Bourbaki's eps basis."""
    simple = _e6_simple_in_eps()
    c = solve_in_span(simple, [Q(x) for x in v])
    if c is None:
        raise ValueError("vector is not in the span of E6")
    return Point(c)


def _eps(*pairs) -> list[Q]:
    v = [Q(0)] * 8
    for i, c in pairs:
        v[i - 1] += Q(c)
    return v


def e6_type3_report(n_max: int = 2) -> dict:
    """Symmetric powers of u cap p for E6 and the grading w1 + w6, compared with the
    families F(mu(h1, h2)) (x) F(nu(k1, k2))."""
    rs = build_root_system("E6")
    tau_p = GradingCoweight.of(rs, "w1+w6")
    pattern = tuple(c % 2 for c in tau_p.coeffs)
    from .lattice import abelian_points

    # compatible points whose root parities are those of w1 + w6, preferring one
    # lying over w1 + w6 itself
    candidates = [
        z for z in abelian_points(rs)
        if tuple(int(c) % 2 for c in rs.dual_coords(z)) == pattern and is_compatible_borel(rs, z)
    ]
    if not candidates:  # pragma: no cover
        raise RuntimeError("no compatible point with the requested parity")
    chosen = next((z for z in candidates if dominant(rs, z) == tau_p.point), candidates[0])
    hc = parameter_at(rs, chosen)
    levi = levi_datum(hc)
    vinv = hc.v_z.inverse()

    delta1 = tau_p.level(1) & frozenset(a for a in rs.positive_roots if a[0] == 1 and a[5] == 0)
    delta6 = tau_p.level(1) & frozenset(a for a in rs.positive_roots if a[5] == 1 and a[0] == 0)
    delta0 = frozenset(a for a in rs.all_roots if a[0] == 0 and a[5] == 0)

    half = Q(1, 2)
    eta = [
        _eps((8, half), (7, -half), (6, -half), (5, -half)),
        _eps((1, -half), (2, half), (3, half), (4, half)),
        _eps((1, half), (2, -half), (3, half), (4, half)),
        _eps((1, half), (2, half), (3, -half), (4, half)),
        _eps((1, half), (2, half), (3, half), (4, -half)),
    ]
    eta = [e6_from_eps(e) for e in eta]
    d4_eps = {
        e6_from_eps(_eps((i, s), (j, t)))
        for i in range(1, 5) for j in range(i + 1, 5) for s in (1, -1) for t in (1, -1)
    }
    d3_eps = {
        e6_from_eps(_eps((i, s), (j, t)))
        for i in range(2, 5) for j in range(i + 1, 5) for s in (1, -1) for t in (1, -1)
    }
    delta0_pts = {Point.of(a) for a in delta0}
    delta1_eps = set()
    for signs in itertools.product((1, -1), repeat=4):
        if sum(1 for s in signs if s < 0) % 2 == 1:
            delta1_eps.add(e6_from_eps(_eps((8, half), (7, -half), (6, -half), (5, -half), *[(i + 1, half * s) for i, s in enumerate(signs)])))
    delta6_eps = {e6_from_eps(_eps((i, s), (5, 1))) for i in range(1, 5) for s in (1, -1)}

    def mu_family(h1: int, h2: int) -> Point:
        return vinv((eta[0] + eta[1]) * h1 + (eta[0] - eta[1]) * h2)

    def nu_family(k1: int, k2: int) -> Point:
        e45 = e6_from_eps(_eps((4, 1), (5, 1)))
        e54 = e6_from_eps(_eps((5, 1), (4, -1)))
        return vinv(e45 * k1 + e54 * k2)

    degrees = []
    for n in range(n_max + 1):
        sym = levi_decompose(symmetric_power_weights(levi.u_p, n, rs.rank), levi)
        families = [
            (h1, h2, k1, k2)
            for h1, h2, k1, k2 in itertools.product(range(n + 1), repeat=4)
            if h1 + h2 + k1 + k2 == n and h1 >= h2 and k1 >= k2
        ]
        family_sum: Counter = Counter()
        tops = []
        for h1, h2, k1, k2 in families:
            a, b = mu_family(h1, h2), nu_family(k1, k2)
            family_sum.update(tensor(levi_character(levi, a), levi_character(levi, b)))
            tops.append(a + b)
        degrees.append({
            "n": n,
            "families": families,
            "family_count": len(families),
            "irreducible_count": len(sym),
            "multiplicity_free": all(m == 1 for m in sym.values()),
            "matches_families": family_sum == symmetric_power_weights(levi.u_p, n, rs.rank),
            "family_tops_present": all(t in sym for t in tops),
            "highest_weights": sorted((p.to_json() for p in sym), key=str),
        })
    return {
        "z": chosen.to_json(),
        "candidates": len(candidates),
        "tau": hc.tau.label,
        "grading": tau_p.label,
        "delta1_size": len(delta1),
        "delta6_size": len(delta6),
        "delta1_matches_eps": {Point.of(a) for a in delta1} == delta1_eps,
        "delta6_matches_eps": {Point.of(a) for a in delta6} == delta6_eps,
        "delta0_size": len(delta0),
        "delta0_is_d4_on_eps1_to_4": delta0_pts == d4_eps,
        "delta0_is_d3_on_eps2_to_4": delta0_pts == d3_eps,
        "levi_rank": len(levi.simple),
        "levi_positive_roots": len(levi.m_positive),
        "levi_matches_delta0": levi.m_positive == frozenset(vinv(a) for a in delta0 if sum(a) > 0),
        "u_p_matches": levi.u_p == frozenset(vinv(a) for a in delta1 | delta6),
        "degrees": degrees,
    }


# -- operation names used in the interface description --------------------------------

cohom_degree = cohomological_degree
sym_power_weights = symmetric_power_weights
m_decompose = levi_decompose
e6_example = e6_type3_report


def k_multiplicity(mu: Sequence, hc: HCParameter, n_max: int) -> int:
    """Partial sum over n <= n_max; see k_type_multiplicity for the per-degree terms."""
    return k_type_multiplicity(hc, mu, n_max).total
