"""Invariant checks keyed by the statement they exercise.

Every check takes a RootSystem and returns a CheckResult; ``run_checks`` sweeps a
list of types, optionally in worker processes, and returns results in canonical
order so reports are byte-stable.
"""
from __future__ import annotations

import itertools
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Callable

from .ideals import (
    Ideal,
    NotAnIdeal,
    abelian_from_alcoves,
    affine_inversion_set,
    affine_to_ideal,
    enumerate_abelian,
    enumerate_ad_nilpotent,
    ideal_to_affine,
    in_ideal_image,
)
from .lattice import (
    abelian_coroot_points,
    abelian_points,
    affine_element,
    affine_element_via_stabilizer,
    chamber_element,
    coroot_simplex_points,
    dominant,
    ideal_of_point,
    is_abelian_point,
    level_set,
    simplex_points,
    simplex_vertices,
)
from .rootsys import Point, RootSystem, build_root_system
from .symmspace import (
    GradingCoweight,
    abelian_bk_submodules,
    bk_submodules,
    centralizer_roots,
    commutator_roots,
    compatible_fiber,
    containing_minuscule,
    containing_minuscule_via_points,
    decompositions,
    format_coweight,
    grading_coweights,
    is_bk_submodule,
    is_nilradical_ideal,
    is_special,
    minuscule_nilradicals,
    nilradical_of_weight,
    point_from_submodule,
    special_coweight_table,
    special_ideal,
    submodule_of_point,
)
from .weyl import affine_elements_up_to, in_closed_alcove, in_orbit_of_alcove, maps_alcove_into, simplex_stabilizer


@dataclass
class CheckResult:
    key: str
    type: str
    passed: bool
    seconds: float = 0.0
    rows: list[dict] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    skipped: str | None = None

    def to_json(self) -> dict:
        out = {"key": self.key, "type": self.type, "status": self.status, "rows": self.rows, "failures": self.failures}
        if self.skipped:
            out["skipped"] = self.skipped
        return out

    @property
    def status(self) -> str:
        if self.skipped:
            return "skip"
        return "pass" if self.passed else "FAIL"


class _Ctx:
    """Collects failures; keeps the first few messages."""

    def __init__(self) -> None:
        self.failures: list[str] = []
        self.rows: list[dict] = []

    def expect(self, cond: bool, msg: str) -> None:
        if not cond:
            self.failures.append(msg)

    def skip(self, reason: str) -> None:
        raise _Skip(reason)


class _Skip(Exception):
    pass


def _neg(a):
    return tuple(-x for x in a)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _fibres(rs: RootSystem, points) -> dict[Point, list[Point]]:
    out: dict[Point, list[Point]] = defaultdict(list)
    for z in points:
        out[dominant(rs, z)].append(z)
    return out


# -- ideals and affine Weyl group ------------------------------------------------------------

def check_prop_a(rs: RootSystem, c: _Ctx) -> None:
    images = set()
    ideals = enumerate_ad_nilpotent(rs)
    for i in ideals:
        w = ideal_to_affine(i)
        c.expect(w.inversion_set() == affine_inversion_set(i), f"N(w) != L for {i!r}")
        c.expect(affine_to_ideal(w) == i, f"round trip fails for {i!r}")
        images.add(w)
    c.expect(len(images) == len(ideals), "ideal_to_affine is not injective")
    c.rows.append({"ideals": len(ideals)})


def check_prop_b(rs: RootSystem, c: _Ctx) -> None:
    ideals = enumerate_ad_nilpotent(rs)
    images = {i: ideal_to_affine(i) for i in ideals}
    for i, w in images.items():
        c.expect(maps_alcove_into(w, 2) == i.is_abelian(), f"alcove criterion disagrees on {i!r}")
    if rs.rank <= 3:
        found = abelian_from_alcoves(rs)
        c.expect(found == {w for i, w in images.items() if i.is_abelian()}, "alcove search differs from abelian images")
    # membership in the image, decided by both routes on all short elements
    cap = min(max(w.length for w in images.values()), 12 if rs.rank <= 3 else 7)
    expected = {w for w in images.values() if w.length <= cap}
    hits = set()
    for w in affine_elements_up_to(rs, cap):
        try:
            if in_ideal_image(w):
                hits.add(w)
        except RuntimeError as exc:
            c.expect(False, str(exc))
    c.expect(hits == expected, "image membership test disagrees with the ideal images")
    c.rows.append({"ideals": len(ideals), "length_cap": cap, "members_found": len(hits)})


def check_peterson(rs: RootSystem, c: _Ctx) -> None:
    n = len(enumerate_abelian(rs))
    c.expect(n == 2 ** rs.rank, f"{n} abelian ideals, expected {2 ** rs.rank}")
    c.rows.append({"abelian_ideals": n, "two_to_rank": 2 ** rs.rank})


# -- the simplex ---------------------------------------------------------------------------

def check_p1_1(rs: RootSystem, c: _Ctx) -> None:
    pts = set(simplex_points(rs))
    ab = set(abelian_points(rs))
    verts = set(simplex_vertices(rs))
    group = simplex_stabilizer(rs)
    c.expect(len(group) == rs.center_order, "stabilizer has the wrong order")
    for s in group:
        c.expect({s(v) for v in verts} == verts, f"{s!r} does not preserve the simplex")
        c.expect({s(z) for z in pts} == pts, f"{s!r} does not preserve the lattice points")
        c.expect({s(z) for z in ab} == ab, f"{s!r} does not preserve the abelian points")
    for z in pts:
        labels = {rs.coset_label(s(z)) for s in group}
        c.expect(len(labels) == rs.center_order, f"orbit of {z!r} is not a transversal")
    c.rows.append({"points": len(pts), "center": rs.center_order})


def check_p1_2(rs: RootSystem, c: _Ctx) -> None:
    h = rs.coxeter_number
    checked = 0
    for coeffs in itertools.product(range(-2, 3), repeat=rs.rank):
        x = rs.coweight_point([Q(v, 2) for v in coeffs])
        d = dominant(rs, x)
        for k in (1, 2, h):
            c.expect(in_closed_alcove(rs, d, k) == in_orbit_of_alcove(rs, x, k), f"orbit test fails at {x!r}, k={k}")
        checked += 1
    c.rows.append({"sample_points": checked})


def _closed_alcove_vertices(rs: RootSystem) -> list[Point]:
    return [Point.zero(rs.rank)] + [o * Q(1, m) for o, m in zip(rs.fundamental_coweights, rs.marks)]


def check_p1_3(rs: RootSystem, c: _Ctx) -> None:
    verts = _closed_alcove_vertices(rs)
    h = rs.coxeter_number
    for z in simplex_points(rs):
        shifted = [z + v for v in verts]
        c.expect(all(in_orbit_of_alcove(rs, p, h) for p in shifted), f"{z!r} + C_1 leaves W.C_h")
        two = all(in_orbit_of_alcove(rs, p, 2) for p in shifted)
        c.expect(two == is_abelian_point(rs, z), f"abelian criterion fails at {z!r}")
        v = chamber_element(rs, z).inverse()
        c.expect(all(in_closed_alcove(rs, v(p), h) for p in shifted), f"v_z^-1 does not move {z!r} + C_1 into C_h")


def check_p1_4(rs: RootSystem, c: _Ctx) -> None:
    pts = simplex_points(rs)
    group = simplex_stabilizer(rs)
    F = {}
    for z in pts:
        w = affine_element(rs, z)
        c.expect(w == affine_element_via_stabilizer(rs, z), f"two constructions of F disagree at {z!r}")
        F[z] = w
    by_image: dict = defaultdict(set)
    for z, w in F.items():
        by_image[w].add(z)
    for z in pts:
        c.expect(by_image[F[z]] == {s(z) for s in group}, f"fibre of F at {z!r} is not a stabilizer orbit")
    ideals = enumerate_ad_nilpotent(rs)
    W_set = {ideal_to_affine(i) for i in ideals}
    coroot = coroot_simplex_points(rs)
    c.expect({F[z] for z in coroot} == W_set and len(coroot) == len(W_set), "F restricted to Z is not a bijection")
    for z in coroot:
        w = F[z]
        c.expect(w.v.inverse()(w.tau) == z, f"inverse map fails at {z!r}")
    H = {(F[z], rs.coset_label(z)) for z in pts}
    c.expect(len(H) == len(pts) == len(ideals) * rs.center_order, "H is not a bijection")
    ab_images = {ideal_to_affine(i) for i in ideals if i.is_abelian()}
    c.expect({F[z] for z in pts if is_abelian_point(rs, z)} == ab_images, "F does not map abelian points onto abelian images")
    zab = abelian_coroot_points(rs)
    c.expect(len(zab) == len(ab_images) and {F[z] for z in zab} == ab_images, "Z_ab is not in bijection with abelian images")
    c.rows.append({"points": len(pts), "ideals": len(ideals), "center": rs.center_order})


def check_p1_5(rs: RootSystem, c: _Ctx) -> None:
    for z in simplex_points(rs):
        want = frozenset(a for a in rs.positive_roots if rs.pairing(a, z) < 0)
        c.expect(chamber_element(rs, z).inversion_set() == want, f"N(v_z) wrong at {z!r}")


def check_p1_6(rs: RootSystem, c: _Ctx) -> None:
    for z in abelian_points(rs):
        want = level_set(rs, z, -2) | level_set(rs, z, -1)
        c.expect(chamber_element(rs, z).inversion_set() == want, f"N(v_z) wrong at {z!r}")


def check_p1_7(rs: RootSystem, c: _Ctx) -> None:
    for z in simplex_points(rs):
        i = ideal_of_point(rs, z, "affine")
        c.expect(i == ideal_of_point(rs, z, "separation"), f"separation route disagrees at {z!r}")
        if is_abelian_point(rs, z):
            c.expect(i == ideal_of_point(rs, z, "abelian"), f"closed formula disagrees at {z!r}")


# -- symmetric spaces --------------------------------------------------------------------------

def check_t2_4(rs: RootSystem, c: _Ctx) -> None:
    fib = _fibres(rs, abelian_points(rs))
    for t in grading_coweights(rs):
        zs = fib.get(t.point, [])
        keys = {t.coset_key(chamber_element(rs, z).inverse()) for z in zs}
        c.expect(len(zs) == t.index, f"|fibre| = {len(zs)} but index = {t.index} at {t.label}")
        c.expect(len(keys) == len(zs), f"coset map not injective at {t.label}")
        for z in zs:
            vinv = chamber_element(rs, z).inverse()
            c.expect(t.level(2) == frozenset(_neg(vinv(a)) for a in level_set(rs, z, -2)), f"level 2 identity fails at {z!r}")
            c.expect(t.level(0) == frozenset(vinv(a) for a in level_set(rs, z, 0)), f"level 0 identity fails at {z!r}")
            ones = frozenset(vinv(a) for a in level_set(rs, z, 1)) | frozenset(_neg(vinv(a)) for a in level_set(rs, z, -1))
            c.expect(t.level(1) == ones, f"level 1 identity fails at {z!r}")
        c.rows.append({"tau": t.label, "kind": t.kind, "fiber": len(zs), "index": t.index})
    c.expect(sum(len(v) for v in fib.values()) == len(abelian_points(rs)), "abelian point outside the doubled alcove")


def check_t2_6(rs: RootSystem, c: _Ctx) -> None:
    for t in grading_coweights(rs):
        if t.kind in (1, 5):
            continue
        data = compatible_fiber(rs, t)
        comp = set(data["compatible"])
        images = [z for _, z in data["matching"]]
        c.expect(len(comp) == rs.center_order, f"{len(comp)} compatible points over {t.label}")
        c.expect(set(images) == comp and len(set(images)) == len(images), f"matching is not a bijection at {t.label}")
        c.rows.append({"tau": t.label, "kind": t.kind, "compatible": len(comp), "center": rs.center_order})


def check_l3_2(rs: RootSystem, c: _Ctx) -> None:
    for t in grading_coweights(rs):
        two = t.level(2)
        if not two:
            continue
        ones = t.level(1)
        for a in ones:
            c.expect(any(_add(a, b) in two for b in ones), f"no partner for {a} at {t.label}")
        weight = Point.zero(rs.rank)
        for a in two:
            weight = weight + Point.of(a)
        c.expect(nilradical_of_weight(rs, weight) == ones | two, f"nilradical of the special ideal wrong at {t.label}")


def check_t3_3(rs: RootSystem, c: _Ctx) -> None:
    tops = {t.level(2) for t in grading_coweights(rs)}
    special = 0
    for i in enumerate_abelian(rs):
        a = is_special(i)
        b = i.root_set in tops
        c.expect(a == b, f"conditions disagree on {i!r}")
        special += a
    c.rows.append({"special_ideals": special})


def check_p3_4(rs: RootSystem, c: _Ctx) -> None:
    nilradicals = set()
    for k in range(rs.rank + 1):
        for S in itertools.combinations(range(rs.rank), k):
            n = frozenset(a for a in rs.positive_roots if any(a[i] > 0 for i in S))
            if not commutator_roots(rs, n):
                nilradicals.add(n)
    mins = set(minuscule_nilradicals(rs).values())
    c.expect(nilradicals == mins, "abelian parabolic nilradicals differ from the minuscule ones")
    c.expect(len(mins) == rs.center_order, "count differs from the centre order")
    for i in enumerate_abelian(rs):
        c.expect(is_nilradical_ideal(i) == (i.root_set in nilradicals), f"nilradical test wrong on {i!r}")
    c.rows.append({"abelian_nilradicals": len(nilradicals), "center": rs.center_order})


def check_p3_5(rs: RootSystem, c: _Ctx) -> None:
    for t in grading_coweights(rs):
        two = t.level(2)
        c.expect(bool(two) == (t.kind in (1, 2, 3)), f"level 2 emptiness wrong at {t.label}")
        if not two:
            continue
        ideal = special_ideal(rs, t)
        c.expect(is_nilradical_ideal(ideal) == (t.kind == 1), f"nilradical criterion wrong at {t.label}")
        n = t.nilradical()
        support = [i for i, x in enumerate(t.coeffs) if x]
        c.expect(n == frozenset().union(*(rs.dual_order_ideal(rs.simple_root(i)) for i in support)), f"n_tau wrong at {t.label}")
        if t.kind in (2, 3):
            c.expect(two < n and two == commutator_roots(rs, n), f"commutator identity fails at {t.label}")


def check_p3_6(rs: RootSystem, c: _Ctx) -> None:
    specials = {i.root_set for i in enumerate_abelian(rs) if is_special(i)}
    c.expect(specials == {t.level(2) for t in grading_coweights(rs)}, "special ideals differ from level-2 sets")
    seen = {}
    for t in grading_coweights(rs):
        two = t.level(2)
        if not two:
            continue
        n = t.nilradical()
        c.expect(commutator_roots(rs, n) <= two and two == centralizer_roots(rs, n), f"centre identity fails at {t.label}")
        c.expect(two not in seen, f"{t.label} and {seen.get(two)} share level 2")
        seen[two] = t.label


def check_p3_7(rs: RootSystem, c: _Ctx) -> None:
    Mset = {Point.zero(rs.rank)} | {rs.fundamental_coweights[j] for j in rs.minuscule_indices}
    for z in abelian_points(rs):
        t = GradingCoweight.of(rs, dominant(rs, z))
        vinv = chamber_element(rs, z).inverse()
        phi1 = frozenset(vinv(a) for a in level_set(rs, z, 1))
        phi2 = frozenset(_neg(vinv(a)) for a in level_set(rs, z, -2))
        conds = [
            t.point in {m * 2 for m in Mset},
            z in {m * -2 for m in Mset},
            t.index == 1,
            t.level(1) == frozenset(),
        ]
        c.expect(len(set(conds)) == 1, f"equivalent conditions disagree at {z!r}: {conds}")
        i2 = Ideal.from_roots(rs, phi2)
        c.expect(is_special(i2), f"level-2 part not special at {z!r}")
        if phi2:
            c.expect(is_nilradical_ideal(i2) == conds[0], f"nilradical criterion wrong at {z!r}")
        if not conds[0]:
            c.expect(phi2 == commutator_roots(rs, t.level(1)), f"commutator identity wrong at {z!r}")
        c.expect(phi1 == frozenset(vinv(a) for a in rs.positive_roots) & t.level(1), f"odd part wrong at {z!r}")
        iz = ideal_of_point(rs, z, "abelian").root_set
        c.expect(phi1 == frozenset(a for a in iz if not t.is_compact(a)), f"i_z cap p wrong at {z!r}")
        c.expect(phi2 == frozenset(a for a in iz if t.is_compact(a)), f"i_z cap k wrong at {z!r}")


def check_p3_8(rs: RootSystem, c: _Ctx) -> None:
    for t in grading_coweights(rs):
        two = t.level(2)
        ones = sorted(t.level(1))
        if len(ones) > 18:
            c.rows.append({"tau": t.label, "skipped": len(ones)})
            continue
        count = 0
        for k in range(len(ones) + 1):
            for s in itertools.combinations(ones, k):
                sub = is_bk_submodule(t, s)
                try:
                    ideal = Ideal.from_roots(rs, two | set(s))
                except NotAnIdeal:
                    ideal = None
                c.expect(sub == (ideal is not None), f"submodule/ideal disagree at {t.label}, {s}")
                abelian_sub = sub and not commutator_roots(rs, s)
                c.expect(abelian_sub == (ideal is not None and ideal.is_abelian()), f"abelian version fails at {t.label}, {s}")
                count += sub
        c.rows.append({"tau": t.label, "submodules": count})


def check_p3_9(rs: RootSystem, c: _Ctx) -> None:
    pts = set(simplex_points(rs))
    taus = grading_coweights(rs)
    for i in enumerate_ad_nilpotent(rs):
        roots = i.root_set
        for t in taus:
            two = t.level(2)
            if two <= roots and roots - two <= t.level(1):
                s = roots - two
                z = point_from_submodule(rs, t, s)
                ok = z in pts and dominant(rs, z) == t.point and ideal_of_point(rs, z) == i and submodule_of_point(rs, z) == s
                c.expect(ok, f"no point for {i!r} over {t.label}")
    X = {t.point: t for t in taus}
    for z in pts:
        d = dominant(rs, z)
        if d in X:
            t = X[d]
            roots = ideal_of_point(rs, z).root_set
            c.expect(t.level(2) <= roots and roots - t.level(2) <= t.level(1), f"converse fails at {z!r}")


def check_p3_10(rs: RootSystem, c: _Ctx) -> None:
    full = _fibres(rs, simplex_points(rs))
    for t in grading_coweights(rs):
        zs = full.get(t.point, [])
        subs = [submodule_of_point(rs, z) for z in zs]
        c.expect(len(set(subs)) == len(subs), f"submodule map not injective at {t.label}")
        c.expect(set(subs) == set(bk_submodules(rs, t)), f"submodule map not onto at {t.label}")
        ab = [s for z, s in zip(zs, subs) if is_abelian_point(rs, z)]
        abelian = abelian_bk_submodules(rs, t)
        c.expect(set(ab) == set(abelian), f"abelian restriction wrong at {t.label}")
        c.expect(len(abelian) == t.index, f"{len(abelian)} abelian submodules, index {t.index} at {t.label}")
        c.rows.append({"tau": t.label, "submodules": len(subs), "abelian": len(abelian), "index": t.index})


def check_c3_11(rs: RootSystem, c: _Ctx) -> None:
    for i in enumerate_abelian(rs):
        C = containing_minuscule(i)
        c.expect(C == containing_minuscule_via_points(i), f"two descriptions of C differ on {i!r}")
        c.expect(len(decompositions(i)) == rs.center_order - len(C), f"decomposition count wrong on {i!r}")


# -- the special coweight table ---------------------------------------------------------------

def _w(*idx: int) -> str:
    return format_coweight([idx.count(i) for i in range(1, max(idx) + 1)])


def reference_special_table(kind: str, n: int) -> dict[int, list[str]] | None:
    """Special coweights by kind, listed per family; None when no closed form is known."""
    if kind == "A":
        return {1: [_w(i, i) for i in range(1, n + 1)], 2: [],
                3: [_w(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]}
    if kind == "B":
        return {1: [_w(1, 1)], 2: [_w(i) for i in range(2, n + 1)], 3: []}
    if kind == "C":
        return {1: [_w(n, n)], 2: [_w(i) for i in range(1, n)], 3: []}
    if kind == "D":
        return {1: [_w(1, 1), _w(n - 1, n - 1), _w(n, n)], 2: [_w(i) for i in range(2, n - 1)],
                3: [_w(1, n - 1), _w(1, n), _w(n - 1, n)]}
    fixed = {
        ("E", 6): {1: [_w(1, 1), _w(6, 6)], 2: [_w(2), _w(3), _w(5)], 3: [_w(1, 6)]},
        ("E", 7): {1: [_w(7, 7)], 2: [_w(1), _w(2), _w(6)], 3: []},
        ("E", 8): {1: [], 2: [_w(1), _w(8)], 3: []},
        ("F", 4): {1: [], 2: [_w(1), _w(4)], 3: []},
        ("G", 2): {1: [], 2: [_w(2)], 3: []},
    }
    return fixed.get((kind, n))


def special_table_labels(rs: RootSystem) -> dict[int, list[str]]:
    return {k: [t.label for t in v] for k, v in special_coweight_table(rs).items()}


def check_table(rs: RootSystem, c: _Ctx) -> None:
    want = reference_special_table(rs.kind, rs.rank)
    got = special_table_labels(rs)
    c.expect(got == want, f"table differs: {got} vs {want}")
    c.rows.append({"kind1": got[1], "kind2": got[2], "kind3": got[3]})


# -- registry ------------------------------------------------------------------------------------

CHECKS: dict[str, Callable[[RootSystem, _Ctx], None]] = {
    "PropA": check_prop_a,
    "PropB": check_prop_b,
    "Cor2^n": check_peterson,
    "P1.1": check_p1_1,
    "P1.2": check_p1_2,
    "P1.3": check_p1_3,
    "P1.4": check_p1_4,
    "P1.5": check_p1_5,
    "P1.6": check_p1_6,
    "P1.7": check_p1_7,
    "T2.4": check_t2_4,
    "T2.6": check_t2_6,
    "L3.2": check_l3_2,
    "T3.3": check_t3_3,
    "P3.4": check_p3_4,
    "P3.5": check_p3_5,
    "P3.6": check_p3_6,
    "P3.7": check_p3_7,
    "P3.8": check_p3_8,
    "P3.9": check_p3_9,
    "P3.10": check_p3_10,
    "C3.11": check_c3_11,
    "TableI": check_table,
}

_ALIASES = {"a": "PropA", "b": "PropB", "2^n": "Cor2^n", "peterson": "Cor2^n", "table-i": "TableI", "table": "TableI",
            "1.1": "P1.1", "1.2": "P1.2", "1.3": "P1.3", "1.4": "P1.4", "1.5": "P1.5", "1.6": "P1.6", "1.7": "P1.7",
            "2.4": "T2.4", "2.6": "T2.6", "3.2": "L3.2", "3.3": "T3.3", "3.4": "P3.4", "3.5": "P3.5", "3.6": "P3.6",
            "3.7": "P3.7", "3.8": "P3.8", "3.9": "P3.9", "3.10": "P3.10", "3.11": "C3.11"}


def resolve_key(name: str) -> str:
    if name in CHECKS:
        return name
    key = _ALIASES.get(name.lower())
    if key is None:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    return key


def run_check(key: str, rs: RootSystem) -> CheckResult:
    ctx = _Ctx()
    start = time.perf_counter()
    skipped = None
    try:
        CHECKS[key](rs, ctx)
    except _Skip as exc:
        skipped = str(exc)
    except Exception as exc:  # a crash is a failure, recorded rather than raised
        ctx.failures.append(f"{type(exc).__name__}: {exc}")
    return CheckResult(key, rs.name, not ctx.failures, time.perf_counter() - start, ctx.rows, ctx.failures[:20], skipped)


def sweep_types(max_rank: int) -> list[tuple[str, int]]:
    """Every irreducible type of rank at most max_rank (C starting at 3, D at 4)."""
    out = [("A", n) for n in range(1, max_rank + 1)]
    out += [("B", n) for n in range(2, max_rank + 1)]
    out += [("C", n) for n in range(3, max_rank + 1)]
    out += [("D", n) for n in range(4, max_rank + 1)]
    out += [("E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(("F", 4))
    if max_rank >= 2:
        out.append(("G", 2))
    return out


def _job(args: tuple[str, str, int]) -> CheckResult:
    key, kind, n = args
    return run_check(key, build_root_system(kind, n))


def run_checks(keys: list[str], types: list[tuple[str, int]], jobs: int = 1) -> list[CheckResult]:
    tasks = [(k, kind, n) for kind, n in types for k in keys]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_job, tasks))
    return [_job(t) for t in tasks]
