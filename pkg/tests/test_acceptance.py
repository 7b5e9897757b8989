"""The ten acceptance criteria, each with its time budget.  Every test appends one
pass/fail line that is printed in the terminal summary."""
import time
from itertools import combinations_with_replacement

import pytest

from borelideals.dseries import (
    cell_rho,
    k_type_multiplicity,
    levi_datum,
    minimal_k_type,
    minimal_k_type_from_ideal,
    parameter_at,
    e6_type3_report,
)
from borelideals.ideals import enumerate_abelian
from borelideals.lattice import abelian_points
from borelideals.rootsys import Point, build_root_system
from borelideals.symmspace import abelian_fiber, grading_coweights, is_compatible_borel
from borelideals.verify import run_checks, sweep_types
from conftest import ACCEPTANCE_LINES
from oracles import blattner_count

SWEEP = [("A", n) for n in range(1, 6)] + [("B", 2), ("B", 3), ("B", 4), ("C", 3), ("C", 4), ("D", 4), ("G", 2), ("F", 4)]
RANK4 = sweep_types(4)


class Criterion:
    def __init__(self, number: int, title: str, budget: float):
        self.number, self.title, self.budget = number, title, budget

    def __enter__(self):
        self.start = time.perf_counter()
        self.notes = ""
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.budget
        status = "PASS" if ok else "FAIL"
        extra = f" ({self.notes})" if self.notes else ""
        ACCEPTANCE_LINES.append(f"[{status}] {self.number:>2}. {self.title}: {elapsed:.2f}s / budget {self.budget:.0f}s{extra}")
        if exc_type is None:
            assert elapsed < self.budget, f"over budget: {elapsed:.1f}s > {self.budget}s"
        return False


def _failures(results):
    return [(r.type, r.key, r.failures) for r in results if r.status == "FAIL"]


def test_criterion_01_abelian_count():
    with Criterion(1, "abelian ideal count is 2^rank", 5) as c:
        counts = {}
        for kind, n in SWEEP:
            counts[f"{kind}{n}"] = len(enumerate_abelian(build_root_system(kind, n)))
        bad = {k: v for k, v in counts.items() if v != 2 ** int(k[1:])}
        c.notes = f"{len(counts)} types"
        assert not bad, bad


def test_criterion_02_ideal_round_trip():
    with Criterion(2, "ideal to affine element round trip", 30) as c:
        results = run_checks(["PropA"], SWEEP)
        c.notes = f"{len(results)} types"
        assert not _failures(results), _failures(results)


def test_criterion_03_simplex_points_and_bijection():
    with Criterion(3, "simplex points count and bijection onto the ideal image", 60) as c:
        results = run_checks(["P1.4"], RANK4)
        c.notes = f"{len(results)} types"
        assert not _failures(results), _failures(results)


def test_criterion_04_special_coweight_table():
    types = [("A", 4), ("B", 4), ("C", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
    with Criterion(4, "table of special coweights", 10) as c:
        results = run_checks(["TableI"], types)
        c.notes = f"{len(results)} types"
        assert not _failures(results), _failures(results)


def test_criterion_05_fiber_sizes():
    with Criterion(5, "fibre sizes equal Weyl group indices", 120) as c:
        results = run_checks(["T2.4"], RANK4 + [("D", 5)])
        c.notes = f"{len(results)} types"
        assert not _failures(results), _failures(results)


def test_criterion_06_compatible_fibers():
    with Criterion(6, "compatible fibres and the stabilizer matching", 120) as c:
        results = run_checks(["T2.6"], RANK4)
        c.notes = f"{len(results)} types"
        assert not _failures(results), _failures(results)


def test_criterion_07_ideal_classification_suite():
    keys = ["L3.2", "T3.3", "P3.4", "P3.5", "P3.6", "P3.7", "P3.8", "P3.9", "P3.10", "C3.11"]
    with Criterion(7, "special, nilradical and submodule suite", 300) as c:
        results = run_checks(keys, RANK4)
        skipped = [(r.type, r.key, r.skipped) for r in results if r.status == "skip"]
        c.notes = f"{len(results)} checks, {len(skipped)} skipped"
        assert not _failures(results), _failures(results)


def test_criterion_08_minimal_k_type_two_routes():
    with Criterion(8, "minimal K-type by two routes", 60) as c:
        count = 0
        for kind, n in RANK4:
            rs = build_root_system(kind, n)
            for z in abelian_points(rs):
                hc = parameter_at(rs, z, cell_rho(rs, z))
                assert minimal_k_type(hc) == minimal_k_type_from_ideal(hc), (rs.name, z)
                count += 1
        c.notes = f"{count} points"


def test_criterion_09_e6_symmetric_powers():
    with Criterion(9, "E6 symmetric powers against the two families", 300) as c:
        rep = e6_type3_report(2)
        assert rep["delta1_size"] == 8 and rep["delta6_size"] == 8
        assert rep["u_p_matches"]
        degrees = rep["degrees"]
        assert [d["family_count"] for d in degrees] == [1, 2, 5]
        assert all(d["multiplicity_free"] for d in degrees)
        assert all(d["matches_families"] for d in degrees)
        assert all(d["family_tops_present"] for d in degrees)
        irreducible = [d["irreducible_count"] for d in degrees]
        c.notes = f"family summands 1,2,5; irreducible Levi modules {','.join(map(str, irreducible))}"


def _candidate_weights(hc, n_max):
    levi = levi_datum(hc)
    base = minimal_k_type(hc)
    noncompact = sorted(b for b in hc.positive_roots if not hc.tau.is_compact(b))
    out = set()
    for n in range(n_max + 1):
        for combo in combinations_with_replacement(noncompact, n):
            mu = base
            for b in combo:
                mu = mu + Point.of(b)
            if levi.is_dominant(mu):
                out.add(mu)
    return out


def test_criterion_10_blattner_oracle():
    with Criterion(10, "K-multiplicities against the weight-counting oracle", 60) as c:
        compared = 0
        for name in ("A2", "B2"):
            rs = build_root_system(name)
            for t in grading_coweights(rs):
                if t.kind in (1, 5):
                    continue
                for z in abelian_fiber(rs, t):
                    if not is_compatible_borel(rs, z, t):
                        continue
                    for scale in (1, 2):
                        hc = parameter_at(rs, z, cell_rho(rs, z) * scale)
                        for mu in _candidate_weights(hc, 3):
                            got = k_type_multiplicity(hc, mu, 3).per_degree
                            want = [blattner_count(hc, mu, n) for n in range(4)]
                            assert got == want, (name, t.label, z, mu)
                            compared += 1
        c.notes = f"{compared} weights"
        assert compared > 0
