"""Command line front end: ``borelideals <group> <command> [options]``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction as Q
from typing import Sequence

from . import dseries, ideals, lattice, symmspace, verify
from .rootsys import InvalidType, Point, RootSystem, build_root_system

SCHEMA = "borelideals/1"


class UsageError(Exception):
    pass


# -- output helpers -------------------------------------------------------------------

def _emit_json(obj) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2)


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit_markdown(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return "\n".join(lines)


def _table(fmt: str, header, rows, payload: dict) -> str:
    if fmt == "json":
        return _emit_json(payload)
    if fmt == "csv":
        return _emit_csv(header, rows)
    return _emit_markdown(header, rows)


def _roots_str(roots) -> str:
    return " ".join("(" + ",".join(str(c) for c in r) + ")" for r in roots)


def _rs(args) -> RootSystem:
    if not args.type:
        raise UsageError("--type is required")
    return build_root_system(args.type, args.rank)


def _fmt(args, default: str = "markdown") -> str:
    if getattr(args, "json", False):
        return "json"
    return args.format or default


# -- roots ------------------------------------------------------------------------------

def cmd_roots_info(args) -> int:
    rs = _rs(args)
    info = rs.info()
    fmt = _fmt(args, "json")
    rows = [[k, json.dumps(v)] for k, v in info.items()]
    print(_table(fmt, ["field", "value"], rows, info))
    return 0


# -- ideals -----------------------------------------------------------------------------

def _ideal_list(args):
    rs = _rs(args)
    return rs, ideals.enumerate_abelian(rs) if args.abelian else ideals.enumerate_ad_nilpotent(rs)


def cmd_ideals_count(args) -> int:
    rs, found = _ideal_list(args)
    fmt = _fmt(args, "plain")
    if fmt == "plain":
        print(len(found))
    else:
        print(_table(fmt, ["type", "abelian", "count"], [[rs.name, args.abelian, len(found)]],
                     {"type": rs.name, "abelian": args.abelian, "count": len(found)}))
    return 0


def cmd_ideals_enum(args) -> int:
    rs, found = _ideal_list(args)
    fmt = _fmt(args, "json")
    rows = []
    records = []
    for k, i in enumerate(found):
        w = ideals.ideal_to_affine(i)
        rec = {"index": k, **i.to_json(), "size": len(i), "abelian": i.is_abelian(), "affine_word": w.affine_word()}
        records.append(rec)
        rows.append([k, len(i), i.is_abelian(), _roots_str(i.generators()), " ".join(map(str, rec["affine_word"]))])
    print(_table(fmt, ["index", "size", "abelian", "generators", "affine_word"], rows,
                 {"type": rs.name, "abelian_only": args.abelian, "count": len(found), "ideals": records}))
    return 0


# -- lattice ----------------------------------------------------------------------------

_SETS = {
    "ztilde": lattice.simplex_points,
    "z": lattice.coroot_simplex_points,
    "ztilde-ab": lattice.abelian_points,
    "z-ab": lattice.abelian_coroot_points,
}


def cmd_lattice_enum(args) -> int:
    rs = _rs(args)
    points = _SETS[args.set](rs)
    fmt = _fmt(args, "json")
    records, rows = [], []
    for z in points:
        tags = []
        if rs.in_coroot_lattice(z):
            tags.append("coroot")
        if lattice.is_abelian_point(rs, z):
            tags.append("abelian")
        w = lattice.affine_element(rs, z)
        ideal = ideals.affine_to_ideal(w)
        label = rs.coset_label(z)
        coset = "0" if label < 0 else f"w{label + 1}"
        rec = {
            "point": z.to_json(),
            "coweight_coords": list(lattice.coweight_coords(rs, z)),
            "tags": tags,
            "ideal": [list(r) for r in ideal.roots],
            "F_word": w.affine_word(),
            "center_coset": coset,
        }
        records.append(rec)
        rows.append([",".join(rec["point"]), " ".join(tags), _roots_str(ideal.generators()),
                     " ".join(map(str, rec["F_word"])), coset])
    print(_table(fmt, ["point", "tags", "ideal_generators", "F_word", "center_coset"], rows,
                 {"type": rs.name, "set": args.set, "count": len(points), "points": records}))
    return 0


# -- symmetric spaces ---------------------------------------------------------------------

def cmd_symm_table(args) -> int:
    rs = _rs(args)
    table = verify.special_table_labels(rs)
    fmt = _fmt(args, "markdown")
    row = [rs.name] + [", ".join(table[k]) or "-" for k in (1, 2, 3)]
    print(_table(fmt, ["type", "kind 1", "kind 2", "kind 3"], [row], {"type": rs.name, "table": {str(k): v for k, v in table.items()}}))
    return 0


def cmd_symm_fiber(args) -> int:
    rs = _rs(args)
    t = symmspace.GradingCoweight.of(rs, args.tau)
    fiber = symmspace.abelian_fiber(rs, t)
    fmt = _fmt(args, "json")
    records, rows = [], []
    for k, z in enumerate(fiber):
        comp = symmspace.is_compatible_borel(rs, z, t)
        ideal = lattice.ideal_of_point(rs, z, "abelian")
        sub = symmspace.submodule_of_point(rs, z)
        records.append({"index": k, "point": z.to_json(), "compatible": comp, "ideal": [list(r) for r in ideal.roots],
                        "submodule": [list(r) for r in sorted(sub)], "coset_word": [i + 1 for i in t.coset_key(lattice.chamber_element(rs, z).inverse()).word]})
        rows.append([k, ",".join(z.to_json()), comp, len(ideal), len(sub)])
    payload = {"type": rs.name, "tau": t.label, "kind": t.kind, "index": t.index, "count": len(fiber), "points": records}
    print(_table(fmt, ["index", "point", "compatible", "ideal_size", "submodule_size"], rows, payload))
    return 0


def _verify_report(results: list[verify.CheckResult], fmt: str, detail: bool) -> int:
    failed = [r for r in results if r.status == "FAIL"]
    if fmt == "json":
        print(_emit_json({"passed": not failed, "results": [r.to_json() for r in results]}))
        return 1 if failed else 0
    keys = list(dict.fromkeys(r.key for r in results))
    types = list(dict.fromkeys(r.type for r in results))
    cell = {(r.type, r.key): r.status for r in results}
    rows = [[t] + [cell.get((t, k), "") for k in keys] for t in types]
    if fmt == "csv":
        print(_emit_csv(["type"] + keys, rows))
    else:
        print(_emit_markdown(["type"] + keys, rows))
    if detail:
        for r in results:
            for row in r.rows:
                print(f"{r.type} {r.key}: " + ", ".join(f"{k}={v}" for k, v in row.items()))
    if failed:
        print("failures:", file=sys.stderr)
        for r in failed:
            print(json.dumps({"key": r.key, "type": r.type, "failures": r.failures}), file=sys.stderr)
    return 1 if failed else 0


def _types_for(args) -> list[tuple[str, int]]:
    if args.type:
        rs = _rs(args)
        return [(rs.kind, rs.rank)]
    return verify.sweep_types(args.max_rank)


def cmd_symm_verify(args) -> int:
    key = verify.resolve_key(args.theorem)
    results = verify.run_checks([key], _types_for(args), args.jobs)
    return _verify_report(results, _fmt(args, "markdown"), True)


def cmd_verify(args) -> int:
    if args.all:
        keys = list(verify.CHECKS)
    elif args.theorem:
        keys = [verify.resolve_key(t) for t in args.theorem]
    else:
        raise UsageError("give --all or --theorem")
    results = verify.run_checks(keys, _types_for(args), args.jobs)
    return _verify_report(results, _fmt(args, "markdown"), bool(args.theorem))


# -- discrete series ---------------------------------------------------------------------

def _parameter(args) -> dseries.HCParameter:
    rs = _rs(args)
    t = symmspace.GradingCoweight.of(rs, args.tau)
    fiber = symmspace.abelian_fiber(rs, t)
    if not 0 <= args.z < len(fiber):
        raise UsageError(f"--z must be in 0..{len(fiber) - 1}")
    z = fiber[args.z]
    if args.lam in (None, "rho"):
        return dseries.parameter_at(rs, z)
    coeffs = [Q(c) for c in args.lam.split(",")]
    if len(coeffs) != rs.rank:
        raise UsageError("--lambda needs one fundamental-weight coordinate per simple root")
    lam = Point.zero(rs.rank)
    for c, w in zip(coeffs, rs.fundamental_weights):
        lam = lam + w * c
    return dseries.parameter_at(rs, z, lam)


def _hc_json(hc: dseries.HCParameter) -> dict:
    return {
        "type": hc.rs.name,
        "tau": hc.tau.label,
        "z": hc.z.to_json(),
        "lambda": hc.lam.to_json(),
        "compatible": symmspace.is_compatible_borel(hc.rs, hc.z, hc.tau),
        "minimal_k_type": dseries.minimal_k_type(hc).to_json(),
        "minimal_k_type_from_ideal": dseries.minimal_k_type_from_ideal(hc).to_json(),
        "degree": dseries.cohomological_degree(hc.rs, hc.z),
    }


def cmd_ds_ktype(args) -> int:
    hc = _parameter(args)
    out = _hc_json(hc)
    if args.mu:
        mu = Point.of(Q(c) for c in args.mu.split(","))
        km = dseries.k_type_multiplicity(hc, mu, args.nmax, require_compatible=not args.allow_incompatible)
        out["mu"] = mu.to_json()
        out["per_degree"] = km.per_degree
        out["multiplicity_up_to_nmax"] = km.total
        out["truncated"] = km.truncated
    print(_emit_json(out))
    return 0


def cmd_ds_spectrum(args) -> int:
    hc = _parameter(args)
    spectrum = dseries.k_spectrum(hc, args.nmax, require_compatible=not args.allow_incompatible)
    fmt = _fmt(args, "json")
    rows = [[",".join(mu.to_json())] + per for mu, per in spectrum.items()]
    payload = {**_hc_json(hc), "n_max": args.nmax,
               "k_types": [{"mu": mu.to_json(), "per_degree": per} for mu, per in spectrum.items()]}
    print(_table(fmt, ["mu"] + [f"n={n}" for n in range(args.nmax + 1)], rows, payload))
    return 0


def cmd_ds_e6(args) -> int:
    report = dseries.e6_type3_report(args.nmax)
    fmt = _fmt(args, "json")
    rows = [[d["n"], d["family_count"], d["irreducible_count"], d["multiplicity_free"], d["matches_families"]]
            for d in report["degrees"]]
    print(_table(fmt, ["n", "families", "irreducibles", "multiplicity_free", "character_identity"], rows, report))
    return 0


# -- parser -----------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, formats=("json", "csv", "markdown")) -> None:
    p.add_argument("--type", help="type letter (A..G) or full name such as E6")
    p.add_argument("--rank", type=int)
    p.add_argument("--format", choices=formats)
    p.add_argument("--json", action="store_true", help="shorthand for --format json")


def _sweep(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="borelideals", description=__doc__)
    top = parser.add_subparsers(dest="group", required=True)

    roots = top.add_parser("roots").add_subparsers(dest="cmd", required=True)
    p = roots.add_parser("info")
    _common(p)
    p.set_defaults(func=cmd_roots_info)

    ids = top.add_parser("ideals").add_subparsers(dest="cmd", required=True)
    for name, func in (("enum", cmd_ideals_enum), ("count", cmd_ideals_count)):
        p = ids.add_parser(name)
        _common(p)
        p.add_argument("--abelian", action="store_true")
        p.set_defaults(func=func)

    lat = top.add_parser("lattice").add_subparsers(dest="cmd", required=True)
    p = lat.add_parser("enum")
    _common(p)
    p.add_argument("--set", choices=list(_SETS), default="ztilde")
    p.set_defaults(func=cmd_lattice_enum)

    sym = top.add_parser("symm").add_subparsers(dest="cmd", required=True)
    p = sym.add_parser("table-i")
    _common(p)
    p.set_defaults(func=cmd_symm_table)
    p = sym.add_parser("fiber")
    _common(p)
    p.add_argument("--tau", required=True, help="coweight such as w1+w6, 2w3 or 0")
    p.set_defaults(func=cmd_symm_fiber)
    p = sym.add_parser("verify")
    _common(p)
    _sweep(p)
    p.add_argument("--theorem", required=True)
    p.set_defaults(func=cmd_symm_verify)

    ds = top.add_parser("ds").add_subparsers(dest="cmd", required=True)
    for name, func in (("ktype", cmd_ds_ktype), ("spectrum", cmd_ds_spectrum)):
        p = ds.add_parser(name)
        _common(p)
        p.add_argument("--tau", required=True)
        p.add_argument("--z", type=int, default=0, help="index into the abelian fibre over tau")
        p.add_argument("--lambda", dest="lam", default="rho", help="'rho' or fundamental-weight coordinates a,b,...")
        p.add_argument("--nmax", type=int, default=2)
        p.add_argument("--allow-incompatible", action="store_true")
        if name == "ktype":
            p.add_argument("--mu", help="K-highest weight in simple-root coordinates")
        p.set_defaults(func=func)
    p = ds.add_parser("e6")
    _common(p)
    p.add_argument("--nmax", type=int, default=2)
    p.set_defaults(func=cmd_ds_e6)

    p = top.add_parser("verify")
    _common(p)
    _sweep(p)
    p.add_argument("--all", action="store_true")
    p.add_argument("--theorem", action="append", help="check key such as T2.4 or 2.4; repeatable")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidType, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(json.dumps({"schema": SCHEMA, "error": type(exc).__name__, "message": msg}), file=sys.stderr)
        return 2


run = main


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
