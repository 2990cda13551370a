"""Command line front end.

Exit codes: 0 pass, 1 mathematical failure, 2 invalid input, 3 IO error,
4 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .config import (
    CatalogError,
    catalog_configuration,
    check_configuration,
    configurations_isomorphic,
    lambda_configuration,
)
from .dynkin import coxeter_number
from .functors import (
    ArrowAssignment,
    default_template,
    eta_automorphism,
    explicit_Hprime,
    omega_candidates,
    preserves_ideal,
    solve_lift,
)
from .pathcat import (
    Budget,
    BudgetExceeded,
    FieldSpec,
    QuotientCategory,
    algebra_presentation_lambda,
    mesh_ideal,
    modified_mesh_ideal,
    nilpotency_index,
    projective_dimensions,
    stable_vs_full,
)
from .tquiver import (
    InvalidType,
    TqVertex,
    attach_projectives,
    automorphism_group,
    build_path_p,
    build_quotient,
    validate_type,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_IO, EXIT_BUDGET = 0, 1, 2, 3, 4


class InputError(ValueError):
    pass


def parse_budget(text: str | None) -> float | None:
    """``"5s"``, ``"2m"``, ``"1.5"`` (seconds)."""
    if text is None:
        return None
    mo = re.fullmatch(r"\s*([0-9]*\.?[0-9]+(?:e-?[0-9]+)?)\s*(ms|s|m|h)?\s*", text)
    if not mo:
        raise InputError(f"malformed budget {text!r}")
    val = float(mo.group(1)) * {"ms": 1e-3, "s": 1, "m": 60, "h": 3600, None: 1}[mo.group(2)]
    if val <= 0:
        raise InputError("budgets must be positive")
    return val


@dataclass
class RunConfig:
    kind: str
    n: int
    f: Fraction
    t: int
    field: FieldSpec
    seconds: float | None
    max_reductions: int

    def budget(self) -> Budget:
        return Budget(self.seconds, self.max_reductions)


def run_config(args) -> RunConfig:
    if getattr(args, "m", None) is not None:
        if args.m < 2:
            raise InputError("--m must be at least 2")
        kind, n, f, t = "D", 3 * args.m, Fraction(1, 3), 1
    else:
        if args.kind is None or args.n is None:
            raise InputError("give --kind/--n/--f/--t or --m")
        kind, n, t = args.kind, args.n, args.t
        try:
            f = Fraction(args.f)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"malformed rational {args.f!r}") from None
    try:
        fld = FieldSpec.parse(args.field)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    secs = parse_budget(args.budget)
    if secs is None and os.environ.get("MESHCAT_BUDGET_SECS"):
        secs = parse_budget(os.environ["MESHCAT_BUDGET_SECS"])
    if args.max_reductions <= 0:
        raise InputError("--max-reductions must be positive")
    return RunConfig(kind, n, f, t, fld, secs, args.max_reductions)


def _type(rc: RunConfig):
    return validate_type(rc.kind, rc.n, rc.f, rc.t)


def _emit(obj, out: str | None = None):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _m_of(ty) -> int:
    if not ty.nonstandard:
        raise InputError(f"{ty} is not of the form (D3m, 1/3, 1)")
    return ty.graph.n // 3


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------


def cmd_type_validate(args) -> int:
    rc = run_config(args)
    ty = _type(rc)
    d = ty.as_dict()
    d["standard"] = not ty.nonstandard
    d["valid"] = True
    _emit(d, args.out)
    return EXIT_OK


def to_dot(tq, with_tau: bool = False) -> str:
    lines = ["digraph G {", "  rankdir=LR;"]
    for v in tq.vertices:
        shape = ", shape=box" if v.proj else ""
        lines.append(f'  "{v}" [label="{v}"{shape}];')
    for s, t in tq.arrows:
        lines.append(f'  "{s}" -> "{t}";')
    if with_tau:
        for v in tq.vertices:
            if v in tq.tau:
                lines.append(f'  "{v}" -> "{tq.tau[v]}" [style=dashed, constraint=false];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_adjacency(tq) -> dict:
    return {
        "vertices": [str(v) for v in tq.vertices],
        "arrows": [[str(s), str(t)] for s, t in tq.arrows],
        "tau": {str(v): str(tq.tau[v]) for v in tq.vertices if v in tq.tau},
        "projectives": sorted(str(v) for v in tq.projectives),
    }


def _configuration(tq, preset: str):
    try:
        return catalog_configuration(tq, preset)
    except CatalogError as exc:
        raise InputError(str(exc)) from None


def cmd_quiver(args) -> int:
    rc = run_config(args)
    tq = build_quotient(_type(rc))
    if args.with_projectives:
        tq = attach_projectives(tq, _configuration(tq, args.config))
    if not args.dot and not args.json:
        args.json = "-"
    if args.dot:
        text = to_dot(tq, args.tau)
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            with open(args.dot, "w") as fh:
                fh.write(text)
    if args.json:
        _emit(to_adjacency(tq), args.json)
    return EXIT_OK


def _stable_category(rc: RunConfig, tq, modified: bool, engine: str = "auto"):
    if modified:
        ideal = modified_mesh_ideal(tq, _m_of(tq.rfs), rc.field)
    else:
        ideal = mesh_ideal(tq)
    return QuotientCategory(tq, ideal, rc.field, engine=engine, budget=rc.budget())


def check_config(rc: RunConfig, preset: str, modified: bool = False) -> tuple[bool, dict]:
    tq = build_quotient(_type(rc))
    C = _configuration(tq, preset)
    qc = _stable_category(rc, tq, modified)
    rep = check_configuration(qc, C)
    d = rep.as_dict()
    d["configuration"] = sorted(str(c) for c in C)
    d["type"] = str(tq.rfs)
    return rep.verdict, d


def check_nilpotency(rc: RunConfig, modified: bool, engine: str = "auto") -> tuple[bool, dict]:
    ty = _type(rc)
    tq = build_quotient(ty)
    qc = _stable_category(rc, tq, modified, engine)
    cert = nilpotency_index(qc)
    expected = coxeter_number(ty.graph) - 1
    return cert.index == expected, {
        "type": str(ty),
        "ideal": "modified" if modified else "mesh",
        "engine": qc.engine_name,
        "nilpotency": cert.index,
        "expected": expected,
        "witness_source": str(cert.witness_source),
        "witness_length": len(cert.witness),
        "witness": [tq.names[a] for a in cert.witness],
        "path_span_dims": cert.layer_dims,
    }


def check_hprime(rc: RunConfig, m: int) -> tuple[bool, dict]:
    tq = build_quotient(validate_type("D", 3 * m, Fraction(1, 3), 1))
    ideal = modified_mesh_ideal(tq, m, rc.field)
    qc = QuotientCategory(tq, ideal, rc.field, budget=rc.budget())
    explicit = preserves_ideal(explicit_Hprime(m, tq), ideal, qc)
    eta = eta_automorphism(tq)
    plain = preserves_ideal(ArrowAssignment.from_automorphism(eta, rc.field), ideal, qc)
    sols = solve_lift(eta, default_template(m, tq), ideal, qc)
    ok = explicit.verdict and not plain.verdict and bool(sols)
    return ok, {
        "m": m,
        "explicit_preserves_ideal": explicit.verdict,
        "explicit_certificate": explicit.rows,
        "plain_eta_preserves_ideal": plain.verdict,
        "plain_eta_failures": [r for r in plain.rows if r["image_normal_form"]],
        "solver_unknowns": len(default_template(m, tq).unknowns),
        "solver_solutions": [
            sorted([tq.names[a], len(w), c] for (a, w), c in s.items()) for s in sols
        ],
    }


def check_omega(rc: RunConfig, m: int) -> tuple[bool, dict]:
    tq = build_quotient(validate_type("D", 3 * m, Fraction(1, 3), 1))
    S = catalog_configuration(tq, "simples")
    C = catalog_configuration(tq, "lambda")
    group = automorphism_group(tq)
    cands = omega_candidates(tq, S, C, group)
    iso = configurations_isomorphic(tq, S, C, group)
    return bool(cands), {
        "m": m,
        "S": sorted(map(str, S)),
        "C": sorted(map(str, C)),
        "candidates": [list(g.label) if g.label else str(g) for g in cands],
        "isomorphism_witness": list(iso.label) if iso is not None and iso.label else None,
    }


def check_auts(rc: RunConfig) -> tuple[bool, dict]:
    ty = _type(rc)
    tq = build_quotient(ty)
    group = automorphism_group(tq)
    labelled = all(g.label is not None for g in group)
    return True, {
        "type": str(ty),
        "order": len(group),
        "labels": [list(g.label) for g in group] if labelled else None,
        "product_structure": labelled,
    }


def cmd_check(args) -> int:
    what = args.what
    rc = run_config(args)
    if what == "config":
        ok, rep = check_config(rc, args.config, args.modified)
    elif what == "nilpotency":
        ok, rep = check_nilpotency(rc, args.modified, args.engine)
    elif what == "hprime":
        ok, rep = check_hprime(rc, _m_of(_type(rc)))
    elif what == "omega":
        ok, rep = check_omega(rc, _m_of(_type(rc)))
    else:
        ok, rep = check_auts(rc)
    rep["pass"] = ok
    _emit(rep, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_hom(args) -> int:
    rc = run_config(args)
    tq = build_quotient(_type(rc))
    if args.with_projectives:
        tq = attach_projectives(tq, _configuration(tq, args.config))
    qc = _stable_category(rc, tq, args.modified, args.engine)
    table = qc.hom_dim_table()
    text = table.to_json() + "\n"
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def verify_all(m: int, fld: FieldSpec = FieldSpec(2), seconds: float | None = None,
               max_reductions: int = 10 ** 6) -> dict:
    """The checkable claims for one value of m, each with its own pass flag."""
    rc = RunConfig("D", 3 * m, Fraction(1, 3), 1, fld, seconds, max_reductions)
    out = {}
    ok, rep = check_config(rc, "lambda")
    out["configuration"] = {"pass": ok, "axiom1_violations": rep["axiom1_violations"],
                            "axiom2_violations": rep["axiom2_violations"]}
    for modified in (False, True):
        ok, rep = check_nilpotency(rc, modified)
        out["nilpotency_" + rep["ideal"]] = {"pass": ok, "value": rep["nilpotency"],
                                             "expected": 6 * m - 3}
    tq = build_quotient(validate_type("D", 3 * m, Fraction(1, 3), 1))
    p = build_path_p(m, tq)
    out["deviation_path"] = {
        "pass": p.length == 4 * m and p.source == TqVertex(0, 3 * m - 1) and p.target == TqVertex(1, 3 * m - 1),
        "length": p.length, "source": str(p.source), "target": str(p.target),
    }
    ok, rep = check_hprime(rc, m)
    out["hprime"] = {"pass": ok, "explicit": rep["explicit_preserves_ideal"],
                     "plain_eta": rep["plain_eta_preserves_ideal"],
                     "solutions": len(rep["solver_solutions"])}
    group = automorphism_group(tq)
    out["automorphisms"] = {"pass": len(group) == 2 * (2 * m - 1) and all(g.label for g in group),
                            "order": len(group)}
    C = lambda_configuration(m, tq)
    full = attach_projectives(tq, C)
    qf = QuotientCategory(full, modified_mesh_ideal(full, m, fld), fld, budget=rc.budget())
    qs = QuotientCategory(tq, modified_mesh_ideal(tq, m, fld), fld, budget=rc.budget())
    sc = stable_vs_full(qf, qs, TqVertex(0, 3 * m), TqVertex(1, 3 * m))
    out["projective_factoring"] = {"pass": sc.dim_projective_factoring == 0,
                                   "dim_full": sc.dim_full, "dim_stable": sc.dim_stable}
    alg = algebra_presentation_lambda(m, fld, budget=rc.budget())
    dims = projective_dimensions(alg)
    want = {1: 2 * m + 2, **{j: m + 2 for j in range(2, m + 1)}}
    out["algebra_dimensions"] = {"pass": dims == want and sum(dims.values()) == m * m + 3 * m,
                                 "projectives": {str(k): v for k, v in dims.items()}}
    ok, rep = check_omega(rc, m)
    out["omega"] = {"pass": rep["candidates"] == [[0, 1]], "candidates": rep["candidates"]}
    return out


def cmd_verify_all(args) -> int:
    rc = run_config(args)
    res = verify_all(args.m, rc.field, rc.seconds, rc.max_reductions)
    ok = all(v["pass"] for v in res.values())
    _emit({"m": args.m, "checks": res, "pass": ok}, args.out)
    return EXIT_OK if ok else EXIT_FAIL


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def _type_args(p: argparse.ArgumentParser, with_m: bool = True):
    p.add_argument("--kind", choices=["A", "D", "E"])
    p.add_argument("--n", type=int)
    p.add_argument("--f", default="1", help="frequency as num/den")
    p.add_argument("--t", type=int, default=1, help="torsion")
    if with_m:
        p.add_argument("--m", type=int, help="shorthand for (D_3m, 1/3, 1)")
    p.add_argument("--field", default="F2", help="F<p> or Q")
    p.add_argument("--budget", help="time budget, e.g. 5s (env MESHCAT_BUDGET_SECS)")
    p.add_argument("--max-reductions", type=int, default=10 ** 6)
    p.add_argument("--out", help="write JSON here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="meshcat", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    tp = sub.add_parser("type", help="admissible types")
    tsub = tp.add_subparsers(dest="action", required=True)
    tv = tsub.add_parser("validate")
    _type_args(tv)
    tv.set_defaults(func=cmd_type_validate)

    qp = sub.add_parser("quiver", help="emit the stable quotient as DOT or JSON")
    _type_args(qp)
    qp.add_argument("--dot", help="DOT output path ('-' for stdout)")
    qp.add_argument("--json", help="JSON adjacency output path ('-' for stdout)")
    qp.add_argument("--tau", action="store_true", help="draw dashed tau edges")
    qp.add_argument("--with-projectives", action="store_true")
    qp.add_argument("--config", default="catalog", choices=["catalog", "lambda", "simples"])
    qp.set_defaults(func=cmd_quiver)

    cp = sub.add_parser("check", help="run one verification")
    cp.add_argument("what", choices=["config", "nilpotency", "hprime", "omega", "auts"])
    _type_args(cp)
    cp.add_argument("--config", default="catalog", choices=["catalog", "lambda", "simples"])
    cp.add_argument("--modified", action="store_true", help="use the modified mesh ideal")
    cp.add_argument("--engine", default="auto", choices=["auto", "degree", "rewrite"])
    cp.set_defaults(func=cmd_check)

    hp = sub.add_parser("hom", help="Hom dimension table as JSON")
    _type_args(hp)
    hp.add_argument("--modified", action="store_true")
    hp.add_argument("--engine", default="auto", choices=["auto", "degree", "rewrite"])
    hp.add_argument("--with-projectives", action="store_true")
    hp.add_argument("--config", default="catalog", choices=["catalog", "lambda", "simples"])
    hp.set_defaults(func=cmd_hom)

    vp = sub.add_parser("verify-all", help="all checkable claims for one m")
    _type_args(vp, with_m=False)
    vp.add_argument("--m", type=int, default=2)
    vp.set_defaults(func=cmd_verify_all)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidType, InputError, CatalogError) as exc:
        print(f"meshcat: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"meshcat: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"meshcat: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"meshcat: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
