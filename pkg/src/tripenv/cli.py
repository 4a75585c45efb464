"""Command-line front end: ``tripenv <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from . import downup, envelope, structure, tripleops, verify
from .freealg import UsageError, format_fraction
from .groebner import DEFAULT_DEGREE_CAP


def _emit(doc, as_json: bool, text: Optional[str] = None) -> None:
    if as_json or text is None:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _cap(value: str) -> int:
    n = int(value)
    if n < 3:
        raise argparse.ArgumentTypeError("caps must be at least 3")
    return n


def _growth_degree(value: str) -> int:
    n = int(value)
    if n < 7:
        raise argparse.ArgumentTypeError("growth estimates need degree at least 7 (8 data points)")
    return n


def _fmt_vec(v) -> str:
    return "[" + ", ".join(format_fraction(Fraction(c)) for c in v) + "]"


def _label(selector: str) -> str:
    try:
        return tripleops.lookup(selector).name
    except KeyError:
        return selector


# -- ops ---------------------------------------------------------------------


def cmd_ops(args) -> int:
    if args.action == "list":
        rows = []
        for e in tripleops.catalog():
            rows.append({
                "name": e.name, "family": e.family, "q": e.q, "expression": e.expression,
                "coefficients": [format_fraction(c) for c in e.op.coeffs],
                "matrix_form": [format_fraction(c) for c in e.op.matrix_form().as_vector()],
            })
        text = "\n".join(f"{r['name']:<24} {_fmt_vec(e.op.coeffs):<28} {e.expression}"
                         for r, e in zip(rows, tripleops.catalog()))
        _emit(rows, args.json, text)
        return 0
    if args.action == "matrix":
        if len(args.operands) != 1:
            raise UsageError("ops matrix takes one operation")
        op = tripleops.resolve(args.operands[0])
        y = op.matrix_form()
        doc = {"operation": _label(args.operands[0]),
               "matrix_form": [format_fraction(c) for c in y.as_vector()],
               "canonical": str(y.canonical())}
        _emit(doc, args.json, f"{doc['operation']}: Y = {y}")
        return 0
    if args.action == "equiv":
        if len(args.operands) != 2:
            raise UsageError("ops equiv takes two operations")
        x, y = (tripleops.resolve(s) for s in args.operands)
        same = tripleops.equivalent(x, y)
        doc = {"operations": [_label(s) for s in args.operands], "equivalent": same}
        _emit(doc, args.json, f"{doc['operations'][0]} {'~' if same else '!~'} {doc['operations'][1]}")
        return 0
    if args.action == "search":
        res = tripleops.search(args.range)
        doc = {
            "range": args.range, "vectors": res.total, "classes": res.class_count,
            "catalog_hits": len(res.hits), "missing": res.missing(),
            "representatives": {k: [format_fraction(c) for c in v] for k, v in sorted(res.hits.items())},
        }
        text = (f"{res.total} vectors, {res.class_count} classes, "
                f"{len(res.hits)}/22 catalog operations represented; missing: {', '.join(res.missing()) or 'none'}")
        _emit(doc, args.json, text)
        return 0
    raise UsageError(f"unknown ops action {args.action!r}")


# -- envelope / wedderburn / gk ----------------------------------------------


def envelope_report(selector: str, cap: int, growth: int) -> dict:
    op = tripleops.resolve(selector)
    P = envelope.build_envelope(op, degree_cap=cap)
    doc = P.to_dict(growth)
    doc["operation"] = _label(selector)
    doc["authoritative"] = P.basis.complete
    if P.table is not None:
        doc["wedderburn"] = structure.decompose(P.table).to_dict(P.table.labels)
    elif P.basis.complete:
        params = envelope.downup_parameters(P)
        doc["downup_parameters"] = [format_fraction(c) for c in params] if params else None
    return doc


def _envelope_text(doc: dict) -> str:
    lines = [f"operation: {doc['operation']}",
             f"relations: {', '.join(r for r in doc['relations'] if r != '0') or '(none)'}",
             f"groebner basis ({doc['groebner_basis']['status']}): "
             f"{', '.join(doc['groebner_basis']['elements']) or '(empty)'}",
             f"verdict: {doc['verdict']}"]
    if "graded_dimensions" in doc:
        lines.append(f"graded dimensions: {doc['graded_dimensions']}")
        lines.append(f"growth: {doc['growth']}")
    if doc.get("downup_parameters"):
        lines.append(f"down-up algebra A({', '.join(doc['downup_parameters'])})")
    if "wedderburn" in doc:
        lines.append(f"wedderburn: {doc['wedderburn']['summary']}")
    if not doc["authoritative"]:
        lines.append("warning: completion truncated, results are not authoritative")
    return "\n".join(lines)


def _envelope_job(args: tuple[str, int, int]) -> dict:
    return envelope_report(*args)


def cmd_envelope(args) -> int:
    names = tripleops.catalog_names() if args.name == "all" else [args.name]
    jobs = [(n, args.cap, args.growth) for n in names]
    workers = verify.worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            docs = list(pool.map(_envelope_job, jobs))
    else:
        docs = [_envelope_job(j) for j in jobs]
    if args.json:
        _emit(docs if args.name == "all" else docs[0], True)
    else:
        print("\n\n".join(_envelope_text(d) for d in docs))
    return 0 if all(d["authoritative"] for d in docs) else 1


def cmd_wedderburn(args) -> int:
    op = tripleops.resolve(args.name)
    P = envelope.build_envelope(op, degree_cap=args.cap)
    if P.table is None:
        raise UsageError(f"{args.name}: envelope is {P.verdict}, no finite table to decompose")
    rep = structure.decompose(P.table)
    doc = rep.to_dict(P.table.labels)
    doc["operation"] = _label(args.name)
    T, Q = P.table, rep.quotient
    text = "\n".join([
        f"operation: {doc['operation']} (dimension {rep.dim})",
        f"radical ({len(rep.radical)}): {', '.join(T.render(v) for v in rep.radical) or '0'}",
        f"quotient basis: {', '.join(Q.labels)}",
        f"center: {', '.join(Q.render(v) for v in rep.center)}",
        f"idempotents: {', '.join(Q.render(v) for v in rep.idempotents)}",
        f"components: {rep.component_dims} irreducible dimensions: {rep.irrep_dims}",
        f"decomposition: {rep.summary()}",
    ])
    _emit(doc, args.json, text)
    return 0


def cmd_gk(args) -> int:
    op = tripleops.resolve(args.name)
    P = envelope.build_envelope(op)
    if not P.basis.complete:
        raise UsageError("completion truncated; growth data unavailable")
    per, cum = envelope.graded_dims(P, args.degree)
    est = envelope.gk_estimate(cum)
    doc = {"operation": _label(args.name), "graded_dimensions": per, "cumulative_dimensions": cum,
           "estimate": str(est)}
    _emit(doc, args.json, f"{doc['operation']}: {per} -> {est}")
    return 0


# -- downup / verify ---------------------------------------------------------


def _algebra(args) -> downup.DownUpAlgebra:
    if args.quotient:
        return downup.SYMSUM
    vals = [Fraction(x) for x in args.params.split(",")]
    if len(vals) != 3:
        raise UsageError("--params takes alpha,beta,gamma")
    return downup.DownUpAlgebra(*vals)


def _mono(text: str) -> tuple[int, int, int]:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 3:
        raise UsageError(f"monomial exponents must be i,j,k, got {text!r}")
    return parts[0], parts[1], parts[2]


def cmd_downup(args) -> int:
    if args.action == "mult":
        if len(args.operands) != 2:
            raise UsageError("downup mult takes two monomials i,j,k")
        alg = _algebra(args)
        x, y = (alg.monomial(*_mono(s)) for s in args.operands)
        z = alg.multiply(x, y)
        doc = {"algebra": str(alg), "left": x.to_json(), "right": y.to_json(), "product": z.to_json()}
        _emit(doc, args.json, f"({x}) * ({y}) = {z}")
        return 0
    if args.action == "center":
        z = downup.center_element(args.m)
        doc = {"m": args.m, "element": z.to_json(),
               "commutes_with_a": not downup.commutator(z, downup.SYMSUM.a()),
               "commutes_with_b": not downup.commutator(z, downup.SYMSUM.b())}
        ok = doc["commutes_with_a"] and doc["commutes_with_b"]
        _emit(doc, args.json, f"Z({args.m}) = {z}  central: {ok}")
        return 0 if ok else 1
    if args.action == "b2":
        if len(args.operands) != 1:
            raise UsageError("downup b2 takes one monomial i,j,k")
        alg = _algebra(args)
        i, j, k = _mono(args.operands[0])
        z = downup.b2_expand(i, j, k, Fraction(args.c1), Fraction(args.c2), alg)
        doc = {"algebra": str(alg), "monomial": [i, j, k], "c1": args.c1, "c2": args.c2, "expansion": z.to_json()}
        _emit(doc, args.json, str(z))
        return 0
    raise UsageError(f"unknown downup action {args.action!r}")


def cmd_verify(args) -> int:
    name = verify.resolve_suite(args.suite)
    bound = args.max
    if bound is None:
        bound = args.m if args.m is not None else args.n
    res = verify.run(name, bound)
    doc = res.to_dict()
    text = f"{res.suite}: {res.cases} cases, {res.mismatches} mismatches -> {'PASS' if res.passed else 'FAIL'}"
    if res.first_counterexample:
        text += "\nfirst counterexample: " + json.dumps(res.first_counterexample, sort_keys=True)
    _emit(doc, args.json, text)
    return 0 if res.passed else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tripenv", description="Envelopes of trilinear operations on 2x2 matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    ops = with_json(sub.add_parser("ops", help="catalog, matrix forms, equivalence, searches"))
    ops.add_argument("action", choices=["list", "matrix", "equiv", "search"])
    ops.add_argument("operands", nargs="*", help="catalog names or comma-separated coefficient vectors")
    ops.add_argument("--range", type=int, default=1, help="coefficient bound for search")
    ops.set_defaults(func=cmd_ops)

    env = with_json(sub.add_parser("envelope", help="relations, basis and structure of an envelope"))
    env.add_argument("name", help="catalog name, coefficient vector, or 'all'")
    env.add_argument("--cap", type=_cap, default=DEFAULT_DEGREE_CAP, help="completion degree cap")
    env.add_argument("--growth", type=_growth_degree, default=DEFAULT_DEGREE_CAP, help="growth data degree")
    env.set_defaults(func=cmd_envelope)

    wd = with_json(sub.add_parser("wedderburn", help="decompose a finite-dimensional envelope"))
    wd.add_argument("name")
    wd.add_argument("--cap", type=_cap, default=DEFAULT_DEGREE_CAP)
    wd.set_defaults(func=cmd_wedderburn)

    du = with_json(sub.add_parser("downup", help="down-up algebra arithmetic"))
    du.add_argument("action", choices=["mult", "center", "b2"])
    du.add_argument("operands", nargs="*", help="monomials as i,j,k")
    du.add_argument("--params", default="-1,-1,1", help="alpha,beta,gamma")
    du.add_argument("--quotient", action="store_true", help="cube quotient of A(-1,-1,1)")
    du.add_argument("--m", type=int, default=2, help="index of the central element")
    du.add_argument("--c1", default="-1")
    du.add_argument("--c2", default="0")
    du.set_defaults(func=cmd_downup)

    vf = with_json(sub.add_parser("verify", help="closed-form versus brute-force sweeps"))
    vf.add_argument("suite", help=", ".join(sorted(verify.SUITES) + sorted(verify.ALIASES)))
    vf.add_argument("--max", type=int, default=None, help="exponent bound")
    vf.add_argument("--m", type=int, default=None, help="largest central-element index")
    vf.add_argument("--n", type=int, default=None, help="largest degree")
    vf.set_defaults(func=cmd_verify)

    gk = with_json(sub.add_parser("gk", help="growth estimate of an envelope"))
    gk.add_argument("name")
    gk.add_argument("--degree", type=_growth_degree, default=DEFAULT_DEGREE_CAP)
    gk.set_defaults(func=cmd_gk)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    # operands may follow options (``downup mult --params 0,1,0 0,0,3 2,0,0``)
    args, extra = parser.parse_known_args(argv)
    if extra:
        if not hasattr(args, "operands") or any(x.startswith("-") for x in extra):
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        args.operands = list(args.operands) + extra
    try:
        return args.func(args)
    except (UsageError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"tripenv: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
