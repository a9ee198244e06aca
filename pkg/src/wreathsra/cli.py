"""Command-line front end.  Every subcommand prints one JSON document.

Exit status: 0 success, 1 domain error (a JSON ``error`` object is printed),
2 usage error (bad flags, unreadable or schema-invalid job files).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .arith import scalar_from_json, scalar_to_json
from .gamma import CyclicGroup, LambdaVector, c_from_lambda
from .jobs import Job, JobError, load_catalog, parse_job, read_json
from .rankone import all_simples
from .roots import mckay_quiver, r_lambda, sigma_lambda
from .selftest import DEFAULT_CATALOG, run_all
from .wreath import (ContinuationError, build_induced, check_R1_R2, check_trace_conditions,
                     direction_for_k, first_order_deformation, intersect_hyperplanes,
                     module_hyperplanes, newton_continue, parameter_at, tangent_lambda_space,
                     tangent_matches)
from .wreath.relations import report_to_json

COMMANDS = ("mckay", "roots", "simples", "hyperplanes", "deform", "trace-check", "continue", "selftest")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_lambda(p):
    p.add_argument("--ell", type=int, required=True, help="order of the cyclic group")
    p.add_argument("--lambda", dest="lam", nargs="+", required=True, metavar="VALUE",
                   help="lambda_0 ... lambda_{ell-1} as exact strings such as -1/2")


def _add_job(p):
    p.add_argument("--job", required=True, help="path to a JSON job description")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wreathsra", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--output", help="write the JSON result here instead of stdout")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("mckay", help="McKay quiver of Z/ell")
    p.add_argument("--ell", type=int, required=True)
    _add_lambda(sub.add_parser("roots", help="R_lambda and Sigma_lambda"))
    _add_lambda(sub.add_parser("simples", help="explicit simple modules for every root in Sigma_lambda"))
    _add_job(sub.add_parser("hyperplanes", help="hyperplanes of a job and their intersection"))
    _add_job(sub.add_parser("deform", help="first-order deformation compared with the hyperplanes"))
    _add_job(sub.add_parser("trace-check", help="trace conditions against the hyperplanes"))
    p = sub.add_parser("continue", help="Newton continuation to finite k")
    _add_job(p)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p = sub.add_parser("selftest", help="run the property suites")
    p.add_argument("--catalog", help="JSON catalog of cases (default: built-in)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised suites")
    for name in COMMANDS:
        sub.choices[name].add_argument("--output", default=argparse.SUPPRESS,
                                       help="write the JSON result here instead of stdout")
    return parser


def _lambda(ell: int, values: Sequence[str]) -> LambdaVector:
    try:
        comps = tuple(scalar_from_json(v, ell) for v in values)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse lambda values {list(values)}: {exc}") from exc
    return LambdaVector(ell, comps)


def _job(path: str) -> Job:
    return parse_job(read_json(path), name=path)


def _module(job: Job):
    return build_induced(job.group, job.lam, job.composition, job.partitions, job.roots,
                         check_hypotheses=job.check_hypotheses)


def cmd_mckay(args) -> dict:
    group = CyclicGroup(args.ell)
    q = mckay_quiver(group)
    return {"ell": args.ell, **q.to_json(), "cartan": [list(r) for r in q.cartan], "delta": list(group.delta)}


def cmd_roots(args) -> dict:
    group = CyclicGroup(args.ell)
    lam = _lambda(args.ell, args.lam)
    q = mckay_quiver(group)
    r = r_lambda(q, lam)
    return {"ell": args.ell, "lambda": lam.to_json(), "r_lambda": [list(a) for a in r],
            "sigma_lambda": [list(a) for a in sigma_lambda(q, r)]}


def cmd_simples(args) -> dict:
    group = CyclicGroup(args.ell)
    lam = _lambda(args.ell, args.lam)
    return {"ell": args.ell, "lambda": lam.to_json(), "simples": [m.to_json() for m in all_simples(group, lam)]}


def _hyperplane_block(job: Job, module) -> dict:
    planes = module_hyperplanes(module)
    inter = intersect_hyperplanes(planes)
    return {
        "hyperplanes": [p.to_json() for p in planes],
        "intersection": inter.to_json(),
        "tangent_lambda": [[scalar_to_json(v) for v in d] for d in tangent_lambda_space(planes, job.group.ell)],
    }, inter


def cmd_hyperplanes(args) -> dict:
    job = _job(args.job)
    module = _module(job)
    block, _ = _hyperplane_block(job, module)
    return {"job": job.name, "coordinates": "(k, c_1, ..., c_{ell-1})", **block}


def cmd_deform(args) -> dict:
    job = _job(args.job)
    module = _module(job)
    c0 = c_from_lambda(job.group, job.lam)
    base = check_R1_R2(module, parameter_at(module, 0, c0))
    fo = first_order_deformation(module, c0)
    block, inter = _hyperplane_block(job, module)
    return {
        "job": job.name,
        "module": module.summary(),
        "c0": c0.to_json(),
        "relations_at_base": report_to_json(base),
        "first_order": fo.to_json(),
        **block,
        "tangent_matches_hyperplanes": inter.consistent and tangent_matches(fo, inter.directions),
        "codimension_equals_r": fo.codimension == module.r,
    }


def cmd_trace_check(args) -> dict:
    job = _job(args.job)
    module = _module(job)
    rows = []
    for r in check_trace_conditions(module):
        rows.append({
            "form": r["form"].to_json(),
            "hyperplane": r["hyperplane"].to_json(),
            "multiplier": None if r["multiplier"] is None else scalar_to_json(r["multiplier"]),
            "expected_multiplier": str(r["expected_multiplier"]),
            "ok": r["ok"],
        })
    return {"job": job.name, "blocks": rows, "ok": all(r["ok"] for r in rows)}


def cmd_continue(args) -> dict:
    job = _job(args.job)
    module = _module(job)
    fo = first_order_deformation(module)
    if job.get("direction") is not None:
        direction = [scalar_from_json(v, job.group.ell) for v in job.get("direction")]
        step = job.scalar("step", Fraction(1))
    elif job.get("k") is not None:
        direction, step = direction_for_k(fo, job.scalar("k"))
    else:
        raise JobError("continue needs either 'direction' (with 'step') or 'k' in the job")
    res = newton_continue(module, direction, step, args.tolerance,
                          substeps=job.get("substeps", 10), max_iter=job.get("max_iter", 40), first=fo)
    return {"job": job.name, "direction": [scalar_to_json(v) for v in direction], "step": scalar_to_json(step),
            "tolerance": args.tolerance, **res.to_json()}


def cmd_selftest(args) -> tuple[dict, int]:
    catalog = load_catalog(args.catalog) if args.catalog else DEFAULT_CATALOG
    results = run_all(catalog, seed=args.seed)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checks} checks)", file=sys.stderr)
    ok = all(r.passed for r in results)
    return {"passed": ok, "suites": [r.to_json() for r in results]}, 0 if ok else 1


HANDLERS = {
    "mckay": cmd_mckay,
    "roots": cmd_roots,
    "simples": cmd_simples,
    "hyperplanes": cmd_hyperplanes,
    "deform": cmd_deform,
    "trace-check": cmd_trace_check,
    "continue": cmd_continue,
    "selftest": cmd_selftest,
}


def _emit(obj: dict, output: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error(kind: str, exc: BaseException) -> dict:
    return {"error": {"kind": kind, "type": type(exc).__name__, "message": str(exc)}}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    output = None
    try:
        args = parser.parse_args(argv)
        output = getattr(args, "output", None)
        out = HANDLERS[args.command](args)
        code = 0
        if isinstance(out, tuple):
            out, code = out
    except (UsageError, JobError) as exc:
        _emit(_error("usage", exc), None)
        return 2
    except (ValueError, ArithmeticError, ContinuationError) as exc:
        _emit(_error("domain", exc), output)
        return 1
    _emit(out, output)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
