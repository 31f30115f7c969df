"""Command-line front end.

    gcrlie COMMAND [PROBLEM] [--seed N] [--only IDS]

PROBLEM is a JSON problem file (``-`` reads standard input).  Output is a
single JSON document on standard output with sorted keys.  Exit codes:
0 computed, 2 unknown verdict, 3 input error, 4 capability refused,
1 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import gcr, oracle
from .errors import (CapabilityError, DimensionError, FieldError, ParseError,
                     PreconditionError, VerificationError)
from .jordan import jordan_closure
from .liealg import bracket_closure, hull_of
from .modules import hull, jacobson_radical, radical_layers
from .papercheck import papercheck, report
from .problem import SchemaError, load_problem
from .serialize import to_jsonable
from .verdict import Verdict

EXIT_OK, EXIT_INTERNAL, EXIT_UNKNOWN, EXIT_INPUT, EXIT_REFUSED = 0, 1, 2, 3, 4


def _algebra(problem):
    return bracket_closure(problem.context, problem.generators)


def cmd_closure(problem, rng):
    return to_jsonable(_algebra(problem))


def cmd_hull(problem, rng):
    return to_jsonable(hull_of(_algebra(problem)))


def cmd_jordan_closure(problem, rng):
    closure, method = jordan_closure(_algebra(problem))
    return {"algebra": to_jsonable(closure), "method": method}


def _verdict(fn):
    def run(problem, rng):
        return fn(_algebra(problem), rng)
    return run


def cmd_is_toral(problem, rng):
    return gcr.is_toral(_algebra(problem))


def cmd_semisimplify(problem, rng):
    return gcr.semisimplify(_algebra(problem), rng=rng)


def cmd_ssimp_unique(problem, rng):
    h = _algebra(problem)
    first = gcr.semisimplify(h, rng=rng)
    second = first
    for flag in gcr.admissible_flags(h, rng):
        if flag != first.flag:
            second = gcr.semisimplify(h, flag=flag, rng=rng)
            break
    wit = gcr.ssimp_uniqueness_check(h, first, second, rng, problem.budget)
    return {"first": to_jsonable(first), "second": to_jsonable(second),
            "witness": to_jsonable(wit), "verdict": wit.found if wit.found else None}


def cmd_radical(problem, rng):
    h = _algebra(problem)
    A = hull(gcr.module_matrices(h))
    J = jacobson_radical(A)
    layers = radical_layers(J, h.n)
    return {"hull_dim": A.dim, "radical": to_jsonable(J),
            "layers": [to_jsonable(L) for L in layers]}


def cmd_solvable_decomp(problem, rng):
    return gcr.solvable_decomposition(_algebra(problem), rng=rng)


def cmd_char0_criterion(problem, rng):
    rep = gcr.char0_criterion(_algebra(problem))
    return {"adjoint_semisimple": to_jsonable(rep.adjoint_semisimple),
            "natural_gcr": to_jsonable(rep.natural_gcr),
            "radical_toral": to_jsonable(rep.radical_toral),
            "radical": to_jsonable(rep.radical),
            "agree": rep.agree, "verdict": rep.natural_gcr.value}


def cmd_instability(problem, rng):
    tup = problem.tuple if problem.tuple is not None else problem.generators
    return gcr.instability_test(problem.context, tup, rng)


def cmd_plongeable(problem, rng):
    return gcr.is_plongeable_pgl2(_algebra(problem))


def cmd_oracle(problem, rng):
    h = _algebra(problem)
    d = oracle.def_based_gcr(h)
    sigma = oracle.subcomplex(h)
    dcr = oracle.is_delta_cr(sigma)
    centre = oracle.centre_search(h, problem.budget * 1000) if not dcr else None
    radical_route = gcr.is_gcr(h, rng).value
    return {"def_based_gcr": d.value, "witness_flag": to_jsonable(d.witness),
            "delta_cr": dcr, "subcomplex": sigma.as_dict(), "centre": to_jsonable(centre),
            "radical_route": radical_route, "agree": d.value == dcr == radical_route,
            "verdict": d.value}


COMMANDS = {
    "closure": cmd_closure,
    "hull": cmd_hull,
    "jordan-closure": cmd_jordan_closure,
    "is-gcr": _verdict(gcr.is_gcr),
    "is-gir": _verdict(gcr.is_gir),
    "is-gind": _verdict(gcr.is_gind),
    "is-toral": cmd_is_toral,
    "semisimplify": cmd_semisimplify,
    "ssimp-unique": cmd_ssimp_unique,
    "radical": cmd_radical,
    "solvable-decomp": cmd_solvable_decomp,
    "char0-criterion": cmd_char0_criterion,
    "instability": cmd_instability,
    "plongeable-pgl2": cmd_plongeable,
    "oracle": cmd_oracle,
}


def _parser():
    p = argparse.ArgumentParser(prog="gcrlie", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(list(COMMANDS) + ["papercheck"]))
    p.add_argument("problem", nargs="?", help="problem file (JSON); '-' for stdin")
    p.add_argument("--seed", type=int, default=None, help="overrides options.seed (default 0)")
    p.add_argument("--only", default=None, help="comma-separated fixture ids for papercheck")
    return p


def _emit(doc, out):
    out.write(json.dumps(doc, sort_keys=True, indent=2))
    out.write("\n")


def _read_problem(path):
    if path is None:
        raise SchemaError("a problem file is required for this command", "")
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise SchemaError(f"cannot read problem file: {exc}", "") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", "") from exc


def run(argv=None, out=None, err=None):
    """Execute one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    args = _parser().parse_args(argv)
    seed = args.seed if args.seed is not None else 0
    doc = {"command": args.command}
    try:
        if args.command == "papercheck":
            only = None if args.only is None else [s for s in args.only.split(",") if s]
            results = papercheck(only)
            doc.update(report(results))
            doc["seed"] = seed
            _emit(doc, out)
            return EXIT_OK if doc["passed"] else EXIT_INTERNAL
        problem = load_problem(_read_problem(args.problem))
        if args.seed is None:
            seed = problem.seed
        for w in problem.warnings:
            err.write(f"warning: {w}\n")
        doc["warnings"] = problem.warnings
        doc["seed"] = seed
        result = COMMANDS[args.command](problem, random.Random(seed))
        code = EXIT_OK
        if isinstance(result, Verdict):
            code = EXIT_OK if result.known else EXIT_UNKNOWN
            result = to_jsonable(result)
        elif not isinstance(result, dict):
            result = to_jsonable(result)
        elif "verdict" in result and result["verdict"] is None:
            code = EXIT_UNKNOWN
        doc.update(result)
        _emit(doc, out)
        return code
    except SchemaError as exc:
        doc.update({"error": str(exc), "pointer": exc.pointer, "seed": seed})
        code = EXIT_INPUT
    except (FieldError, ParseError, DimensionError, PreconditionError) as exc:
        doc.update({"error": str(exc), "pointer": getattr(exc, "pointer", ""), "seed": seed})
        code = EXIT_INPUT
    except CapabilityError as exc:
        doc.update({"error": str(exc), "refused": True, "seed": seed})
        code = EXIT_REFUSED
    except VerificationError as exc:
        doc.update({"error": f"internal verification failed: {exc}", "seed": seed})
        code = EXIT_INTERNAL
    _emit(doc, out)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
