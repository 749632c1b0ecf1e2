"""Command-line interface: ``p1split {split,smb,verify,oracle,gen}``.

Exit codes: 0 ok, 2 parse/usage error, 3 singular matrix, 4 certificate
verification failure, 5 oracle disagrees with the reduction, 6 oracle cannot
run (unsupported field or enumeration cap).
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .exceptions import EnumerationCapExceeded, SingularMatrix, UnsupportedField, VerificationError
from .generate import gen_instance
from .jsonio import (InstanceError, dumps, load_instance, load_json_file, matrix_from_json,
                     matrix_to_json)
from .laurent import check_weights
from .oracle import brute_minima
from .scalar import field_from_json, parse_field
from .smb import Lattice, smb
from .splitter import Splitting, split, split_rational, verify_splitting

EXIT_OK, EXIT_PARSE, EXIT_SINGULAR, EXIT_VERIFY, EXIT_ORACLE, EXIT_UNSUPPORTED = 0, 2, 3, 4, 5, 6


class UsageError(ValueError):
    pass


def _parse_weights(text, d):
    if text is None:
        return None
    try:
        w = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--weights must be comma-separated integers, got {text!r}") from None
    if len(w) != d:
        raise UsageError(f"--weights has {len(w)} entries, instance has dim {d}")
    return tuple(w)


def _meta(args, timings):
    meta = {"tool": "p1split", "version": __version__, "seed": args.tie_break_seed}
    if args.timings:
        meta["timings_ms"] = {k: round(v * 1000) for k, v in timings.items()}
    return meta


def _run_split(path, args):
    t0 = time.perf_counter()
    inst = load_instance(path)
    weights = _parse_weights(args.weights, inst.dim) or inst.weights
    t1 = time.perf_counter()
    runner = split_rational if inst.is_rational else split
    try:
        s = runner(inst.matrix, inst.field, weights, tie_break=args.tie_break_seed)
    except VerificationError as exc:
        return EXIT_VERIFY, {"error": str(exc), "checks": exc.report.to_json() if exc.report else None}
    t2 = time.perf_counter()
    report = verify_splitting(inst.matrix, s)
    if not report.all:
        return EXIT_VERIFY, {"error": "certificate failed verification", "checks": report.to_json()}
    t3 = time.perf_counter()
    out = {
        "field": inst.field.to_json(),
        "splitting_type": list(s.n),
        "W": matrix_to_json(s.W),
        "D": matrix_to_json(s.D),
        "U": matrix_to_json(s.U),
        "shift": s.shift,
        "weights": list(check_weights(s.weights, inst.dim)),
        "checks": report.to_json(),
        "meta": _meta(args, {"parse": t1 - t0, "split": t2 - t1, "verify": t3 - t2}),
    }
    return EXIT_OK, out


def _run_smb(path, args):
    inst = load_instance(path)
    if inst.is_rational:
        raise UsageError(f"{path}: smb needs Laurent entries (no rational functions)")
    weights = _parse_weights(args.weights, inst.dim) or inst.weights
    t0 = time.perf_counter()
    S = smb(Lattice(inst.matrix, weights, inst.field), tie_break=args.tie_break_seed)
    t1 = time.perf_counter()
    return EXIT_OK, {
        "field": inst.field.to_json(),
        "omegas": matrix_to_json(S.omegas),
        "U": matrix_to_json(S.U),
        "gauges": list(S.gauges),
        "pivot_rows": list(S.pivot_rows),
        "iterations": S.iterations,
        "meta": _meta(args, {"smb": t1 - t0}),
    }


def _run_oracle(path, args):
    inst = load_instance(path)
    if inst.is_rational:
        raise UnsupportedField(f"{path}: the oracle needs Laurent entries over a prime field")
    weights = _parse_weights(args.weights, inst.dim) or inst.weights
    L = Lattice(inst.matrix, weights, inst.field)
    report = brute_minima(L, args.bound)
    gauges = list(smb(L).gauges)
    agree = gauges == report.minima
    out = report.to_json()
    out.update({"smb_gauges": gauges, "agree": agree})
    return (EXIT_OK if agree else EXIT_ORACLE), out


def _run_verify(paths, args):
    if len(paths) != 2:
        raise UsageError("verify takes an instance file and a result file")
    inst = load_instance(paths[0])
    res = load_json_file(paths[1])
    try:
        field = field_from_json(res.get("field", inst.field.to_json()))
        n = res["splitting_type"]
        d = inst.dim
        S = Splitting(
            n=list(n),
            W=matrix_from_json(field, res["W"], d, "W"),
            D=matrix_from_json(field, res["D"], d, "D"),
            U=matrix_from_json(field, res["U"], d, "U", poly=True),
            shift=res.get("shift", 0),
            field=field,
            weights=tuple(res.get("weights") or (0,) * d),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceError(f"{paths[1]}: {exc}") from None
    report = verify_splitting(inst.matrix, S)
    return (EXIT_OK if report.all else EXIT_VERIFY), {"checks": report.to_json()}


RUNNERS = {"split": _run_split, "smb": _run_smb, "oracle": _run_oracle}


def _guarded(cmd, path, args):
    try:
        return RUNNERS[cmd](path, args)
    except (InstanceError, UsageError, OSError) as exc:
        return EXIT_PARSE, {"error": str(exc)}
    except SingularMatrix as exc:
        return EXIT_SINGULAR, {"error": f"{path}: singular matrix: {exc}"}
    except (UnsupportedField, EnumerationCapExceeded) as exc:
        return EXIT_UNSUPPORTED, {"error": str(exc)}


def _pretty(cmd, out) -> str:
    if "error" in out:
        return f"error: {out['error']}"
    lines = []
    if cmd == "split":
        lines.append("splitting type: " + " ".join(f"O({n})" for n in out["splitting_type"]))
        lines.append("checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}"
                                            for k, v in out["checks"].items()))
    elif cmd == "smb":
        lines.append("gauges: " + " ".join(map(str, out["gauges"])))
        lines.append(f"pivot rows: {out['pivot_rows']}  iterations: {out['iterations']}")
    elif cmd == "oracle":
        lines.append(f"oracle minima (B={out['bound']}): {out['minima']}  stable: {out['stable']}")
        lines.append(f"smb gauges: {out['smb_gauges']}  agree: {out['agree']}")
        lines.append(f"vectors enumerated: {out['enumerated']}")
    elif cmd == "verify":
        lines.append("checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}"
                                            for k, v in out["checks"].items()))
    else:
        lines.append(dumps(out, pretty=True))
    return "\n".join(lines)


def _emit(cmd, out, args, stream):
    if args.pretty and "error" in out:
        return
    text = _pretty(cmd, out) if args.pretty else dumps(out)
    stream.write(text + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", default=False,
                     help="canonical JSON output (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable output")
    common.add_argument("--jobs", type=int, default=1, help="process instance files in parallel")
    common.add_argument("-o", "--output", help="write output to this file instead of stdout")

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("paths", nargs="+", metavar="INSTANCE")
    solver.add_argument("--weights", help="comma-separated norm weights, overrides the file")
    solver.add_argument("--tie-break-seed", type=int, default=None,
                        help="seeded random pivot tie-breaking (result type is unchanged)")
    solver.add_argument("--timings", action="store_true", help="add wall-clock timings to meta")

    p = argparse.ArgumentParser(prog="p1split", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"p1split {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)
    sub.add_parser("split", parents=[common, solver], help="splitting type and certificate")
    sub.add_parser("smb", parents=[common, solver], help="successive minimum basis")
    orc = sub.add_parser("oracle", parents=[common, solver], help="brute-force minima check")
    orc.add_argument("--bound", type=int, required=True, help="max degree of enumerated coefficients")
    ver = sub.add_parser("verify", parents=[common], help="re-verify a result file")
    ver.add_argument("paths", nargs=2, metavar=("INSTANCE", "RESULT"))
    gen = sub.add_parser("gen", parents=[common], help="random instance with known type")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--dim", type=int, required=True)
    gen.add_argument("--deg", type=int, required=True)
    gen.add_argument("--field", default="F2")
    gen.add_argument("--unimodular-mixes", type=int, default=0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0

    stream = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        if args.cmd == "gen":
            seed = args.seed
            if os.environ.get("P1SPLIT_SEED"):
                seed = int(os.environ["P1SPLIT_SEED"])
            try:
                inst = gen_instance(seed, args.dim, args.deg, parse_field(args.field), args.unimodular_mixes)
            except ValueError as exc:
                sys.stderr.write(f"error: {exc}\n")
                return EXIT_PARSE
            stream.write(dumps(inst.to_json(), pretty=args.pretty) + "\n")
            return EXIT_OK

        if args.cmd == "verify":
            try:
                code, out = _run_verify(args.paths, args)
            except (InstanceError, UsageError, OSError) as exc:
                code, out = EXIT_PARSE, {"error": str(exc)}
                sys.stderr.write(f"error: {exc}\n")
            _emit("verify", out, args, stream)
            return code

        if args.jobs > 1 and len(args.paths) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_guarded, [args.cmd] * len(args.paths), args.paths,
                                        [args] * len(args.paths)))
        else:
            results = [_guarded(args.cmd, path, args) for path in args.paths]
        for code, out in results:
            if "error" in out:
                sys.stderr.write(f"error: {out['error']}\n")
            _emit(args.cmd, out, args, stream)
        return max(code for code, _ in results)
    finally:
        if stream is not sys.stdout:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
