"""``rectcross`` command line.

Exit codes: 0 ok, 2 unreadable input, 3 general-position violation,
4 oracle size cap exceeded, 5 overlap or membership violation.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from pathlib import Path

from . import _backend, bench
from .delta import batch_add, batch_move, batch_remove
from .errors import CapacityError, GeometryError, NotAMember, OverlapError
from .geom import ParseError, Point, parse_points, write_points
from .lambdas import crossing_number, crossing_number_oracle, lambda_matrix
from .optimize import OptimizerConfig, optimize_move

EXIT_PARSE, EXIT_GEOMETRY, EXIT_CAP, EXIT_MEMBERSHIP = 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code, msg):
        self.code = code
        super().__init__(msg)


def _load(path):
    try:
        data = Path(path).read_bytes()
        return parse_points(data.decode("ascii")), hashlib.sha256(data).hexdigest()
    except (OSError, UnicodeDecodeError, ParseError, CapacityError) as e:
        raise CliError(EXIT_PARSE, f"{path}: {e}") from None
    except GeometryError as e:
        raise CliError(EXIT_GEOMETRY, f"{path}: {e}") from None


def _emit_delta(args, res):
    for q, v in res.items():
        if args.json:
            print(json.dumps({"point": list(q), "cr": v}))
        else:
            print(f"{q} {v}")
    return {str(q): v for q, v in res.items()}


def cmd_cr(args):
    S, digest = _load(args.file)
    cr = crossing_number(S)
    print(json.dumps({"n": len(S), "cr": cr}) if args.json else f"n={len(S)} cr={cr}")
    return digest, {"n": len(S), "cr": cr}


def cmd_oracle(args):
    S, digest = _load(args.file)
    if len(S) > args.cap:
        raise CliError(EXIT_CAP, f"n={len(S)} exceeds the oracle cap {args.cap}")
    cr = crossing_number_oracle(S)
    print(json.dumps({"n": len(S), "cr": cr}) if args.json else f"n={len(S)} cr={cr}")
    return digest, {"n": len(S), "cr": cr}


def cmd_lambda(args):
    S, digest = _load(args.file)
    sys.stdout.write(lambda_matrix(S).to_csv())
    return digest, {"n": len(S)}


def cmd_remove_all(args):
    S, digest = _load(args.file)
    return digest, _emit_delta(args, batch_remove(S))


def cmd_add(args):
    S, digest = _load(args.file)
    C, _ = _load(args.candidates)
    return digest, _emit_delta(args, batch_add(S, C))


def cmd_move(args):
    S, digest = _load(args.file)
    C, _ = _load(args.candidates)
    if (args.index is None) == (args.point is None):
        raise CliError(EXIT_MEMBERSHIP, "give exactly one of INDEX or --point X Y")
    if args.point is not None:
        p = Point(*args.point)
    else:
        if not 0 <= args.index < len(S):
            raise CliError(EXIT_MEMBERSHIP, f"index {args.index} out of range for n={len(S)}")
        p = S[args.index]
    return digest, _emit_delta(args, batch_move(S, p, C))


def cmd_optimize(args):
    S, digest = _load(args.file)
    cfg = OptimizerConfig(seed=args.seed, rounds=args.rounds, radius=args.radius,
                          candidates_per_round=args.candidates,
                          coordinate_bound=args.bound, accept_equal=not args.strict,
                          pick_rule=args.pick, stagnation=args.stagnation)
    prefix = args.out or args.file
    trace_path = Path(f"{prefix}.trace")
    with trace_path.open("w", encoding="ascii") as fh:
        trace = optimize_move(S, cfg, on_round=lambda r: fh.write(r.to_json() + "\n"))
    write_points(f"{prefix}.best", trace.best_set,
                 header=f"n={len(trace.best_set)} cr={trace.best_cr} seed={cfg.seed}")
    out = {"n": len(S), "initial_cr": trace.initial_cr, "cr": trace.best_cr,
           "rounds": len(trace.records), "interrupted": trace.interrupted}
    print(json.dumps(out) if args.json else
          f"n={len(S)} cr={trace.best_cr} (from {trace.initial_cr}, {len(trace.records)} rounds)")
    return digest, out


def cmd_bench(args):
    sizes = [int(v) for v in args.sizes.split(",")]
    ops = tuple(args.ops.split(","))
    rows = bench.run(sizes, trials=args.trials, ops=ops, seed=args.seed, backend=args.backend)
    csv = bench.to_csv(rows)
    if args.csv:
        Path(args.csv).write_text(csv, encoding="ascii")
    else:
        sys.stdout.write(csv)
    summary = {}
    if len(sizes) >= 2:
        summary["slopes"] = {op: bench.loglog_slope(rows, op) for op in ops}
    if "cr" in ops and "batch_add" in ops:
        summary["amortized_ratio"] = bench.amortized_ratios(rows)
    for op, slope in summary.get("slopes", {}).items():
        print(f"# slope {op}: {slope:.3f}", file=sys.stderr)
    for n, r in summary.get("amortized_ratio", {}).items():
        print(f"# amortized ratio n={n}: {r:.2f}", file=sys.stderr)
    return None, summary


def build_parser():
    ap = argparse.ArgumentParser(prog="rectcross", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="line-delimited JSON output")
    ap.add_argument("--artifact", metavar="PATH",
                    help="write a JSON run record (input digest, config, results, timing)")
    ap.add_argument("--backend", choices=sorted(_backend.AVAILABLE),
                    help="kernel implementation (default: compiled if available)")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cr", help="crossing number via the lambda-matrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_cr)

    p = sub.add_parser("oracle", help="crossing number by brute force over 4-subsets")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=400, help="refuse larger inputs (default 400)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("lambda", help="dump the lambda-matrix as CSV")
    p.add_argument("file")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("remove-all", help="cr after removing each point")
    p.add_argument("file")
    p.set_defaults(func=cmd_remove_all)

    p = sub.add_parser("add", help="cr after adding each candidate")
    p.add_argument("file")
    p.add_argument("candidates")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("move", help="cr after moving one point to each candidate")
    p.add_argument("file")
    p.add_argument("index", type=int, nargs="?", help="0-based position of the point in FILE")
    p.add_argument("candidates")
    p.add_argument("--point", type=int, nargs=2, metavar=("X", "Y"),
                   help="select the point by coordinates instead of INDEX")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("optimize", help="hill-climb single-point moves")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=1000)
    p.add_argument("--radius", type=int, default=8)
    p.add_argument("--candidates", type=int, default=32, help="candidates per round")
    p.add_argument("--bound", type=int, default=OptimizerConfig.coordinate_bound,
                   help="max |x|, |y| of candidates")
    p.add_argument("--strict", action="store_true", help="accept strict improvements only")
    p.add_argument("--pick", choices=("random", "round-robin"), default="random")
    p.add_argument("--stagnation", type=int, default=None,
                   help="stop after this many rounds without strict improvement")
    p.add_argument("--out", help="output prefix (default: the input path)")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("bench", help="time full recompute against the batch evaluators")
    p.add_argument("--sizes", default="256,512,1024,2048,4096")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--ops", default=",".join(bench.OPS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.backend and args.command != "bench":
        _backend.use(args.backend)
    t0 = time.perf_counter()
    try:
        digest, results = args.func(args)
    except CliError as e:
        print(f"rectcross: {e}", file=sys.stderr)
        return e.code
    except GeometryError as e:
        print(f"rectcross: general position violated: {e}", file=sys.stderr)
        return EXIT_GEOMETRY
    except (OverlapError, NotAMember) as e:
        print(f"rectcross: {e}", file=sys.stderr)
        return EXIT_MEMBERSHIP
    if args.artifact:
        config = {k: v for k, v in vars(args).items() if k not in ("func", "artifact")}
        record = {"input_sha256": digest, "command": args.command, "config": config,
                  "results": results, "backend": _backend.current(),
                  "wall_seconds": time.perf_counter() - t0}
        Path(args.artifact).write_text(json.dumps(record, indent=2, default=str) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
