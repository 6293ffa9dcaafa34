"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/compare_backends.py --sizes 32,64,128,256 --trials 3
"""
import argparse

from rectcross import _backend, bench


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="32,64,128,256")
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--csv", help="also write n,op,trial,nanos rows per backend to PREFIX-<backend>.csv")
    args = ap.parse_args()
    sizes = [int(v) for v in args.sizes.split(",")]

    med = {}
    for name in sorted(_backend.AVAILABLE):
        rows = bench.run(sizes, trials=args.trials, backend=name)
        med[name] = bench.medians(rows)
        if args.csv:
            with open(f"{args.csv}-{name}.csv", "w") as fh:
                fh.write(bench.to_csv(rows))
    if "cython" not in med:
        print("compiled kernels not built; only the python backend was timed")

    print(f"{'n':>6} {'op':>13} " + " ".join(f"{b + ' ms':>12}" for b in sorted(med))
          + ("  speedup" if len(med) == 2 else ""))
    for n in sizes:
        for op in bench.OPS:
            times = [med[b][(n, op)] / 1e6 for b in sorted(med)]
            line = f"{n:>6} {op:>13} " + " ".join(f"{t:12.2f}" for t in times)
            if len(times) == 2:
                line += f"  {times[1] / times[0]:7.1f}x"
            print(line)
    for b in sorted(med):
        if len(sizes) >= 2:
            rows = [(n, op, 0, t) for (n, op), t in med[b].items()]
            slopes = ", ".join(f"{op} {bench.loglog_slope(rows, op):.2f}" for op in bench.OPS)
            print(f"log-log slopes [{b}]: {slopes}")


if __name__ == "__main__":
    main()
