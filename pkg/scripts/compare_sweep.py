"""Row-count and complexity comparison tables for maximal-minor systems.

Emits the speedup CSV for a list of shapes, then qualitative sweeps in n and
d0 at fixed p (q = n + p - 1, the square-jacobian case) showing how the
predicted row savings and the complexity-estimate exponent gap evolve.
"""

import argparse
import math
import sys

sys.path.insert(0, __file__.rsplit("/", 2)[0] + "/src")

from detf5.hilbert import (
    SPEEDUP_HEADER,
    EstimatorParams,
    complexity_estimate,
    degree_bound_minors,
    lazard_bound,
    minors_row_totals,
    speedup_table,
)


def sweep(p, ns, d0s):
    print("n,d0,D,ratio_ours,ratio_fullrank,log10_complexity")
    for n in ns:
        q = n + p - 1
        for d0 in d0s:
            totals = minors_row_totals(n, p, q, d0)
            est = complexity_estimate(EstimatorParams(n=n, p=p, q=q, d0=d0))
            lg = math.log10(est) if est > 0 else float("-inf")
            print(
                f"{n},{d0},{degree_bound_minors(n, p, d0)},"
                f"{totals['ratio_ours']:.3f},{totals['ratio_fullrank']:.3f},{lg:.2f}"
            )


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--shapes", default="3,6,4,3;3,7,5,3", help="semicolon list p,q,n,d0")
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--sweep-n", default="4:7", help="lo:hi for the n sweep")
    ap.add_argument("--sweep-d0", default="2:5", help="lo:hi for the d0 sweep")
    args = ap.parse_args()

    shapes = []
    for part in args.shapes.split(";"):
        p, q, n, d0 = (int(x) for x in part.split(","))
        shapes.append((n, p, q, d0))
    print(SPEEDUP_HEADER)
    for line in speedup_table(shapes):
        print(line)
    print()

    lo, hi = (int(x) for x in args.sweep_n.split(":"))
    print(f"# sweep over n at p={args.p}, d0=3, q=n+p-1")
    sweep(args.p, range(lo, hi + 1), [3])
    print()
    lo, hi = (int(x) for x in args.sweep_d0.split(":"))
    print(f"# sweep over d0 at p={args.p}, n=4, q=n+p-1")
    sweep(args.p, [4], range(lo, hi + 1))


if __name__ == "__main__":
    main()
