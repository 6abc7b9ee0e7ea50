#!/usr/bin/env python3
"""Calibrate the constant C1 in |2 sqrt(n pi) Delta_n - 1| <= C1 / n.

Runs over exact Delta_n from the integer recurrence and prints the observed
maximum of n |ratio - 1|. The frozen value lives in hhht.analysis.ASYMPTOTIC_C1;
update it by hand only if this script reports a larger maximum.
"""

import argparse

from hhht import analysis


def main():
    lo, hi = analysis.CALIBRATION_RANGE
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--lo", type=int, default=lo)
    parser.add_argument("--hi", type=int, default=hi)
    args = parser.parse_args()

    c1, n_at = analysis.calibrate_c1(args.lo, args.hi)
    print(f"range           : {args.lo}..{args.hi}")
    print(f"max n|ratio - 1|: {c1:.9f} (at n = {n_at})")
    print(f"frozen C1       : {analysis.ASYMPTOTIC_C1}")
    print("status          :", "ok" if c1 <= analysis.ASYMPTOTIC_C1 else "frozen C1 too small")
    for rec in analysis.asymptotic_table([args.lo, 10 * args.lo, args.hi]):
        print(f"  n={rec.n:>6}  ratio={rec.ratio:.12f}  n*(ratio-1)={rec.n * (rec.ratio - 1):+.6f}")


if __name__ == "__main__":
    main()
