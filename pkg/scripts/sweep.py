#!/usr/bin/env python3
"""Write a CSV of N_d(k) per type, with sign, n, prediction and timing.

    python3 scripts/sweep.py --d 4 --k-max 20 --out sweep_d4.csv
"""
import argparse
import csv
import sys
import time

from localp1.enumeration import compositions, count_type
from localp1.predictions import bps_closed_form, sign_and_dimension


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k-min", type=int, default=-1)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--out", default="-")
    args = p.parse_args(argv)
    types = [str(t) for t in compositions(args.d)]
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["d", "k"] + types + ["N", "sign", "n", "prediction", "match", "elapsed_ms"])
    bad = 0
    for k in range(args.k_min, args.k_max + 1):
        t0 = time.perf_counter()
        counts = [count_type(t, k) for t in compositions(args.d)]
        ms = round((time.perf_counter() - t0) * 1000)
        N = sum(counts)
        sign = sign_and_dimension(args.d, k)[0]
        pred = bps_closed_form(args.d, k)
        bad += sign * N != pred
        w.writerow([args.d, k] + counts + [N, sign, sign * N, pred, str(sign * N == pred).lower(), ms])
        fh.flush()
    if fh is not sys.stdout:
        fh.close()
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
