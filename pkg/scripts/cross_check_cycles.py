#!/usr/bin/env python3
"""Compare the class-aggregated counts of the cycle types (1,2,1) and (2,2)
with the explicit per-matrix orbit count."""
import argparse
import time

from localp1.enumeration import count_type_121, count_type_22
from localp1.validation import explicit_cycle_count


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k-max", type=int, default=5)
    args = p.parse_args(argv)
    ok = True
    for k in range(-1, args.k_max + 1):
        for rows, fast in (((1, 2, 1), count_type_121), ((2, 2), count_type_22)):
            t0 = time.perf_counter()
            slow = explicit_cycle_count(rows, k)
            same = slow == fast(k)
            ok &= same
            print(f"k={k:3d} {str(rows):10} explicit={slow:8d} production={fast(k):8d} "
                  f"{'ok' if same else 'MISMATCH'}  {time.perf_counter() - t0:.1f} s")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
