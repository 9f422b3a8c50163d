#!/usr/bin/env python3
"""Table of the three-copy 2-planar construction over delta 4..7 and a range of spine lengths."""
import argparse
import sys
import time

from caterpack import verify
from caterpack.errors import ConstructionError
from caterpack.packing import place_three_2planar


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sigma-max", type=int, default=8)
    ap.add_argument("--budget", type=int, default=100_000, help="node budget of the delta=7 search")
    args = ap.parse_args()

    print(f"{'delta':>5} {'sigma':>5} {'n':>4} {'k':>3}  status")
    for delta in (4, 5, 6, 7):
        for sigma in range(2, args.sigma_max + 1):
            n = sigma * (delta - 1) + 2
            t0 = time.monotonic()
            try:
                layout = place_three_2planar(delta, sigma, node_budget=args.budget)
            except ConstructionError as exc:
                print(f"{delta:>5} {sigma:>5} {n:>4} {'-':>3}  {exc} [{time.monotonic() - t0:.1f}s]")
                continue
            k = verify.k_of(layout)
            print(f"{delta:>5} {sigma:>5} {n:>4} {k:>3}  certified [{time.monotonic() - t0:.1f}s]")
    return 0


if __name__ == "__main__":
    sys.exit(main())
