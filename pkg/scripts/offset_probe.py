#!/usr/bin/env python3
"""How loose is the placement bound? Compare it with the best k over all admissible offset schedules."""
import argparse
import sys

from caterpack import verify
from caterpack.caterpillar import placement_exists
from caterpack.errors import ParameterError
from caterpack.oracle import min_k_over_offsets
from caterpack.packing import place_copies


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--max-h", type=int, default=3)
    args = ap.parse_args()

    print(f"{'delta':>5} {'sigma':>5} {'h':>2} {'k(0..h-1)':>9} {'best k':>6} {'bound':>5}  best offsets")
    for delta in range(2, 10):
        for sigma in range(2, 10):
            n = sigma * (delta - 1) + 2
            if n > args.max_n:
                continue
            for h in range(2, args.max_h + 1):
                if not placement_exists(delta, sigma, h):
                    continue
                try:
                    offs, best = min_k_over_offsets(delta, sigma, h)
                except ParameterError:
                    continue
                k = verify.k_of(place_copies(delta, sigma, h))
                bound = verify.bound_placement_crossings(delta, h)
                print(f"{delta:>5} {sigma:>5} {h:>2} {k:>9} {best:>6} {bound:>5}  {list(offs)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
