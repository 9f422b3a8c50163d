#!/usr/bin/env python3
"""Build every feasible h-placement on a (delta, sigma) grid and tabulate k against its bound."""
import argparse
import csv
import sys
import time

from caterpack import verify
from caterpack.caterpillar import placement_exists
from caterpack.packing import halve_by_sides, place_copies


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--delta", type=int, nargs=2, default=(3, 8), metavar=("LO", "HI"))
    ap.add_argument("--sigma", type=int, nargs=2, default=(2, 6), metavar=("LO", "HI"))
    ap.add_argument("--halve", action="store_true", help="also report k after splitting drawings by side")
    args = ap.parse_args()

    w = csv.writer(sys.stdout)
    w.writerow(["delta", "sigma", "n", "h", "k", "bound"] + (["k_halved"] if args.halve else []))
    t0 = time.monotonic()
    for delta in range(args.delta[0], args.delta[1] + 1):
        for sigma in range(args.sigma[0], args.sigma[1] + 1):
            n = sigma * (delta - 1) + 2
            for h in range(1, n):
                if not placement_exists(delta, sigma, h):
                    continue
                layout = place_copies(delta, sigma, h)
                row = [delta, sigma, n, h, verify.k_of(layout, "sweep"), verify.bound_placement_crossings(delta, h)]
                if args.halve:
                    row.append(verify.k_of(halve_by_sides(layout), "sweep"))
                w.writerow(row)
    print(f"# {time.monotonic() - t0:.1f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
