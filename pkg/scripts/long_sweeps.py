#!/usr/bin/env python3
"""Run the long verification tiers.

Covers what `loopkit sweep --long` gates: the order-6 ring right Bol
equivalence over all 9408 loops and the order-7 odd-order associativity
sweep over all 16 942 080 loops.  Order 7 takes tens of minutes even
with several workers.

Usage:
  python scripts/long_sweeps.py --jobs 4
  python scripts/long_sweeps.py --jobs 8 --skip-order7
"""

import argparse
import sys
import time

from loopkit import SweepSpec, render_sweep, run_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=4)
    ap.add_argument("--skip-ring6", action="store_true")
    ap.add_argument("--skip-order7", action="store_true")
    args = ap.parse_args()

    failures = 0
    tiers = []
    if not args.skip_ring6:
        tiers.append(SweepSpec((6,), ("srar_ring_equiv",)))
    if not args.skip_order7:
        tiers.append(SweepSpec((7,), ("odd_order_associative",)))
    for spec in tiers:
        t0 = time.time()
        result = run_sweep(spec, jobs=args.jobs)
        sys.stdout.write(render_sweep(result, "text").decode())
        print(f"  [{time.time() - t0:.1f}s]")
        failures += result.total_violations()
    return 2 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
