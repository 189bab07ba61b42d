#!/usr/bin/env python3
"""Search small loops for GF(2) loop rings that are right but not left
alternative.

Such loops exist (the classical example is not even right Bol) but none
occur at order <= 5; this scan reports any that appear among the
normalized loops of the requested orders.  Findings are data, nothing is
asserted.

Usage:
  python scripts/find_right_not_left_alternative.py --max-order 6
"""

import argparse
import sys
import time

from loopkit import RingIdentityId, enumerate_loops, ring_identity_check
from loopkit.catalog import emit_record


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=6, choices=range(2, 8))
    args = ap.parse_args()

    found = 0
    for n in range(2, args.max_order + 1):
        t0 = time.time()
        hits = []

        def visit(loop):
            if ring_identity_check(loop, RingIdentityId.RIGHT_ALTERNATIVE) is None:
                if ring_identity_check(loop, RingIdentityId.LEFT_ALTERNATIVE) is not None:
                    hits.append(loop)

        total = enumerate_loops(n, visit)
        for i, loop in enumerate(hits, 1):
            sys.stdout.write("\n" + emit_record(f"right-not-left.{n}.{i}", loop))
        print(f"order {n}: {len(hits)} of {total} loops "
              f"have a right- but not left-alternative ring  [{time.time() - t0:.1f}s]")
        found += len(hits)
    print(f"total found: {found}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
