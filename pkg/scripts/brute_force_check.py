#!/usr/bin/env python3
"""Exhaustive cross-check at tiny orders: for each (n, e) pair, search all
connected graphs of order n and size n-1+e and report whether the unique
spectral-radius maximizer is the near-clique family.

Usage:
    python scripts/brute_force_check.py            # default pair set
    python scripts/brute_force_check.py 7 5        # one pair
"""

import json
import sys
import time

from rhomax.oracle import brute_force_max

DEFAULT_PAIRS = [(5, 4), (6, 4), (6, 5), (7, 4), (7, 5), (7, 6), (8, 4)]


def main() -> int:
    pairs = ([(int(sys.argv[1]), int(sys.argv[2]))]
             if len(sys.argv) == 3 else DEFAULT_PAIRS)
    ok = True
    for n, e in pairs:
        t0 = time.monotonic()
        res = brute_force_max(n, e)
        print(json.dumps(res.to_dict()),
              f"# {time.monotonic() - t0:.1f}s", file=sys.stdout)
        ok = ok and res.is_D and res.argmax_unique_iso
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
