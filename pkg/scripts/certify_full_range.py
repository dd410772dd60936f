#!/usr/bin/env python3
"""Long-run certification over the full proven surplus range (4..130).

Desk-scale CI runs stop at e=30 (see the acceptance tests); this wrapper
drives the same pipeline over everything up to 130 with parallel workers
and periodic progress. Expect hours at the top end.

Usage:
    python scripts/certify_full_range.py [--e-max 130] [--jobs N] \
        [--out certificates-full]

Exit code 0 if every surplus certifies, 2 on any verification failure.
"""

import argparse
import os
import sys

from rhomax.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--e-min", type=int, default=4)
    ap.add_argument("--e-max", type=int, default=130)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--out", default="certificates-full")
    args = ap.parse_args()
    return cli_main([
        "certify",
        "--e", f"{args.e_min}..{args.e_max}",
        "--jobs", str(args.jobs),
        "--out", args.out,
    ])


if __name__ == "__main__":
    sys.exit(main())
