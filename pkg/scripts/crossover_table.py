#!/usr/bin/env python3
"""Emit the crossover table (e, k, t, b, psi, omega, regime) as CSV.

Usage:
    python scripts/crossover_table.py 4..130 > crossover.csv
"""

import sys

from rhomax.cli import main as cli_main

if __name__ == "__main__":
    e_range = sys.argv[1] if len(sys.argv) > 1 else "4..130"
    sys.exit(cli_main(["table", "--e", e_range, "--format", "csv"]))
