#!/usr/bin/env python3
"""Tally the eta spectrum over a corpus and print the merged record.

Usage: run_spectrum.py P MAX_ORDER [--jobs N] [--format csv] [--out PATH]

Example: run_spectrum.py 3 243
"""

import sys

from classprod.cli import main


def run(argv: list[str]) -> int:
    if len(argv) < 2 or not (argv[0].isdigit() and argv[1].isdigit()):
        print(__doc__.strip(), file=sys.stderr)
        return 1
    p, max_order, *rest = argv
    return main(["spectrum", "--p", p, "--max-order", max_order, *rest])


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
