#!/usr/bin/env python3
"""Run every worked-example reproduction for one prime and print the reports.

Usage: run_reproductions.py [p] [--cap N]

Defaults to p = 3.  Exit code 2 signals that some check recorded a
violation (the records are still printed), 1 a usage or size problem.
"""

import sys

from classprod.cli import main


def run(argv: list[str]) -> int:
    p = "3"
    rest = []
    for arg in argv:
        if arg.isdigit():
            p = arg
        else:
            rest.append(arg)
    return main(["reproduce", "--p", p, *rest])


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
