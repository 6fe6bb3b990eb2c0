#!/usr/bin/env python3
"""Exhaustive class-pair sweeps over the built-in corpora.

Runs the size-p gap check and the square dichotomy over the odd corpora,
then the size-2 pair check over the 2-group corpus, all through the CLI
so the output records match what `classprod verify` would emit.

Usage: run_theorem_checks.py [--jobs N] [--out-dir DIR]
"""

import argparse
import pathlib
import sys

from classprod.cli import main

SWEEPS = [
    ("gap-p3", ["verify", "--theorem", "a", "--corpus", "--p", "3",
                "--max-order", "729"]),
    ("gap-p5", ["verify", "--theorem", "a", "--corpus", "--p", "5",
                "--max-order", "625"]),
    ("squares-p3", ["verify", "--theorem", "b", "--corpus", "--p", "3",
                    "--max-order", "729"]),
    ("squares-p5", ["verify", "--theorem", "b", "--corpus", "--p", "5",
                    "--max-order", "625"]),
    ("size2", ["verify", "--theorem", "size2", "--corpus", "--p", "2",
               "--max-order", "64"]),
]


def run(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out-dir", default=None,
                        help="write one jsonl file per sweep here")
    args = parser.parse_args(argv)

    worst = 0
    for name, cmd in SWEEPS:
        extra = ["--jobs", str(args.jobs)]
        if args.out_dir:
            out = pathlib.Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            extra += ["--out", str(out / f"{name}.jsonl")]
        print(f"== {name}", file=sys.stderr)
        code = main(cmd + extra)
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
