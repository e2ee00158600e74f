#!/usr/bin/env python3
"""Emit every standard cohomology table as markdown.

Covers the four preset slices at spacetime dimension 4 (plus the circle
slice at dimension 2) and both validated constant-curvature backgrounds of
the Killing complex.  Output is deterministic; redirect to a file to diff
against a previous run.
"""

import sys

from causalcoh.cli import main


def run(argv):
    code = main(argv)
    if code != 0:
        raise SystemExit(code)
    print()


if __name__ == "__main__":
    models = [
        ("sphere", 3, 4),
        ("torus", 3, 4),
        ("euclidean", 3, 4),
        ("sphere", 1, 2),
    ]
    for preset, m, n in models:
        run(["derham", "--preset", preset, "--m", str(m), "--n", str(n), "--format", "md"])
    for background in ("minkowski4", "deSitter4"):
        run(["calabi", "--background", background, "--format", "md"])
    sys.exit(0)
