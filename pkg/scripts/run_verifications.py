#!/usr/bin/env python3
"""Run every verification suite at full strength and print a summary.

This is the slow, thorough counterpart of ``causalcoh verify``: the
homology suite at 200 cases, the forms suite at 50 forms per background,
the young suite, and the identity battery at 20 fields per level on both
backgrounds (several minutes of exact arithmetic).  Exits nonzero if any
check fails.
"""

import sys
import time

from causalcoh.verify import run_calabi_suite, run_forms_suite, run_homology_suite, run_young_suite


def report(rep):
    status = "ok" if rep.all_passed else "FAILED"
    print(f"{rep.suite:10s} {len(rep.items):4d} checks  {status}")
    for item in rep.failures():
        print(f"    FAIL: {item.name} {item.detail}")
    return rep.all_passed


def main() -> int:
    t0 = time.perf_counter()
    ok = True
    ok &= report(run_homology_suite(seed=2026, cases=200))
    ok &= report(run_forms_suite(seed=2026, cases=50, degree=3))
    ok &= report(run_young_suite())
    for background in ("minkowski4", "deSitter4"):
        print(f"calabi identity battery on {background} (takes a while) ...")
        ok &= report(run_calabi_suite(background, seed=42, degree=2, cases=20))
    print(f"total {time.perf_counter() - t0:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
