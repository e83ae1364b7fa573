#!/usr/bin/env python3
"""Run the theorem-check suites over the exhaustive small-graph corpus.

Example:
    python scripts/theorem_sweep.py --max-n 6 --jobs 2
    python scripts/theorem_sweep.py --suite forts --suite ip --max-n 7 --jobs 8
"""
import argparse
import sys
import time

from zfpoly.sweeps import SUITES, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", action="append", choices=SUITES,
                        help="suite to run (repeatable; default: every named suite)")
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    suites = args.suite or [s for s in SUITES if s != "all"]
    print(f"{'suite':<18} {'checked':>10} {'failures':>9} {'warnings':>9} {'seconds':>9}")
    print("-" * 60)
    worst = 0
    t0 = time.time()
    for suite in suites:
        report = run_suite(suite, max_n=args.max_n, seed=args.seed, jobs=args.jobs)
        print(f"{suite:<18} {report['graphs_checked']:>10} {len(report['failures']):>9} "
              f"{len(report['warnings']):>9} {report['elapsed_s']:>9.1f}")
        for rec in report["failures"][:10]:
            print(f"    FAIL {rec['check']}: n={rec['n']} graph={rec['graph']} {rec['detail']}")
        for rec in report["warnings"][:10]:
            print(f"    WARN {rec['check']}: n={rec['n']} graph={rec['graph']} {rec['detail']}")
        worst = max(worst, len(report["failures"]))
    print("-" * 60)
    print(f"total {time.time() - t0:.1f}s; {'ALL CLEAN' if worst == 0 else 'FAILURES FOUND'}")
    return 0 if worst == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
