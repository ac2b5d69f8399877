"""Run the seeded invariant battery and write the JSON summary."""
import argparse
import sys
import time
from pathlib import Path

from trivec.checks import SelftestConfig, run_selftest
from trivec.io import dumps


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", type=Path, default=None)
    args = p.parse_args()

    t0 = time.perf_counter()
    summary = run_selftest(SelftestConfig(seed=args.seed, count=args.count, workers=args.workers))
    elapsed = time.perf_counter() - t0
    for name, s in summary["suites"].items():
        print(f"{name:>20}  {s['checked'] - s['failed']:>5}/{s['checked']:<5} worst {s['worst']:.2e}  tol {s['tol']:.0e}")
    print(f"{'passed' if summary['passed'] else 'FAILED'} in {elapsed:.1f}s")
    if args.out:
        args.out.write_text(dumps(summary) + "\n")
    return 0 if summary["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
