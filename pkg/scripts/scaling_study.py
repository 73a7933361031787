#!/usr/bin/env python3
"""Run the scaling benchmark suites and write one CSV per suite.

Times the randomized detector as the run-count parameter r and the string
length n grow. Results land in --out-dir (default results/), one file per
suite, fully reproducible from --seed.
"""

import argparse
import sys
import time
from pathlib import Path

from lrskit import GenSpec, gen_string, mld_decide, records_to_csv, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--reps", type=int, default=5)
    parser.add_argument("--parallel", action="store_true")
    parser.add_argument(
        "--suites", nargs="+", default=["scaling-r", "scaling-n"],
        choices=["scaling-r", "scaling-n", "dp-vs-mld"],
    )
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    # compile/load the jitted kernel outside any timed region
    mld_decide(gen_string(GenSpec(n=10, sigma=4, seed=0)), 2, 2, trials=1, seed=0)

    for suite in args.suites:
        t0 = time.perf_counter()
        records = run_suite(suite, seed=args.seed, reps=args.reps, parallel=args.parallel)
        wall = time.perf_counter() - t0
        path = out_dir / f"{suite}.csv"
        path.write_text(records_to_csv(records, suite, args.seed))
        print(f"{suite}: {len(records)} rows in {wall:.1f}s -> {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
