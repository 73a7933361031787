#!/usr/bin/env python3
"""Measure the randomized detector's error rates against the exact DP.

For a corpus of random instances, compares the detector's verdict on every
(r, k) pair with the feasibility derived from the exact per-run-count
profile. The detector is one-sided: false positives indicate a bug, false
negatives are expected at roughly (1 - 0.28)^trials per feasible pair.
"""

import argparse
import sys
import time

import numpy as np

from lrskit import GenSpec, gen_string, mld_verdict_grid, solve_subset_dp


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--n-max", type=int, default=14)
    parser.add_argument("--sigma-max", type=int, default=4)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    feasible_total = 0
    false_pos = 0
    false_neg = 0
    t0 = time.perf_counter()
    for idx in range(args.instances):
        n = int(rng.integers(1, args.n_max + 1))
        sigma = int(rng.integers(1, min(n, args.sigma_max) + 1))
        inst = gen_string(GenSpec(n=n, sigma=sigma, seed=int(rng.integers(1 << 30))))
        _, profile = solve_subset_dp(inst)
        feasible = {
            (r, k)
            for r in range(1, inst.alphabet_size + 1)
            for k in range(r, profile[r] + 1)
        }
        feasible_total += len(feasible)
        grid = mld_verdict_grid(inst, trials=args.trials, seed=args.seed + idx)
        for pair, verdict in grid.items():
            if verdict and pair not in feasible:
                false_pos += 1
            elif not verdict and pair in feasible:
                false_neg += 1
    wall = time.perf_counter() - t0
    fn_rate = false_neg / feasible_total if feasible_total else 0.0
    print(f"instances {args.instances}  trials {args.trials}  feasible pairs {feasible_total}")
    print(f"false positives {false_pos}")
    print(f"false negatives {false_neg}  rate {fn_rate:.4%}")
    print(f"wall {wall:.1f}s")
    return 1 if false_pos else 0


if __name__ == "__main__":
    sys.exit(main())
