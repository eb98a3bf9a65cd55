#!/usr/bin/env python3
"""Timing comparison: permutation-sum solving vs fraction-free elimination.

The permutation sum touches n! terms per unknown, so the crossover against
cubic elimination is brutal and worth seeing once.  Results on random
integer systems; both solvers are exact and cross-checked on every run.

Example:
    python scripts/benchmark_solve.py --sizes 2,3,4,5,6,7,8 --repeats 5
"""

import argparse
import random
import time

from cramerkit import bareiss_det, bareiss_solve, rational_system, solve


def random_nonsingular(rng, n):
    while True:
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        rhs = [rng.randint(-9, 9) for _ in range(n)]
        sys = rational_system(rows, rhs)
        if bareiss_det(sys) != 0:
            return sys


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="2,3,4,5,6,7,8",
                        help="comma-separated system sizes")
    parser.add_argument("--repeats", type=int, default=5,
                        help="systems per size")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=9)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"{'n':>3} {'perm-sum ms':>14} {'bareiss ms':>12} {'ratio':>10}")
    for n in sizes:
        systems = [random_nonsingular(rng, n) for _ in range(args.repeats)]

        t0 = time.perf_counter()
        sums = [solve(s, max_n=args.max_n) for s in systems]
        perm_ms = (time.perf_counter() - t0) * 1000 / args.repeats

        t0 = time.perf_counter()
        elim = [bareiss_solve(s) for s in systems]
        bareiss_ms = (time.perf_counter() - t0) * 1000 / args.repeats

        for sol, expected in zip(sums, elim):
            assert sol.quotients == expected, "solver disagreement"
        ratio = perm_ms / bareiss_ms if bareiss_ms else float("inf")
        print(f"{n:>3} {perm_ms:>14.3f} {bareiss_ms:>12.3f} {ratio:>10.1f}")


if __name__ == "__main__":
    main()
