"""Compare solver verdicts with the exact oracle on random instances."""

import argparse
import time
from collections import Counter

from rspath.generators import random_instance
from rspath.oracle import exists_r_simple_path
from rspath.solver import solve, verify_certificate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--kmax", type=int, default=9)
    ap.add_argument("--density", type=float, default=0.3)
    args = ap.parse_args()
    tally = Counter()
    t0 = time.perf_counter()
    for seed in range(args.count):
        k = args.r + seed % (args.kmax - args.r + 1)
        inst = random_instance(args.n, args.density, args.r, k, seed)
        truth = exists_r_simple_path(inst).answer
        v = solve(inst, seed=seed)
        if v.yes:
            assert verify_certificate(inst, v.certificate)
        tally[(truth, v.answer)] += 1
    for (truth, got), c in sorted(tally.items()):
        print(f"oracle={truth:<4} solver={got:<4} {c}")
    print(f"# {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
