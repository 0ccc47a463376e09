"""Print the (p, l) choice and the cost base p^(l/(p-1)) for a range of r."""

import argparse
import time

from rspath.params import cost_base, select_field


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmax", type=int, default=11)
    args = ap.parse_args()
    t0 = time.perf_counter()
    print(f"{'r':>4} {'p':>6} {'l':>3} {'base':>8}")
    for r in range(1, args.rmax + 1):
        p, l = select_field(r)
        print(f"{r:>4} {p:>6} {l:>3} {cost_base(p, l):>8.4f}")
    print(f"# {time.perf_counter() - t0:.3f} s")


if __name__ == "__main__":
    main()
