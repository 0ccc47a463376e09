"""Black-box evaluations against k on a NO instance (directed path), r = 2."""

import argparse
import time

from rspath.graph import Digraph, Instance
from rspath.solver import solve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--ks", default="8,10,12,14")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    g = Digraph(args.n, frozenset((v, v + 1) for v in range(args.n - 1)))
    prev = None
    print("k,t_sub,answer,evals,ratio,seconds")
    for k in map(int, args.ks.split(",")):
        t0 = time.perf_counter()
        v = solve(Instance(g, args.r, k), seed=args.seed)
        ratio = f"{v.evaluations / prev:.3f}" if prev else ""
        print(f"{k},{v.params.t_sub},{v.answer},{v.evaluations},{ratio},{time.perf_counter() - t0:.2f}")
        prev = v.evaluations


if __name__ == "__main__":
    main()
