#!/usr/bin/env python3
"""Check every local relation family in random contexts, per (N|M) and family."""
import argparse
import random
from collections import Counter

from moyeval.relations import catalogue, check_relation, random_context
from moyeval.rt_oracle import eval_algebraic
from moyeval.state_sum import eval_dp


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--evaluator", choices=("dp", "algebraic"), default="dp")
    ap.add_argument("--max-sum", type=int, default=4)
    ap.add_argument("--contexts", type=int, default=3)
    ap.add_argument("--max-label", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    evaluate = eval_dp if args.evaluator == "dp" else eval_algebraic
    rng = random.Random(args.seed)
    total, failed = Counter(), Counter()
    for N in range(args.max_sum + 1):
        for M in range(args.max_sum + 1 - N):
            if not -1 <= N - M <= 3:
                continue
            for rel in catalogue(N, M, args.max_label):
                fam = rel.name.split("(")[0]
                for _ in range(args.contexts):
                    ctx = random_context(rng, rel.bottom)
                    for mirror in (False, True):
                        total[fam] += 1
                        if not check_relation(rel, ctx, evaluate, N, M, mirror=mirror):
                            failed[fam] += 1
                            print(f"FAIL {rel.name} at ({N}|{M}){' mirrored' if mirror else ''}")
    for fam in sorted(total):
        print(f"{fam:<20}{total[fam] - failed[fam]:>6}/{total[fam]}")
    print(f"all: {sum(total.values()) - sum(failed.values())}/{sum(total.values())}")


if __name__ == "__main__":
    main()
