#!/usr/bin/env python3
"""Q_{N|1} against the normalized colored Jones value at q = exp(i pi/(N+1)).

Prints one row per (knot, N): the exact verdict in the cyclotomic ring and
both sides as complex numbers (display only).
"""
import argparse
import time

from moyeval.link_calc import kashaev_check

KNOTS = {
    "unknot": ([], 1),
    "trefoil": ([1, 1, 1], 2),
    "figure-eight": ([1, -2, 1, -2], 3),
    "cinquefoil": ([1, 1, 1, 1, 1], 2),
    "three-twist": ([1, 1, 1, 2, -1, 2], 3),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-N", type=int, default=3)
    ap.add_argument("--knots", nargs="*", default=list(KNOTS), choices=list(KNOTS))
    args = ap.parse_args()

    print(f"{'knot':<14}{'N':>3}  {'verdict':<9}{'lhs':>28}{'rhs':>28}{'secs':>8}")
    for name in args.knots:
        word, strands = KNOTS[name]
        for N in range(1, args.max_N + 1):
            t = time.perf_counter()
            res = kashaev_check(word, strands, N)
            lhs, rhs = res.lhs.value(), res.rhs.value()
            print(f"{name:<14}{N:>3}  {'equal' if res.equal else 'DIFFER':<9}"
                  f"{lhs.real:>14.9f}{lhs.imag:+.9f}i{rhs.real:>14.9f}{rhs.imag:+.9f}i"
                  f"{time.perf_counter() - t:>8.2f}")


if __name__ == "__main__":
    main()
