#!/usr/bin/env python3
"""Q_{N|1} of small braid closures for N = 1..3; at N = 1 this is the
Alexander polynomial (t = q^2), listed next to the value from the reduced
Burau matrix for comparison."""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from moyeval.link_calc import invariant_Q  # noqa: E402
from oracles import alexander  # noqa: E402

BRAIDS = {
    "unknot": ([], 1),
    "trefoil": ([1, 1, 1], 2),
    "figure-eight": ([1, -2, 1, -2], 3),
    "cinquefoil": ([1, 1, 1, 1, 1], 2),
    "hopf": ([1, 1], 2),
    "split": ([], 2),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-N", type=int, default=3)
    args = ap.parse_args()
    for name, (word, strands) in BRAIDS.items():
        print(f"{name}: braid {word} on {strands} strands")
        print(f"  Burau      {alexander(word, strands)}")
        for N in range(1, args.max_N + 1):
            print(f"  Q_{{{N}|1}}     {invariant_Q(word, strands, N)}")


if __name__ == "__main__":
    main()
