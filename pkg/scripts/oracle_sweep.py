#!/usr/bin/env python3
"""Cross-check the Burau pipeline against the Fox-calculus oracle on random knot braids."""
import argparse
import random
import time

from knotsurgery.alexander import alexander, alexander_oracle
from knotsurgery.braid import Braid, closure_components, format_braid


def random_knot_braid(rng, max_strands, max_len):
    while True:
        n = rng.randint(1, max_strands)
        word = tuple((rng.randint(1, n - 1), rng.choice((1, -1)))
                     for _ in range(rng.randint(0, max_len))) if n > 1 else ()
        b = Braid(n, word)
        if closure_components(b) == 1:
            return b


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-n", "--count", type=int, default=500)
    parser.add_argument("--max-strands", type=int, default=5)
    parser.add_argument("--max-len", type=int, default=12)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = time.perf_counter()
    mismatches = 0
    for _ in range(args.count):
        b = random_knot_braid(rng, args.max_strands, args.max_len)
        burau, fox = alexander(b), alexander_oracle(b)
        if burau != fox:
            mismatches += 1
            print(f"MISMATCH {format_braid(b)}: burau={burau} fox={fox}")
    print(f"{args.count} braids, {mismatches} mismatches, {time.perf_counter() - start:.2f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
