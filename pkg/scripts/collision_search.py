#!/usr/bin/env python3
"""Search for knots the surgery formula cannot tell apart.

Enumerates short braid words, computes Delta for each, and reports every
Alexander polynomial shared by several words.  Words are deduplicated up to
mirror and reverse only; Markov moves are not quotiented out, so a group may
contain several words for the same knot.
"""
import argparse
import itertools
from collections import defaultdict

from knotsurgery.alexander import alexander
from knotsurgery.braid import Braid, closure_components, format_braid, minus, mirror, reverse


def words(strands, length):
    letters = [(i, s) for i in range(1, strands) for s in (1, -1)]
    for word in itertools.product(letters, repeat=length):
        if any(a[0] == b[0] and a[1] == -b[1] for a, b in zip(word, word[1:])):
            continue
        yield Braid(strands, word)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--strands", type=int, default=3)
    parser.add_argument("--max-len", type=int, default=6)
    parser.add_argument("--show", type=int, default=10, help="groups to print")
    args = parser.parse_args()

    groups = defaultdict(list)
    seen = set()
    for length in range(args.max_len + 1):
        for b in words(args.strands, length):
            if closure_components(b) != 1 or b in seen:
                continue
            seen.update({b, mirror(b), reverse(b), minus(b)})
            groups[alexander(b)].append(b)

    shared = sorted(((d, bs) for d, bs in groups.items() if len(bs) > 1),
                    key=lambda g: (-len(g[1]), str(g[0])))
    print(f"{len(seen)} braids (up to mirror/reverse), {len(groups)} distinct Delta, "
          f"{len(shared)} shared")
    for d, bs in shared[:args.show]:
        print(f"{d}  [{len(bs)}]  e.g. {format_braid(bs[0])} | {format_braid(bs[1])}")


if __name__ == "__main__":
    main()
