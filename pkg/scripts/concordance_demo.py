#!/usr/bin/env python3
"""Product vs slice-sum self-concordances of K # -K acting on sample SW data.

For each bundled knot, surgery along the product concordance multiplies SW by
Delta_K^2, while the slice-disc sum gives back the original manifold.
"""
from knotsurgery.alexander import alexander
from knotsurgery.swcalc import Concordance, SWInvariant, TorusClass, concordance_surgery, sw_equal
from knotsurgery.table import bundled_table

# Rank-2 toy data: basic classes ±e2, torus along e1.
SW = SWInvariant(2, {(0, 1): 1, (0, -1): 1})
TORUS = TorusClass((1, 0), ((0, 1), (1, 0)))


def verdict(out):
    return "UNCHANGED" if sw_equal(out, SW) else "CHANGED"


def main():
    print(f"{'knot':<14}{'Delta':<36}{'product':<12}{'slice-sum':<12}support")
    for name, b in bundled_table():
        prod = concordance_surgery(SW, TORUS, b, Concordance.PRODUCT)
        sl = concordance_surgery(SW, TORUS, b, Concordance.SLICE_SUM)
        print(f"{name:<14}{str(alexander(b)):<36}{verdict(prod):<12}{verdict(sl):<12}"
              f"{len(SW)} -> {len(prod)}")


if __name__ == "__main__":
    main()
