#!/usr/bin/env python3
"""Regenerates the built-in SAX breakpoint tables in src/sax.cpp.

Each cardinality |A| gets the |A|-1 quantiles of N(0,1) at k/|A|, so the
area between consecutive breakpoints is exactly 1/|A|. The lower half is
mirrored onto the upper half to keep the table exactly symmetric.
"""

from scipy.stats import norm


def breakpoints(cardinality: int) -> list[float]:
    half = [norm.ppf(k / cardinality) for k in range(1, (cardinality + 1) // 2)]
    mid = [0.0] if cardinality % 2 == 0 else []
    return half + mid + [-q for q in reversed(half)]


if __name__ == "__main__":
    for a in range(2, 11):
        values = ", ".join(f"{q:.17g}" for q in breakpoints(a))
        print(f"    case {a}:\n      return {{{values}}};")
