#!/usr/bin/env python3
"""Regenerate the OEIS b-file fixtures under crates/core/fixtures/.

Values are computed straight from the sequence definitions with Python
integers (sorting, popcount, math.comb, math.factorial), so they do not
share any code path with the Rust implementation they validate.

Terms longer than 1000 digits are not written, following the OEIS b-file
convention.
"""

import math
import os
import sys

MAX_DIGITS = 1000
OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "fixtures")


def popcount(x):
    return bin(x).count("1")


def a294648(max_row):
    # Rows n = 0, 1, ...: serials 0..2^n-1 sorted by (weight, serial).
    for n in range(max_row + 1):
        yield from sorted(range(1 << n), key=lambda s: (popcount(s), s))


def a305860(max_row):
    # Row n, column k: the 2^n-bit characteristic vector of weight-k serials,
    # read with serial 0 as the most significant bit.
    for n in range(max_row + 1):
        size = 1 << n
        for k in range(n + 1):
            value = 0
            for s in range(size):
                value <<= 1
                if popcount(s) == k:
                    value |= 1
            yield value


def a051459(terms):
    for n in range(terms):
        p = 1
        for k in range(n + 1):
            p *= math.factorial(math.comb(n, k))
        yield p


def a001142(terms):
    for n in range(terms):
        p = 1
        for k in range(n + 1):
            p *= math.comb(n, k)
        yield p


def a000142(terms):
    for n in range(terms):
        yield math.factorial(n)


def a000120(terms):
    for n in range(terms):
        yield popcount(n)


def write(seq_id, title, values):
    path = os.path.join(OUT, "b%s.txt" % seq_id[1:])
    lines = ["# %s: %s" % (seq_id, title), "# Generated by scripts/gen_fixtures.py"]
    for index, value in enumerate(values):
        text = str(value)
        if len(text) > MAX_DIGITS:
            break
        lines.append("%d %s" % (index, text))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print("%s: %d terms" % (path, len(lines) - 2), file=sys.stderr)


def main():
    os.makedirs(OUT, exist_ok=True)
    write("A294648", "Weight-lexicographic order of the Boolean cube, rows n >= 0", a294648(12))
    write("A305860", "Serial numbers of the layer characteristic vectors, rows n >= 0", a305860(12))
    write("A051459", "Product of binomial(n,k)! for k = 0..n", a051459(20))
    write("A001142", "Product of binomial(n,k) for k = 0..n", a001142(20))
    write("A000142", "Factorial numbers n!", a000142(20))
    write("A000120", "Number of 1's in binary expansion of n", a000120(1 << 12))


if __name__ == "__main__":
    main()
