#!/usr/bin/env python3
"""Exhaustive permutation searches, matched entrywise against the catalog.

Binary: all 4! = 24 permutation matrices against the 2-ary equation.
Ternary: all 8! = 40320 permutation matrices against the full 3-ary system.
Every match must be bit-identical to a cataloged permutation family build,
and every cataloged permutation family must be found.
"""

import sys
import time

import numpy as np

from polybraid import catalog
from polybraid.search import SearchSpec, permutation_search

BINARY_FAMILIES = [
    ("yb.perm.bisymm", "first"),
    ("yb.perm.bisymm", "second"),
    ("yb.perm.circ", "first"),
    ("yb.perm.circ", "second"),
]

TERNARY_FAMILIES = [
    ("tb.perm.bisymm1", None),
    ("tb.perm.bisymm2", None),
    ("tb.perm.symm1", None),
    ("tb.perm.symm2", None),
]


def match_catalog(found, expected) -> list[str]:
    failures = []
    labels = []
    for fid, variant in expected:
        m = np.asarray(catalog.build(fid, variant=variant))
        hits = [i for i, f in enumerate(found) if np.array_equal(np.asarray(f), m)]
        tag = f"{fid}[{variant}]" if variant else fid
        if len(hits) != 1:
            failures.append(f"{tag}: {len(hits)} bit-identical matches in search output")
        else:
            labels.append((hits[0], tag))
    if len(found) != len(expected):
        failures.append(f"{len(found)} matches found, {len(expected)} cataloged")
    for idx, tag in sorted(labels):
        print(f"    match {idx}: {tag}")
    return failures


def main() -> int:
    failures = []

    spec2 = SearchSpec(space="permutations", dim=4, arity=2)
    t0 = time.perf_counter()
    res2 = permutation_search(spec2)
    dt2 = time.perf_counter() - t0
    print(
        f"binary dim=4: {res2.match_count} of {res2.candidate_count} "
        f"candidates pass ({dt2:.3f}s)"
    )
    failures += match_catalog(res2.matrices, BINARY_FAMILIES)

    spec3 = SearchSpec(space="permutations", dim=8, arity=3)
    t0 = time.perf_counter()
    res3 = permutation_search(spec3)
    dt3 = time.perf_counter() - t0
    print(
        f"ternary dim=8: {res3.match_count} of {res3.candidate_count} "
        f"candidates pass ({dt3:.1f}s)"
    )
    failures += match_catalog(res3.matrices, TERNARY_FAMILIES)

    for eq in ("partial-12", "partial-13", "partial-23"):
        spec = SearchSpec(space="permutations", dim=8, arity=3, equation=eq)
        res = permutation_search(spec)
        print(f"ternary dim=8 {eq}: {res.match_count} matches")

    if failures:
        for f in failures:
            print("FAIL " + f)
        return 1
    print("search results match the catalog exactly")
    return 0


if __name__ == "__main__":
    sys.exit(main())
