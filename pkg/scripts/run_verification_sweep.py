#!/usr/bin/env python3
"""Sweep every cataloged family: braid equation, metadata claims, conjugations.

Each family is built at seeded parameter samples for every sign variant; the
declared equation check and all four metadata checks must pass. Known
conjugation pairs are revalidated, and the Kronecker-factorization test runs
on both a known product and the cataloged non-product solutions.
"""

import argparse
import sys
import time

import numpy as np

from polybraid import braid, catalog
from polybraid.matrices import kron


def sweep_families(samples: int, seed: int, tol: float) -> list[str]:
    failures = []
    for fid in catalog.family_ids():
        fam = catalog.get_family(fid)
        variants = fam.variants or (None,)
        t0 = time.perf_counter()
        worst = 0.0
        ok = True
        n_draws = 0
        for variant in variants:
            draws = (
                catalog.sample_params(fid, count=samples, seed=seed, variant=variant)
                if fam.parameters
                else [{}]
            )
            n_draws = len(draws)
            for params in draws:
                if fam.equation != "none":
                    if not catalog.declared_equation_passes(fid, params, variant, tol):
                        ok = False
                        failures.append(f"{fid} [{variant}] braid equation failed at {params}")
                    m = catalog.build(fid, params, variant)
                    if fam.equation == "partial-13":
                        worst = max(worst, braid.partial_ternary_residuals(m)[1])
                    else:
                        arity = catalog.family_arity(fid, params)
                        rep = braid.nary_braid_report(m, arity, tol)
                        worst = max(worst, max(rep.residuals))
                checks = catalog.verify_meta(fid, params, variant, tol)
                bad = [name for name, good in checks._asdict().items() if not good]
                if bad:
                    ok = False
                    failures.append(f"{fid} [{variant}] meta failed {bad} at {params}")
        dt = time.perf_counter() - t0
        print(
            f"{fid:18s} {'PASS' if ok else 'FAIL'}  "
            f"variants={len(variants)} samples={n_draws} "
            f"max_residual={worst:.3e} ({dt:.2f}s)"
        )
    return failures


def sweep_conjugations(samples: int, seed: int, tol: float) -> list[str]:
    failures = []
    for pair_id in catalog.CONJUGATION_PAIR_IDS:
        pair_ok = True
        for params in catalog.conjugation_sample_params(pair_id, count=samples, seed=seed):
            if not catalog.verify_conjugation(pair_id, params, tol):
                pair_ok = False
                failures.append(f"conjugation {pair_id} failed at {params}")
        print(f"conjugation {pair_id:16s} {'PASS' if pair_ok else 'FAIL'}")
    return failures


def sweep_kron(seed: int) -> list[str]:
    failures = []
    rng = np.random.default_rng(seed)

    q = np.array([[rng.normal(), 1.0], [rng.normal(), rng.normal()]], dtype=np.complex128)
    if not catalog.is_kron_product(kron(q, q)):
        failures.append("kron(q,q) not recognized as a Kronecker product")

    for fid in ("yb.tri9.v1", "yb.tri9.v2", "yb.tri9.v3", "yb.tri10"):
        params = catalog.sample_params(fid, count=1, seed=seed)[0]
        m = catalog.build(fid, params)
        if catalog.is_kron_product(m):
            failures.append(f"{fid} wrongly classified as a Kronecker product")
    print(f"kron factorization checks {'FAIL' if failures else 'PASS'}")
    return failures


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()

    t0 = time.perf_counter()
    failures = sweep_families(args.samples, args.seed, args.tol)
    failures += sweep_conjugations(args.samples, args.seed, args.tol)
    failures += sweep_kron(args.seed)
    print(f"total time {time.perf_counter() - t0:.1f}s")
    if failures:
        print(f"{len(failures)} failures:")
        for f in failures:
            print("  " + f)
        return 1
    print("all catalog checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
