#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure numpy fallback.

Workloads mirror the two hot paths: Cayley-table construction and the
sparse integer convolutions behind the endomorphism identities.  Run
after an editable install:

    python benchmarks/bench_kernels.py [--p 7] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time
from contextlib import contextmanager

import numpy as np

from pgonal import kernels
from pgonal.galois import build_closure_model
from pgonal.isogeny import AlgebraElement, _sigma_sum, build_projector, verify_phi_identity


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


@contextmanager
def forced_backend(name: str):
    saved = kernels._active
    kernels._active = kernels.get_backend(name)
    try:
        yield
    finally:
        kernels._active = saved


def phi_workload(model):
    """Index/coefficient arrays shaped like the scalar-identity product."""
    phi = AlgebraElement.subgroup_sum(model.R[0]) * _sigma_sum(model)
    e = build_projector(model, 1).idempotent
    denom = 2 ** (model.p - 1)
    idx_a = np.array(sorted(phi.coeffs), dtype=np.int64)
    num_a = np.array([int(phi.coeffs[i]) for i in idx_a], dtype=np.int64)
    idx_b = np.array(sorted(e.coeffs), dtype=np.int64)
    num_b = np.array([int(e.coeffs[i] * denom) for i in idx_b], dtype=np.int64)
    return idx_a, num_a, idx_b, num_b


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=7,
                        help="prime for the workloads (default 7)")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    names = kernels.available_backends()
    if len(names) < 2:
        print("compiled extension not available; nothing to compare")

    model = build_closure_model(args.p)
    rows = model.G.rows
    table = model.G.dense_table
    idx_a, num_a, idx_b, num_b = phi_workload(model)

    cases = [
        (
            f"mul_table ({model.G.order}x{model.G.order})",
            lambda backend: backend.mul_table(rows),
        ),
        (
            f"convolve via table ({len(idx_a)}x{len(idx_b)})",
            lambda backend: backend.convolve(rows, table, idx_a, num_a, idx_b, num_b),
        ),
        (
            f"convolve via search ({len(idx_a)}x{len(idx_b)})",
            lambda backend: backend.convolve(rows, None, idx_a, num_a, idx_b, num_b),
        ),
    ]

    print(f"p = {args.p}, |G| = {model.G.order}, best of {args.repeat}")
    header = f"{'workload':<34} " + " ".join(f"{n:>12}" for n in names)
    print(header)
    print("-" * len(header))
    for label, runner in cases:
        times = {}
        for name in names:
            backend = kernels.get_backend(name)
            times[name] = best_of(lambda: runner(backend), args.repeat)
        row = f"{label:<34} " + " ".join(f"{times[n] * 1e3:>10.2f}ms" for n in names)
        if len(names) == 2:
            row += f"   x{times[names[1]] / times[names[0]]:.1f}"
        print(row)

    print()
    for name in names:
        with forced_backend(name):
            fresh = build_closure_model(args.p)
            elapsed = best_of(lambda: verify_phi_identity(fresh), 1)
        print(f"verify_phi_identity end to end [{name:>8}]: {elapsed:.2f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
