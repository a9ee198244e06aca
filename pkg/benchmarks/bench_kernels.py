"""Compare the numba and numpy root-enumeration kernels.

    python3 benchmarks/bench_kernels.py [--bound 10] [--repeat 3]

Prints one line per (kernel, ell) with the best wall time of each backend
and checks that both backends return identical arrays.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from wreathsra import kernels
from wreathsra.gamma import CyclicGroup
from wreathsra.roots import mckay_quiver


def best_time(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-ell", type=int, default=5)
    args = ap.parse_args()

    if not kernels.NUMBA_AVAILABLE:
        print("numba not installed; nothing to compare")
        return
    # compile once outside the timed region
    c2 = np.array(mckay_quiver(CyclicGroup(2)).cartan, dtype=np.int64)
    kernels.tits_level_set_numba(c2, 1, np.zeros(2, dtype=bool), 1)
    kernels.orthogonal_mask_numba(np.zeros((1, 2), dtype=np.int64), np.zeros(2, dtype=np.int64))

    print(f"{'kernel':<16}{'ell':>4}{'rows':>10}{'numba s':>12}{'numpy s':>12}{'speedup':>10}")
    for ell in range(2, args.max_ell + 1):
        cartan = np.array(mckay_quiver(CyclicGroup(ell)).cartan, dtype=np.int64)
        mask = np.zeros(ell, dtype=bool)
        tn, a = best_time(lambda: kernels.tits_level_set_numba(cartan, args.bound, mask, 1), args.repeat)
        tp, b = best_time(lambda: kernels.tits_level_set_numpy(cartan, args.bound, mask, 1), args.repeat)
        if not np.array_equal(a, b):
            raise SystemExit(f"backends disagree on tits_level_set for ell={ell}")
        print(f"{'tits_level_set':<16}{ell:>4}{len(a):>10}{tn:>12.4f}{tp:>12.4f}{tp / tn:>10.1f}")

        rng = np.random.default_rng(ell)
        vecs = rng.integers(-args.bound, args.bound + 1, size=(200_000, ell), dtype=np.int64)
        weights = rng.integers(-5, 6, size=ell, dtype=np.int64)
        tn, a = best_time(lambda: kernels.orthogonal_mask_numba(vecs, weights), args.repeat)
        tp, b = best_time(lambda: kernels.orthogonal_mask_numpy(vecs, weights), args.repeat)
        if not np.array_equal(a, b):
            raise SystemExit(f"backends disagree on orthogonal_mask for ell={ell}")
        print(f"{'orthogonal_mask':<16}{ell:>4}{len(a):>10}{tn:>12.4f}{tp:>12.4f}{tp / tn:>10.1f}")


if __name__ == "__main__":
    main()
