"""Integer enumeration kernels used by root classification.

Both kernels exist twice: a numba ``@njit`` loop and a vectorised numpy
version.  :func:`tits_level_set` and :func:`orthogonal_mask` dispatch on
:func:`wreathsra._accel.use_numba` at call time; the explicit
``*_numba`` / ``*_numpy`` names are kept public for cross-checking and the
benchmark.
"""
from __future__ import annotations

import numpy as np

from ._accel import NUMBA_AVAILABLE, njit, use_numba

_CHUNK = 1 << 20

# |entry| * |weight| * nu must stay well inside int64
WEIGHT_LIMIT = 1 << 40


@njit(cache=False)
def _level_count_fill(cartan, bound, free, target2, out, fill):
    nu = cartan.shape[0]
    nfree = free.shape[0]
    vec = np.zeros(nu, dtype=np.int64)
    for k in range(nfree):
        vec[free[k]] = -bound
    side = 2 * bound + 1
    total = 1
    for k in range(nfree):
        total *= side
    count = 0
    for _ in range(total):
        q2 = 0
        for i in range(nu):
            vi = vec[i]
            if vi == 0:
                continue
            row = 0
            for j in range(nu):
                row += cartan[i, j] * vec[j]
            q2 += vi * row
        if q2 == target2:
            if fill:
                for i in range(nu):
                    out[count, i] = vec[i]
            count += 1
        # odometer increment over the free coordinates
        k = 0
        while k < nfree:
            c = free[k]
            if vec[c] < bound:
                vec[c] += 1
                break
            vec[c] = -bound
            k += 1
    return count


def tits_level_set_numba(cartan: np.ndarray, bound: int, zero_mask: np.ndarray, target: int) -> np.ndarray:
    """Vectors with ``|v_i| <= bound``, ``v_i = 0`` where masked, and ``v^T C v = 2 target``."""
    cartan = np.ascontiguousarray(cartan, dtype=np.int64)
    free = np.flatnonzero(~np.asarray(zero_mask, dtype=bool)).astype(np.int64)
    nu = cartan.shape[0]
    dummy = np.zeros((1, nu), dtype=np.int64)
    n = _level_count_fill(cartan, np.int64(bound), free, np.int64(2 * target), dummy, False)
    out = np.zeros((n, nu), dtype=np.int64)
    _level_count_fill(cartan, np.int64(bound), free, np.int64(2 * target), out, True)
    return out


def tits_level_set_numpy(cartan: np.ndarray, bound: int, zero_mask: np.ndarray, target: int) -> np.ndarray:
    cartan = np.asarray(cartan, dtype=np.int64)
    nu = cartan.shape[0]
    free = np.flatnonzero(~np.asarray(zero_mask, dtype=bool))
    side = 2 * bound + 1
    total = side ** len(free)
    found = []
    for start in range(0, total, _CHUNK):
        lin = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        vecs = np.zeros((lin.size, nu), dtype=np.int64)
        # first free coordinate varies fastest, matching the numba odometer
        for c in free:
            vecs[:, c] = lin % side - bound
            lin //= side
        q2 = np.einsum("ni,ij,nj->n", vecs, cartan, vecs)
        found.append(vecs[q2 == 2 * target])
    if not found:
        return np.zeros((0, nu), dtype=np.int64)
    return np.concatenate(found, axis=0)


@njit(cache=False)
def _orthogonal_loop(vectors, weights, out):
    m, nu = vectors.shape
    for r in range(m):
        s = 0
        for i in range(nu):
            s += vectors[r, i] * weights[i]
        out[r] = s == 0


def orthogonal_mask_numba(vectors: np.ndarray, weights: np.ndarray) -> np.ndarray:
    vectors = np.ascontiguousarray(vectors, dtype=np.int64)
    out = np.zeros(vectors.shape[0], dtype=np.bool_)
    _orthogonal_loop(vectors, np.ascontiguousarray(weights, dtype=np.int64), out)
    return out


def orthogonal_mask_numpy(vectors: np.ndarray, weights: np.ndarray) -> np.ndarray:
    return np.asarray(vectors, dtype=np.int64) @ np.asarray(weights, dtype=np.int64) == 0


def tits_level_set(cartan, bound, zero_mask, target=1) -> np.ndarray:
    if use_numba():
        return tits_level_set_numba(cartan, bound, zero_mask, target)
    return tits_level_set_numpy(cartan, bound, zero_mask, target)


def orthogonal_mask(vectors, weights) -> np.ndarray:
    if max((abs(int(w)) for w in weights), default=0) > WEIGHT_LIMIT:
        raise OverflowError("integer weights too large for the int64 kernel")
    if use_numba():
        return orthogonal_mask_numba(vectors, weights)
    return orthogonal_mask_numpy(vectors, weights)


__all__ = [
    "NUMBA_AVAILABLE",
    "WEIGHT_LIMIT",
    "orthogonal_mask",
    "orthogonal_mask_numba",
    "orthogonal_mask_numpy",
    "tits_level_set",
    "tits_level_set_numba",
    "tits_level_set_numpy",
]
