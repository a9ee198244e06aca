"""Independent floating-point oracle for the first-order tangent space.

Rebuilds the linearised relations from ``module.rho`` and explicit group
elements only: every entry of every correction matrix is an unknown (no
equivariant support restriction), parameters are (k_hat, c_hat_1..), and the
tangent space is read off an SVD nullspace.  Shares no code with the exact
solver beyond the module's matrices.
"""
from __future__ import annotations

import cmath

import numpy as np

from wreathsra.arith import embed_complex
from wreathsra.wreath import WreathElement


def _dense(m) -> np.ndarray:
    return np.asarray(m.to_complex(), dtype=complex)


def numeric_tangent(module, tol: float = 1e-8) -> np.ndarray:
    """Orthonormal rows spanning the consistent (k_hat, c_hat) directions."""
    ell, n, D = module.ell, module.n_slots, module.dim
    zeta = cmath.exp(2j * cmath.pi / ell)
    I = np.eye(D)
    rho = lambda g: _dense(module.rho(g))  # noqa: E731
    X = {"x": [_dense(m) for m in module.x], "y": [_dense(m) for m in module.y]}
    nmat = 2 * n * D * D
    ncols = nmat + ell

    def col(kind, i):
        off = (2 * i + (kind == "y")) * D * D
        return slice(off, off + D * D)

    def left(a):
        return np.kron(I, a)

    def right(b):
        return np.kron(b.T, I)

    def swap_gamma(i, j, a):
        return rho(WreathElement.s_gamma(ell, n, i, j, a))

    omega = {("x", "y"): 1, ("y", "x"): -1}
    weight = {"x": 1, "y": -1}
    blocks = []

    for i in range(n):   # linearised R1
        row = np.zeros((D * D, ncols), dtype=complex)
        row[:, col("x", i)] += right(X["y"][i]) - left(X["y"][i])
        row[:, col("y", i)] += left(X["x"][i]) - right(X["x"][i])
        T = sum(swap_gamma(i, j, a) for j in range(n) if j != i for a in range(ell)) if n > 1 else 0 * I
        row[:, nmat] = -(np.asarray(T) / 2).reshape(-1, order="F")
        for a in range(1, ell):
            row[:, nmat + a] = -rho(WreathElement.gamma(ell, n, i, a)).reshape(-1, order="F")
        blocks.append(row)
    for i in range(n):   # linearised R2
        for j in range(n):
            if i == j:
                continue
            for u in "xy":
                for v in "xy":
                    row = np.zeros((D * D, ncols), dtype=complex)
                    row[:, col(u, i)] += right(X[v][j]) - left(X[v][j])
                    row[:, col(v, j)] += left(X[u][i]) - right(X[u][i])
                    w = omega.get((u, v), 0)
                    if w:
                        # omega(gamma^a u, v) = zeta^(a * weight(u)) omega(u, v)
                        S = sum(zeta ** (a * weight[u]) * w * swap_gamma(i, j, a) for a in range(ell))
                        row[:, nmat] += (S / 2).reshape(-1, order="F")
                    blocks.append(row)
    for kind in "xy":    # equivariance under generators
        for i in range(n):
            for j in range(n):
                g = rho(WreathElement.gamma(ell, n, j))
                row = np.zeros((D * D, ncols), dtype=complex)
                row[:, col(kind, i)] = left(g) - (zeta ** weight[kind] if i == j else 1) * right(g)
                blocks.append(row)
            for k in range(n - 1):
                s = rho(WreathElement.swap(ell, n, k, k + 1))
                si = k + 1 if i == k else k if i == k + 1 else i
                row = np.zeros((D * D, ncols), dtype=complex)
                row[:, col(kind, i)] += left(s)
                row[:, col(kind, si)] -= right(s)
                blocks.append(row)
    A = np.vstack(blocks)
    _, sv, vh = np.linalg.svd(A)
    null = vh[np.sum(sv > tol * max(1.0, sv[0])):].conj().T
    params = null[nmat:, :]
    u, s, _ = np.linalg.svd(params, full_matrices=False)
    return u[:, s > tol].T


def same_span(a: np.ndarray, b, tol: float = 1e-8) -> bool:
    """Whether the rows of ``a`` (floats) and ``b`` (exact scalars) span the same space."""
    b = np.array([[embed_complex(x) for x in row] for row in b], dtype=complex).reshape(len(b), a.shape[1])
    if np.linalg.matrix_rank(b, tol=tol) != a.shape[0]:
        return False
    if a.shape[0] == 0:
        return True
    return np.linalg.matrix_rank(np.vstack([a, b]), tol=tol) == a.shape[0]
