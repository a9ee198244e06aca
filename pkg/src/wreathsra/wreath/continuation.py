"""Numerical continuation of an induced module to nonzero k.

Gauss-Newton on the full relation system in the unknown matrices x_i, y_i
(restricted to their Gamma^N-equivariant support), with the group action and
the target parameter held fixed.  The parameter-dependent constant parts of
the relations are assembled in exact arithmetic before conversion to complex
floats, so cases whose matrices do not move (D = 1) come out exactly.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..arith import embed_complex, simplify
from ..gamma import ClassParameter
from ..linalg import SparseMatrix
from .deformation import FirstOrderResult, PreconditionError, _support, first_order_deformation
from .induced import InducedModule
from .relations import VECTOR_NAMES, c_operator, s_operator, t_operator

log = logging.getLogger(__name__)


class ContinuationError(RuntimeError):
    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


@dataclass
class ContinuationResult:
    k: object
    c: tuple
    x: list = field(repr=False)
    y: list = field(repr=False)
    residual: float
    iterations: int
    substeps: int

    def to_json(self) -> dict:
        def enc(z):
            z = complex(embed_complex(z))
            return [float(z.real), float(z.imag)]

        return {
            "k": enc(self.k),
            "c": [enc(v) for v in self.c],
            "residual": self.residual,
            "iterations": self.iterations,
            "substeps": self.substeps,
            "x": [[[enc(z) for z in row] for row in m] for m in self.x],
            "y": [[[enc(z) for z in row] for row in m] for m in self.y],
        }


class _Problem:
    """Residual and Jacobian of the relations at a fixed exact parameter."""

    def __init__(self, module: InducedModule):
        self.module = module
        n, D = module.n_slots, module.dim
        self.n, self.D = n, D
        self.supports = {}
        offset = 0
        for i in range(n):
            for kind, shift in (("x", 1), ("y", -1)):
                sup = _support(module, i, shift)
                # column-major flat positions
                flat = np.array([q * D + p for p, q in sup], dtype=np.int64)
                self.supports[(kind, i)] = (offset, flat)
                offset += len(sup)
        self.nvars = offset
        self.swaps = [s.to_complex() for s in module.swaps]
        self.T = [t_operator(module, i) for i in range(n)]
        self.S = {(i, j, u, v): s_operator(module, i, j, u, v)
                  for i in range(n) for j in range(n) if i != j
                  for u in VECTOR_NAMES for v in VECTOR_NAMES}
        self.eye = np.eye(D)

    def set_parameter(self, k, c: ClassParameter) -> None:
        """Exact constant terms -1 - (k/2) T_i - sum c_a gamma_i^a and (k/2) S."""
        one = SparseMatrix.identity(self.D)
        half_k = simplify(k / 2)
        self.r1_const = []
        for i in range(self.n):
            m = one + c_operator(self.module, i, c)
            if half_k:
                m = m + self.T[i].scale(half_k)
            self.r1_const.append((-m).to_complex())
        self.r2_const = {key: S.scale(half_k).to_complex() if half_k else np.zeros((self.D, self.D))
                         for key, S in self.S.items()}

    def unpack(self, vec: np.ndarray) -> dict:
        D = self.D
        out = {"x": [], "y": []}
        for i in range(self.n):
            for kind in VECTOR_NAMES:
                off, flat = self.supports[(kind, i)]
                m = np.zeros(D * D, dtype=complex)
                m[flat] = vec[off:off + len(flat)]
                out[kind].append(m.reshape((D, D), order="F"))
        return out

    def pack(self, mats: dict) -> np.ndarray:
        vec = np.zeros(self.nvars, dtype=complex)
        for i in range(self.n):
            for kind in VECTOR_NAMES:
                off, flat = self.supports[(kind, i)]
                vec[off:off + len(flat)] = np.asarray(mats[kind][i]).reshape(-1, order="F")[flat]
        return vec

    def residual(self, vec: np.ndarray) -> np.ndarray:
        m = self.unpack(vec)
        parts = []
        for i in range(self.n):
            x, y = m["x"][i], m["y"][i]
            parts.append(x @ y - y @ x + self.r1_const[i])
        for (i, j, u, v), C in self.r2_const.items():
            a, b = m[u][i], m[v][j]
            parts.append(a @ b - b @ a + C)
        for k, s in enumerate(self.swaps):
            for i in range(self.n):
                si = k + 1 if i == k else k if i == k + 1 else i
                for kind in VECTOR_NAMES:
                    parts.append(s @ m[kind][i] - m[kind][si] @ s)
        return np.concatenate([p.reshape(-1, order="F") for p in parts])

    def _block(self, kind: str, i: int, full: np.ndarray) -> tuple[slice, np.ndarray]:
        off, flat = self.supports[(kind, i)]
        return slice(off, off + len(flat)), full[:, flat]

    def jacobian(self, vec: np.ndarray) -> np.ndarray:
        m = self.unpack(vec)
        I = self.eye
        D2 = self.D * self.D
        rows = []

        def left(a):   # vec(A Z) = (I kron A) vec Z
            return np.kron(I, a)

        def right(b):  # vec(Z B) = (B^T kron I) vec Z
            return np.kron(b.T, I)

        def commutator_row(terms):
            row = np.zeros((D2, self.nvars), dtype=complex)
            for kind, i, block in terms:
                sl, b = self._block(kind, i, block)
                row[:, sl] += b
            return row

        for i in range(self.n):
            x, y = m["x"][i], m["y"][i]
            rows.append(commutator_row([("x", i, right(y) - left(y)), ("y", i, left(x) - right(x))]))
        for (i, j, u, v) in self.r2_const:
            a, b = m[u][i], m[v][j]
            rows.append(commutator_row([(u, i, right(b) - left(b)), (v, j, left(a) - right(a))]))
        for k, s in enumerate(self.swaps):
            for i in range(self.n):
                si = k + 1 if i == k else k if i == k + 1 else i
                for kind in VECTOR_NAMES:
                    if si == i:
                        rows.append(commutator_row([(kind, i, left(s) - right(s))]))
                    else:
                        rows.append(commutator_row([(kind, i, left(s)), (kind, si, -right(s))]))
        return np.vstack(rows)


def _parameter_at(first: FirstOrderResult, base_c: ClassParameter, direction: Sequence, t: Fraction):
    k = simplify(t * simplify(direction[0]))
    c = ClassParameter(first.ell, tuple(simplify(base_c[a] + t * simplify(direction[a])) for a in range(1, first.ell)))
    return k, c


def newton_continue(module: InducedModule, direction: Sequence, step: float, tolerance: float = 1e-10,
                    substeps: int = 10, max_iter: int = 40, first: FirstOrderResult | None = None
                    ) -> ContinuationResult:
    """Follow (k, c) = (0, c_0) + t * direction for t from 0 to ``step``.

    ``direction`` is (k_hat, c_hat_1, ..., c_hat_{ell-1}) and must be tangent
    to the deformation locus.  Raises :class:`ContinuationError` when Newton
    fails to reach ``tolerance`` within ``max_iter`` iterations at a substep.
    """
    if first is None:
        first = first_order_deformation(module)
    direction = [simplify(Fraction(d) if isinstance(d, (int, float, str)) else d) for d in direction]
    if not first.contains_lambda_direction(first.lambda_direction_from_c(direction)):
        raise PreconditionError("direction is not tangent to the deformation locus")
    if substeps < 1 or max_iter < 1:
        raise ValueError("substeps and max_iter must be positive")
    base_c = first.c0
    problem = _Problem(module)
    x0 = {"x": [m.to_complex() for m in module.x], "y": [m.to_complex() for m in module.y]}
    vec = problem.pack(x0)
    t_final = Fraction(step)
    corr = first.correction(direction)
    tangent = problem.pack({kind: [m.to_complex() for m in corr[kind]] for kind in VECTOR_NAMES})

    if t_final == 0:
        k, c = _parameter_at(first, base_c, direction, Fraction(0))
        problem.set_parameter(k, c)
        res = float(np.max(np.abs(problem.residual(vec)), initial=0.0))
        return ContinuationResult(k, tuple(c.values), x0["x"], x0["y"], res, 0, 0)

    total_iter = 0
    prev_vec, prev_t, prev_dt = None, Fraction(0), None
    res = 0.0
    for s in range(1, substeps + 1):
        t = t_final * s / substeps
        k, c = _parameter_at(first, base_c, direction, t)
        problem.set_parameter(k, c)
        # predictor: tangent at the start, secant afterwards
        dt = float(t - prev_t)
        if prev_vec is None:
            guess = vec + dt * tangent
        else:
            guess = vec + (vec - prev_vec) * (dt / prev_dt)
        prev_vec, prev_t, prev_dt = vec, t, dt
        vec = guess
        for it in range(max_iter):
            r = problem.residual(vec)
            res = float(np.max(np.abs(r), initial=0.0))
            if res < tolerance:
                break
            J = problem.jacobian(vec)
            delta, *_ = np.linalg.lstsq(J, -r, rcond=None)
            vec = vec + delta
            total_iter += 1
        else:
            r = problem.residual(vec)
            res = float(np.max(np.abs(r), initial=0.0))
        if not np.isfinite(res) or res >= tolerance:
            raise ContinuationError(
                f"Newton did not converge at t = {float(t):g} (residual {res:.3e})",
                {"t": float(t), "substep": s, "residual": res, "iterations": total_iter})
        log.debug("substep %d: t=%g residual=%.3e", s, float(t), res)
    mats = problem.unpack(vec)
    return ContinuationResult(k, tuple(c.values), mats["x"], mats["y"], res, total_iter, substeps)


def direction_for_k(first: FirstOrderResult, k_target) -> tuple[list, Fraction]:
    """A tangent direction with k_hat = 1 and the step reaching k_target, if k is free."""
    for d in first.tangent_c:
        if d[0]:
            scaled = [simplify(v / d[0]) for v in d]
            return scaled, Fraction(k_target)
    raise PreconditionError("k is forced to vanish on the tangent space; cannot move in k")


__all__ = ["ContinuationError", "ContinuationResult", "direction_for_k", "newton_continue"]
