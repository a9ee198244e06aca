"""The defining relations of the wreath-product algebra on an explicit module.

    R1_i:      [x_i, y_i] - 1 - (k/2) T_i - sum_{a>=1} c_a gamma_i^a
    R2_ij(u,v): [u_i, v_j] + (k/2) S_ij(u,v)

with T_i = sum_{j != i} sum_a s_ij gamma_i^a gamma_j^-a and
S_ij(u,v) = sum_a omega_L(gamma^a u, v) s_ij gamma_i^a gamma_j^-a.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..arith import scalar_to_json, simplify
from ..gamma import ClassParameter, ParameterError
from ..linalg import SparseMatrix, commutator
from .group import WreathElement
from .induced import InducedModule

VECTOR_NAMES = ("x", "y")


@dataclass(frozen=True)
class DeformationParameter:
    k: object
    c: ClassParameter

    def __post_init__(self):
        object.__setattr__(self, "k", simplify(self.k))

    @property
    def ell(self) -> int:
        return self.c.ell

    def to_json(self) -> dict:
        return {"k": scalar_to_json(self.k), "c": self.c.to_json()}


def _swap_gamma(module: InducedModule, i: int, j: int, a: int) -> SparseMatrix:
    g = WreathElement.s_gamma(module.ell, module.n_slots, i, j, a)
    return module.rho(g)


def t_operator(module: InducedModule, i: int) -> SparseMatrix:
    """T_i, the coefficient of k/2 in R1_i."""
    cache = module.cache.setdefault("T", {})
    if i in cache:
        return cache[i]
    D = module.dim
    out = SparseMatrix.zeros(D)
    for j in range(module.n_slots):
        if j == i:
            continue
        for a in range(module.ell):
            out = out + _swap_gamma(module, i, j, a)
    cache[i] = out
    return out


def s_operator(module: InducedModule, i: int, j: int, u: str, v: str) -> SparseMatrix:
    """S_ij(u, v), the coefficient of k/2 in R2."""
    group = module.group
    out = SparseMatrix.zeros(module.dim)
    for a in range(module.ell):
        w = group.omega_twisted(a, u, v)
        if w:
            out = out + _swap_gamma(module, i, j, a).scale(w)
    return out


def c_operator(module: InducedModule, i: int, c: ClassParameter) -> SparseMatrix:
    out = SparseMatrix.zeros(module.dim)
    for a in range(1, module.ell):
        if c[a]:
            out = out + module.gamma_power(i, a).scale(c[a])
    return out


def _vec(module: InducedModule, name: str, i: int, overrides=None) -> SparseMatrix:
    if overrides is not None:
        return overrides[name][i]
    return module.x[i] if name == "x" else module.y[i]


def r1_residual(module: InducedModule, i: int, param: DeformationParameter, mats=None) -> SparseMatrix:
    one = SparseMatrix.identity(module.dim)
    res = commutator(_vec(module, "x", i, mats), _vec(module, "y", i, mats)) - one
    if param.k:
        res = res - t_operator(module, i).scale(param.k / 2)
    return res - c_operator(module, i, param.c)


def r2_residual(module: InducedModule, i: int, j: int, u: str, v: str,
                param: DeformationParameter, mats=None) -> SparseMatrix:
    res = commutator(_vec(module, u, i, mats), _vec(module, v, j, mats))
    if param.k:
        res = res + s_operator(module, i, j, u, v).scale(param.k / 2)
    return res


def check_R1_R2(module: InducedModule, param: DeformationParameter, mats=None) -> dict:
    """Exact evaluation of every relation; ``mats`` may replace the x_i, y_i."""
    if param.ell != module.ell:
        raise ParameterError("parameter and module live over different groups")
    n = module.n_slots
    r1 = {i: r1_residual(module, i, param, mats).is_zero() for i in range(n)}
    r2 = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for u in VECTOR_NAMES:
                for v in VECTOR_NAMES:
                    r2[(i, j, u, v)] = r2_residual(module, i, j, u, v, param, mats).is_zero()
    return {
        "R1": r1,
        "R2": r2,
        "R1_ok": all(r1.values()),
        "R2_ok": all(r2.values()),
        "ok": all(r1.values()) and all(r2.values()),
    }


def report_to_json(report: dict) -> dict:
    return {
        "R1": {str(i + 1): ok for i, ok in report["R1"].items()},
        "R2": {f"{i + 1},{j + 1},{u},{v}": ok for (i, j, u, v), ok in report["R2"].items()},
        "R1_ok": report["R1_ok"],
        "R2_ok": report["R2_ok"],
        "ok": report["ok"],
    }


def parameter_at(module: InducedModule, k, c: Sequence | ClassParameter) -> DeformationParameter:
    if not isinstance(c, ClassParameter):
        c = ClassParameter(module.ell, tuple(c))
    return DeformationParameter(k, c)


__all__ = [
    "DeformationParameter",
    "check_R1_R2",
    "c_operator",
    "parameter_at",
    "r1_residual",
    "r2_residual",
    "report_to_json",
    "s_operator",
    "t_operator",
]
