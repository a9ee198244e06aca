"""First-order deformations of an induced module along the parameter space.

Write x_i -> x_i + eps X_i, y_i -> y_i + eps Y_i with the group action held
fixed and (k, c) -> (0, c_0) + eps (k_hat, c_hat).  The first-order parts
of the relations are linear in the unknowns:

    R1_i:  [X_i, y_i] + [x_i, Y_i] - (k_hat/2) T_i - sum_j lam_hat_j E_ij = 0
    R2:    [U_i, v_j] + [u_i, V_j] + (k_hat/2) S_ij(u, v) = 0

where E_ij projects onto the vectors on which gamma_i acts by zeta^j and
lam_hat_j = sum_a c_hat_a zeta^(j a), so the lambda-sum of a direction is 0.
Gamma^N-equivariance is imposed by restricting the support of X_i (Y_i) to
entries raising (lowering) the i-th character by one; S_N-equivariance is
imposed by explicit equations for the adjacent transpositions.

With the matrix unknowns eliminated first, the echelon rows whose pivot is a
parameter column are exactly the linear conditions on consistent directions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..arith import scalar_to_json, simplify
from ..gamma import (ClassParameter, ParameterError, c_from_lambda, tangent_c_from_lambda,
                     tangent_lambda_from_c)
from ..linalg import Echelon, LinearSystem, SparseMatrix, commutator, same_row_space
from .induced import InducedModule
from .relations import VECTOR_NAMES, DeformationParameter, check_R1_R2, s_operator, t_operator


class PreconditionError(ValueError):
    pass


def _name(kind: str, i: int) -> str:
    return f"{kind.upper()}{i}"


def _support(module: InducedModule, i: int, shift: int) -> list[tuple[int, int]]:
    ell = module.ell
    by_char: dict[tuple, list[int]] = {}
    for q, ch in enumerate(module.chars):
        by_char.setdefault(ch, []).append(q)
    out = []
    for q, ch in enumerate(module.chars):
        target = list(ch)
        target[i] = (target[i] + shift) % ell
        for p in by_char.get(tuple(target), ()):
            out.append((p, q))
    return out


def equivariant_endomorphisms(module: InducedModule) -> list[SparseMatrix]:
    """Basis of End_{Gamma_N}(M): character-preserving maps commuting with the s_k."""
    D = module.dim
    sysm = LinearSystem()
    sysm.add_matrix_unknown("h", (D, D), _support_equal(module))
    for s in module.swaps:
        sysm.add_matrix_equation((D, D), [(1, s, "h", None), (-1, None, "h", s)])
    return [sysm.matrices_from_vector(v)["h"] for v in sysm.echelon().nullspace()]


def _support_equal(module: InducedModule) -> list[tuple[int, int]]:
    by_char: dict[tuple, list[int]] = {}
    for q, ch in enumerate(module.chars):
        by_char.setdefault(ch, []).append(q)
    return [(p, q) for idx in by_char.values() for p in idx for q in idx]


def build_first_order_system(module: InducedModule) -> LinearSystem:
    n, ell, D = module.n_slots, module.ell, module.dim
    shape = (D, D)
    sysm = LinearSystem()
    for i in range(n):
        sysm.add_matrix_unknown(_name("x", i), shape, _support(module, i, 1))
        sysm.add_matrix_unknown(_name("y", i), shape, _support(module, i, -1))
    sysm.add_scalar_unknown("k")
    for j in range(ell):
        sysm.add_scalar_unknown(f"lam{j}")

    half = Fraction(1, 2)
    for i in range(n):
        x, y = module.x[i], module.y[i]
        terms = [
            (1, None, _name("x", i), y), (-1, y, _name("x", i), None),
            (1, x, _name("y", i), None), (-1, None, _name("y", i), x),
            ("k", t_operator(module, i).scale(-half)),
        ]
        for j in range(ell):
            terms.append((f"lam{j}", module.isotypic_projector(i, j).scale(-1)))
        sysm.add_matrix_equation(shape, terms, f"R1[{i}]")
    sysm.add_row({sysm.scalar_vars[f"lam{j}"]: Fraction(1) for j in range(ell)}, "lambda-sum")

    vecs = {"x": module.x, "y": module.y}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for u in VECTOR_NAMES:
                for v in VECTOR_NAMES:
                    vj, ui = vecs[v][j], vecs[u][i]
                    terms = [
                        (1, None, _name(u, i), vj), (-1, vj, _name(u, i), None),
                        (1, ui, _name(v, j), None), (-1, None, _name(v, j), ui),
                    ]
                    S = s_operator(module, i, j, u, v)
                    if not S.is_zero():
                        terms.append(("k", S.scale(half)))
                    sysm.add_matrix_equation(shape, terms, f"R2[{i},{j},{u},{v}]")

    for k, s in enumerate(module.swaps):
        for i in range(n):
            si = k + 1 if i == k else k if i == k + 1 else i
            for kind in VECTOR_NAMES:
                sysm.add_matrix_equation(
                    shape, [(1, s, _name(kind, i), None), (-1, None, _name(kind, si), s)],
                    f"equivariance[{k},{kind}{i}]")
    return sysm


@dataclass(eq=False)
class FirstOrderResult:
    module: InducedModule
    c0: ClassParameter
    system: LinearSystem = field(repr=False)
    echelon: Echelon = field(repr=False)
    param_rows: list            # conditions on (k_hat, lam_hat_0, ..., lam_hat_{ell-1})
    tangent_lambda: list        # basis of consistent (k_hat, lam_hat)
    tangent_c: list             # same basis in (k_hat, c_hat_1, ..., c_hat_{ell-1})
    homogeneous_dim: int        # corrections with zero parameter direction
    trivial_dim: int            # span of commutators with equivariant endomorphisms
    trivial_in_kernel: bool

    @property
    def ell(self) -> int:
        return self.module.ell

    @property
    def codimension(self) -> int:
        return self.ell - len(self.tangent_c)

    @property
    def unique_modulo_trivial(self) -> bool:
        return self.trivial_in_kernel and self.homogeneous_dim == self.trivial_dim

    def _param_columns(self) -> list[int]:
        return [self.system.scalar_vars["k"]] + [self.system.scalar_vars[f"lam{j}"] for j in range(self.ell)]

    def contains_lambda_direction(self, direction: Sequence) -> bool:
        return all(
            not simplify(sum((r * d for r, d in zip(row, direction)), Fraction(0)))
            for row in self.param_rows
        )

    def lambda_direction_from_c(self, direction: Sequence) -> list:
        """(k_hat, c_hat...) -> (k_hat, lam_hat...)."""
        if len(direction) != self.ell:
            raise ParameterError(f"direction needs {self.ell} entries (k_hat, c_hat_1..)")
        k_hat = simplify(direction[0])
        return [k_hat] + tangent_lambda_from_c(self.module.group, [simplify(v) for v in direction[1:]])

    def correction(self, direction: Sequence, coords: str = "c") -> dict[str, list[SparseMatrix]]:
        """One solution (X_i, Y_i) for a consistent direction; free unknowns set to zero."""
        lam_dir = self.lambda_direction_from_c(direction) if coords == "c" else [simplify(v) for v in direction]
        if not self.contains_lambda_direction(lam_dir):
            raise PreconditionError("direction is not tangent to the deformation locus")
        cols = self._param_columns()
        first = self.system.scalar_vars["k"]
        vec: dict[int, object] = dict(zip(cols, lam_dir))
        for p, row in self.echelon.rref():
            if p >= first:
                continue
            val = simplify(-sum((row.get(c, 0) * d for c, d in zip(cols, lam_dir)), Fraction(0)))
            if val:
                vec[p] = val
        mats = self.system.matrices_from_vector(vec)
        n = self.module.n_slots
        return {"x": [mats[_name("x", i)] for i in range(n)], "y": [mats[_name("y", i)] for i in range(n)]}

    def to_json(self) -> dict:
        return {
            "tangent_lambda": [[scalar_to_json(v) for v in d] for d in self.tangent_lambda],
            "tangent_c": [[scalar_to_json(v) for v in d] for d in self.tangent_c],
            "codimension": self.codimension,
            "homogeneous_dim": self.homogeneous_dim,
            "trivial_dim": self.trivial_dim,
            "unique_modulo_trivial": self.unique_modulo_trivial,
        }


def _base_parameter(module: InducedModule, c0) -> ClassParameter:
    own = c_from_lambda(module.group, module.lam)
    if c0 is None:
        return own
    if isinstance(c0, DeformationParameter):
        if c0.k:
            raise PreconditionError(f"the module is built at k = 0, not k = {c0.k}")
        c0 = c0.c
    if not isinstance(c0, ClassParameter):
        c0 = ClassParameter(module.ell, tuple(c0))
    if c0 != own:
        raise PreconditionError("c_0 differs from the parameter the module was built at")
    return c0


def first_order_deformation(module: InducedModule, c0=None) -> FirstOrderResult:
    c0 = _base_parameter(module, c0)
    if not check_R1_R2(module, DeformationParameter(0, c0))["ok"]:
        raise PreconditionError("the module does not satisfy the relations at (0, c_0)")
    ell = module.ell
    sysm = build_first_order_system(module)
    ech = sysm.echelon()
    first = sysm.scalar_vars["k"]
    cols = [first] + [sysm.scalar_vars[f"lam{j}"] for j in range(ell)]
    pos = {c: t for t, c in enumerate(cols)}

    rref = ech.rref()
    param_rows = []
    matrix_pivots = 0
    for p, row in rref:
        if p >= first:
            param_rows.append([row.get(c, Fraction(0)) for c in cols])
        else:
            matrix_pivots += 1
    basis = Echelon(ell + 1).extend({pos[c]: v for c, v in row.items()}
                                    for p, row in rref if p >= first).nullspace()
    tangent_lambda = [[b.get(t, Fraction(0)) for t in range(ell + 1)] for b in basis]
    tangent_c = [[d[0]] + tangent_c_from_lambda(module.group, d[1:]) for d in tangent_lambda]

    homogeneous = first - matrix_pivots
    trivial = Echelon(sysm.ncols)
    in_kernel = True
    for h in equivariant_endomorphisms(module):
        vals = {}
        for i in range(module.n_slots):
            vals[_name("x", i)] = commutator(h, module.x[i])
            vals[_name("y", i)] = commutator(h, module.y[i])
        vec = sysm.vector_from_matrices(vals)
        in_kernel &= sysm.satisfied_by(vec)
        trivial.add(vec)
    return FirstOrderResult(module, c0, sysm, ech, param_rows, tangent_lambda, tangent_c,
                            homogeneous, trivial.rank, bool(in_kernel))


def linearized_residuals_vanish(module: InducedModule, result: FirstOrderResult, direction: Sequence,
                                corr: dict, coords: str = "c") -> bool:
    """Independent check of a correction: evaluate the linearised relations directly."""
    lam_dir = result.lambda_direction_from_c(direction) if coords == "c" else list(direction)
    k_hat, lam_hat = lam_dir[0], lam_dir[1:]
    n = module.n_slots
    vecs = {"x": module.x, "y": module.y}
    for i in range(n):
        res = commutator(corr["x"][i], module.y[i]) + commutator(module.x[i], corr["y"][i])
        res = res - t_operator(module, i).scale(simplify(k_hat / 2))
        for j, v in enumerate(lam_hat):
            if v:
                res = res - module.isotypic_projector(i, j).scale(v)
        if not res.is_zero():
            return False
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for u in VECTOR_NAMES:
                for v in VECTOR_NAMES:
                    res = commutator(corr[u][i], vecs[v][j]) + commutator(vecs[u][i], corr[v][j])
                    res = res + s_operator(module, i, j, u, v).scale(simplify(k_hat / 2))
                    if not res.is_zero():
                        return False
    return True


def tangent_matches(result: FirstOrderResult, directions: Sequence[Sequence]) -> bool:
    """Compare the solver's (k, c) tangent space with another basis as exact row spaces."""
    return same_row_space(result.tangent_c, directions, result.ell)


__all__ = [
    "FirstOrderResult",
    "PreconditionError",
    "build_first_order_system",
    "equivariant_endomorphisms",
    "first_order_deformation",
    "linearized_residuals_vanish",
    "tangent_matches",
]
