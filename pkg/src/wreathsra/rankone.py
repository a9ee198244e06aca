"""Explicit simple modules of the rank-one algebra for cyclic Gamma.

A simple module with real dimension vector alpha is realised as a string
v_0, ..., v_{d-1}: v_m spans the chi_{(j0 + m) mod ell}-isotypic line,
x raises along the string, y lowers with coefficients a_m, and
xy - yx = Lambda forces a_{m+1} = a_m - lambda_{(j0 + m) mod ell}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import Cyclotomic, scalar_to_json, simplify
from .gamma import CyclicGroup, LambdaVector, ParameterError
from .linalg import Echelon, LinearSystem, SparseMatrix, solve_affine
from .roots import (is_imaginary_root, mckay_quiver, r_lambda, roots_are_independent,
                    sigma_lambda, tits_form)


class ClassificationError(ValueError):
    """The requested dimension vector does not index a simple module."""


class SingularSystemError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SimpleModule:
    ell: int
    lam: LambdaVector
    alpha: tuple
    j0: int
    string: tuple
    X: SparseMatrix
    Y: SparseMatrix
    G: SparseMatrix

    @property
    def dim(self) -> int:
        return sum(self.alpha)

    @property
    def chars(self) -> tuple[int, ...]:
        return tuple((self.j0 + m) % self.ell for m in range(self.dim))

    def character(self, a: int):
        """Tr(gamma^a) on the module."""
        return simplify(sum((Cyclotomic.zeta(self.ell, j * a) * n for j, n in enumerate(self.alpha)),
                            Cyclotomic.from_rational(self.ell, 0)))

    def to_json(self) -> dict:
        def mat(m):
            return [[scalar_to_json(v) for v in row] for row in m.to_dense()]
        return {
            "ell": self.ell,
            "lambda": self.lam.to_json(),
            "alpha": list(self.alpha),
            "dim": self.dim,
            "j0": self.j0,
            "string": [scalar_to_json(a) for a in self.string],
            "X": mat(self.X),
            "Y": mat(self.Y),
            "G": mat(self.G),
        }


def decompose_real_root(ell: int, alpha: Sequence[int]) -> tuple[int, int, int]:
    """Write a positive real root as (cyclic interval) + n delta; returns (j0, t, n)."""
    n = min(alpha)
    beta = [a - n for a in alpha]
    if any(b not in (0, 1) for b in beta) or not any(beta) or all(beta):
        raise ClassificationError(f"{tuple(alpha)} is not a positive real root of the cyclic quiver")
    starts = [i for i in range(ell) if beta[i] == 1 and beta[i - 1] == 0]
    if len(starts) != 1:
        raise ClassificationError(f"support of {tuple(beta)} is not a cyclic interval")
    return starts[0], sum(beta), n


def string_coefficients(lam: LambdaVector, j0: int, d: int) -> list:
    ell = lam.ell
    a = [Fraction(0)]
    for m in range(d):
        a.append(simplify(a[-1] - lam[(j0 + m) % ell]))
    return a


def build_simple(group: CyclicGroup, lam: LambdaVector, alpha: Sequence[int]) -> SimpleModule:
    ell = group.ell
    alpha = tuple(int(a) for a in alpha)
    if lam.ell != ell or len(alpha) != ell:
        raise ParameterError("ell, lambda and alpha disagree in length")
    quiver = mckay_quiver(group)
    if is_imaginary_root(quiver, alpha):
        raise ClassificationError(f"{alpha} is an imaginary root; no simple module is built for it")
    if tits_form(quiver, alpha) != 1:
        raise ClassificationError(f"{alpha} is not a real root (Tits form {tits_form(quiver, alpha)})")
    simples = sigma_lambda(quiver, r_lambda(quiver, lam))
    if alpha not in simples:
        raise ClassificationError(f"{alpha} is not in Sigma_lambda = {simples}")

    j0, t, n = decompose_real_root(ell, alpha)
    d = t + n * ell
    a = string_coefficients(lam, j0, d)
    if a[d] or any(not a[m] for m in range(1, d)):
        raise ArithmeticError(f"string coefficients {a} violate the simplicity conditions")
    X = SparseMatrix(d, d, {m + 1: {m: Fraction(1)} for m in range(d - 1)})
    Y = SparseMatrix(d, d, {m - 1: {m: a[m]} for m in range(1, d)})
    G = SparseMatrix.diag([group.zeta(j0 + m) for m in range(d)])
    return SimpleModule(ell, lam, alpha, j0, tuple(a), X, Y, G)


def check_relations(module: SimpleModule, lam: LambdaVector) -> bool:
    """xy - yx = Lambda, gamma x gamma^-1 = zeta x, gamma y gamma^-1 = zeta^-1 y, gamma^ell = 1."""
    ell = module.ell
    if lam.ell != ell:
        return False
    X, Y, G = module.X, module.Y, module.G
    d = X.nrows
    # Lambda acts on the chi_j-isotypic part by lambda_j; G is diagonal with zeta^j entries
    lam_diag = SparseMatrix.diag([_lambda_at(G[m, m], lam) for m in range(d)])
    zeta = Cyclotomic.zeta(ell)
    return (X @ Y - Y @ X == lam_diag
            and G @ X == (X @ G).scale(zeta)
            and G @ Y == (Y @ G).scale(zeta.inverse())
            and G ** ell == SparseMatrix.identity(d))


def _lambda_at(eigenvalue, lam: LambdaVector):
    ell = lam.ell
    for j in range(ell):
        if Cyclotomic.zeta(ell, j) == eigenvalue:
            return lam[j]
    raise ValueError(f"{eigenvalue!r} is not an ell-th root of unity")


def isotypic_multiplicities(module: SimpleModule) -> tuple[int, ...]:
    """(1/ell) sum_a Tr(G^a) zeta^(-ja) for each j."""
    ell = module.ell
    traces = []
    P = SparseMatrix.identity(module.dim)
    for _ in range(ell):
        traces.append(P.trace())
        P = P @ module.G
    out = []
    for j in range(ell):
        total = sum((Cyclotomic.zeta(ell, -j * a) * traces[a] for a in range(ell)),
                    Cyclotomic.from_rational(ell, 0))
        m = simplify(total / ell)
        if not (isinstance(m, Fraction) and m.denominator == 1):
            raise ArithmeticError(f"non-integral multiplicity {m!r}")
        out.append(int(m))
    return tuple(out)


def _same_parameters(m1: SimpleModule, m2: SimpleModule, lam: LambdaVector) -> None:
    if not (m1.ell == m2.ell == lam.ell and m1.lam == lam and m2.lam == lam):
        raise ParameterError("modules are not defined over the same (ell, lambda)")


def _equivariant_maps(m1: SimpleModule, m2: SimpleModule) -> list[SparseMatrix]:
    """Basis of h: M2 -> M1 with G1 h = h G2."""
    sysm = LinearSystem()
    sysm.add_matrix_unknown("h", (m1.dim, m2.dim))
    sysm.add_matrix_equation((m1.dim, m2.dim),
                             [(1, m1.G, "h", None), (-1, None, "h", m2.G)])
    return [sysm.matrices_from_vector(v)["h"] for v in sysm.echelon().nullspace()]


def hom_dim(m1: SimpleModule, m2: SimpleModule, lam: LambdaVector) -> int:
    """Dimension of module maps M2 -> M1."""
    _same_parameters(m1, m2, lam)
    sysm = LinearSystem()
    sysm.add_matrix_unknown("h", (m1.dim, m2.dim))
    shape = (m1.dim, m2.dim)
    sysm.add_matrix_equation(shape, [(1, m1.G, "h", None), (-1, None, "h", m2.G)])
    sysm.add_matrix_equation(shape, [(1, m1.X, "h", None), (-1, None, "h", m2.X)])
    sysm.add_matrix_equation(shape, [(1, m1.Y, "h", None), (-1, None, "h", m2.Y)])
    return sysm.ncols - sysm.echelon().rank


def ext1_dim(m1: SimpleModule, m2: SimpleModule, lam: LambdaVector) -> int:
    """First-order extension classes (xi_X, xi_Y): M2 -> M1 modulo coboundaries.

    The group action is held fixed; xi_X must shift characters like x and
    xi_Y like y, and the off-diagonal block of [x, y] must vanish.
    """
    _same_parameters(m1, m2, lam)
    zeta = Cyclotomic.zeta(m1.ell)
    shape = (m1.dim, m2.dim)
    sysm = LinearSystem()
    sysm.add_matrix_unknown("xX", shape)
    sysm.add_matrix_unknown("xY", shape)
    sysm.add_matrix_equation(shape, [(1, m1.G, "xX", None), (-zeta, None, "xX", m2.G)])
    sysm.add_matrix_equation(shape, [(1, m1.G, "xY", None), (-zeta.inverse(), None, "xY", m2.G)])
    sysm.add_matrix_equation(shape, [
        (1, m1.X, "xY", None), (1, None, "xX", m2.Y),
        (-1, m1.Y, "xX", None), (-1, None, "xY", m2.X),
    ])
    cocycles = sysm.ncols - sysm.echelon().rank
    boundaries = Echelon(sysm.ncols)
    for h in _equivariant_maps(m1, m2):
        boundaries.add(sysm.vector_from_matrices({
            "xX": m1.X @ h - h @ m2.X,
            "xY": m1.Y @ h - h @ m2.Y,
        }))
    return cocycles - boundaries.rank


def central_with_traces(simples: Sequence[SimpleModule], targets: Sequence) -> list:
    """Coefficients u_a of Z = sum_a u_a gamma^a with Tr_{Y_i}(Z) = targets[i].

    Z acts on chi_j by z_j = sum_a u_a zeta^(j a), so the conditions read
    sum_j alpha_{i,j} z_j = targets[i]; unconstrained z_j are set to zero.
    """
    if not simples:
        raise ValueError("need at least one module")
    if len(targets) != len(simples):
        raise ValueError("one target per module is required")
    ell = simples[0].ell
    if any(s.ell != ell for s in simples):
        raise ParameterError("modules over different groups")
    alphas = [s.alpha for s in simples]
    if not roots_are_independent(alphas):
        raise SingularSystemError("dimension vectors are linearly dependent")
    sol = solve_affine([[Fraction(a) for a in al] for al in alphas], [simplify(t) for t in targets], ell)
    if sol is None:
        raise SingularSystemError("trace conditions are inconsistent")
    z_hat, _ = sol
    u = []
    for a in range(ell):
        total = sum((z * Cyclotomic.zeta(ell, -j * a) for j, z in enumerate(z_hat)),
                    Cyclotomic.from_rational(ell, 0))
        u.append(simplify(total / ell))
    return u


def central_trace(module: SimpleModule, u: Sequence):
    """Tr of sum_a u_a gamma^a on the module."""
    return simplify(sum((u[a] * module.character(a) for a in range(module.ell)), Fraction(0)))


def all_simples(group: CyclicGroup, lam: LambdaVector) -> list[SimpleModule]:
    quiver = mckay_quiver(group)
    return [build_simple(group, lam, a) for a in sigma_lambda(quiver, r_lambda(quiver, lam))]


__all__ = [
    "ClassificationError",
    "SimpleModule",
    "SingularSystemError",
    "all_simples",
    "build_simple",
    "central_trace",
    "central_with_traces",
    "check_relations",
    "decompose_real_root",
    "ext1_dim",
    "hom_dim",
    "isotypic_multiplicities",
]
