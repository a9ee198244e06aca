"""McKay quiver, Tits form and the root data classifying rank-one simples.

Root vectors are plain tuples of ints.  A real root has Tits form 1; the
imaginary roots are the nonzero multiples of delta.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .arith import Cyclotomic, simplify
from .gamma import CyclicGroup, LambdaVector, ParameterError, regular_trace
from .linalg import rank

RootVec = tuple

#: coordinate bound when enumerating finite-type roots
FINITE_ROOT_BOUND = 6


class RootError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    adjacency: tuple[tuple[int, ...], ...]
    trivial_vertex: int = 0

    def __post_init__(self):
        adj = tuple(tuple(int(a) for a in row) for row in self.adjacency)
        n = len(adj)
        if any(len(row) != n for row in adj):
            raise ValueError("adjacency matrix must be square")
        if any(adj[i][j] != adj[j][i] or adj[i][j] < 0 for i in range(n) for j in range(n)):
            raise ValueError("adjacency matrix must be symmetric and nonnegative")
        object.__setattr__(self, "adjacency", adj)

    @property
    def nu(self) -> int:
        return len(self.adjacency)

    @property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        n = self.nu
        return tuple(tuple((2 if i == j else 0) - self.adjacency[i][j] for j in range(n))
                     for i in range(n))

    def to_json(self) -> dict:
        return {"adjacency": [list(r) for r in self.adjacency], "trivial_vertex": self.trivial_vertex}

    @classmethod
    def from_json(cls, obj: dict) -> "Quiver":
        return cls(tuple(tuple(r) for r in obj["adjacency"]), int(obj.get("trivial_vertex", 0)))


def mckay_quiver(group: CyclicGroup) -> Quiver:
    """a_ij = <chi_L chi_i, chi_j>, evaluated exactly with the class pairing."""
    ell = group.ell
    chi_l = group.l_character()
    adj = []
    for i in range(ell):
        row = []
        prod = [chi_l[a] * group.character(i, a) for a in range(ell)]
        for j in range(ell):
            chi_j = [group.character(j, a) for a in range(ell)]
            m = _multiplicity(group, prod, chi_j)
            if not (isinstance(m, Fraction) and m.denominator == 1):
                raise ArithmeticError(f"non-integral McKay multiplicity {m!r}")
            row.append(int(m))
        adj.append(tuple(row))
    return Quiver(tuple(adj), group.trivial_index)


def _multiplicity(group: CyclicGroup, chi: Sequence, chi_j: Sequence):
    """<chi, chi_j> = (1/ell) sum_a chi(g^a) conj(chi_j(g^a))."""
    ell = group.ell
    total = Cyclotomic.from_rational(ell, 0)
    for a in range(ell):
        total = total + chi[a] * chi_j[a].conjugate()
    return simplify(total / ell)


def tits_form(quiver: Quiver, alpha: Sequence[int]) -> int:
    """q(alpha) = sum alpha_i^2 - sum_{i<j} a_ij alpha_i alpha_j = alpha^T C alpha / 2."""
    if len(alpha) != quiver.nu:
        raise RootError(f"root of length {len(alpha)} for a quiver with {quiver.nu} vertices")
    c = quiver.cartan
    q2 = sum(alpha[i] * c[i][j] * alpha[j] for i in range(quiver.nu) for j in range(quiver.nu))
    assert q2 % 2 == 0
    return q2 // 2


def tits_bilinear(quiver: Quiver, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Symmetric form (alpha, beta) = alpha^T C beta, so (alpha, alpha) = 2 q(alpha)."""
    c = quiver.cartan
    n = quiver.nu
    return sum(alpha[i] * c[i][j] * beta[j] for i in range(n) for j in range(n))


def imaginary_generator(quiver: Quiver) -> RootVec:
    """The primitive positive vector in the radical of the Tits form."""
    c = quiver.cartan
    # affine ADE: the radical is one-dimensional; for the cyclic case delta = (1,...,1)
    delta = (1,) * quiver.nu
    if any(sum(c[i][j] * delta[j] for j in range(quiver.nu)) for i in range(quiver.nu)):
        raise RootError("quiver is not of cyclic affine type")
    return delta


def is_positive(alpha: Sequence[int]) -> bool:
    return all(a >= 0 for a in alpha) and any(alpha)


def is_real_root(quiver: Quiver, alpha: Sequence[int]) -> bool:
    return tits_form(quiver, alpha) == 1


def is_imaginary_root(quiver: Quiver, alpha: Sequence[int]) -> bool:
    if not any(alpha) or tits_form(quiver, alpha) != 0:
        return False
    delta = imaginary_generator(quiver)
    m = alpha[0] // delta[0] if delta[0] else None
    return m is not None and all(a == m * d for a, d in zip(alpha, delta))


@lru_cache(maxsize=None)
def _level_set(cartan: tuple, bound: int, zero_mask: tuple, target: int) -> tuple[RootVec, ...]:
    arr = kernels.tits_level_set(np.array(cartan, dtype=np.int64), bound,
                                 np.array(zero_mask, dtype=bool), target)
    return tuple(sorted(tuple(int(x) for x in row) for row in arr))


def finite_roots(quiver: Quiver, bound: int = FINITE_ROOT_BOUND) -> tuple[RootVec, ...]:
    """Roots of the finite-type subdiagram obtained by deleting the trivial vertex."""
    mask = tuple(i == quiver.trivial_vertex for i in range(quiver.nu))
    return _level_set(quiver.cartan, bound, mask, 1)


def _check_lambda(quiver: Quiver, lam: LambdaVector):
    if len(lam) != quiver.nu:
        raise ParameterError(f"lambda has {len(lam)} components, quiver has {quiver.nu} vertices")
    delta = imaginary_generator(quiver)
    ld = lam.dot(delta)
    if not ld:
        raise ParameterError(
            "lambda . delta = 0: the classification needs a nonzero trace of Lambda "
            "on the regular representation")
    return delta, ld


def r_lambda(quiver: Quiver, lam: LambdaVector) -> list[RootVec]:
    """All real roots orthogonal to lambda, sorted.

    Every real root is beta + n delta with beta a finite-type root (zero at
    the trivial vertex) and n an integer, so for each beta at most one n works:
    n = -(lambda . beta) / (lambda . delta).
    """
    delta, ld = _check_lambda(quiver, lam)
    out = set()
    for beta in finite_roots(quiver):
        n = simplify(-lam.dot(beta) / ld)
        if isinstance(n, Fraction) and n.denominator == 1:
            n = int(n)
            out.add(tuple(b + n * d for b, d in zip(beta, delta)))
    return sorted(out)


def sigma_lambda(quiver: Quiver, roots: Iterable[Sequence[int]]) -> list[RootVec]:
    """Positive members of a negation-closed root set that are not a sum of two positive members."""
    roots = [tuple(r) for r in roots]
    rset = set(roots)
    if any(tuple(-x for x in r) not in rset for r in roots):
        raise RootError("root set is not closed under negation")
    pos = sorted(r for r in rset if is_positive(r))
    posset = set(pos)
    simple = []
    for a in pos:
        decomposable = any(
            tuple(x - y for x, y in zip(a, b)) in posset for b in pos if b != a
        )
        if not decomposable:
            simple.append(a)
    return sorted(simple)


def roots_are_independent(roots: Sequence[Sequence[int]]) -> bool:
    if not roots:
        return True
    ncols = len(roots[0])
    return rank(({j: Fraction(v) for j, v in enumerate(r) if v} for r in roots), ncols) == len(roots)


def brute_force_r_lambda(quiver: Quiver, lam: LambdaVector, bound: int = 10) -> list[RootVec]:
    """Independent oracle: scan the box |alpha_i| <= bound for q = 1 and lambda . alpha = 0."""
    _check_lambda(quiver, lam)
    mask = (False,) * quiver.nu
    candidates = _level_set(quiver.cartan, bound, mask, 1)
    if not candidates:
        return []
    weights = _integer_weights(lam)
    if weights is not None:
        keep = kernels.orthogonal_mask(np.array(candidates, dtype=np.int64), np.array(weights))
        return sorted(c for c, k in zip(candidates, keep) if k)
    return sorted(c for c in candidates if not lam.dot(c))


def _integer_weights(lam: LambdaVector):
    """lambda scaled to a primitive integer vector, or None if not rational / too large."""
    if not lam.is_rational():
        return None
    den = 1
    for c in lam.components:
        den = den * c.denominator // gcd(den, c.denominator)
    w = [int(c * den) for c in lam.components]
    if max(abs(x) for x in w) > kernels.WEIGHT_LIMIT:
        return None
    return w


def classify(group: CyclicGroup, lam: LambdaVector) -> dict:
    """Convenience bundle: quiver, R_lambda and Sigma_lambda."""
    quiver = mckay_quiver(group)
    r = r_lambda(quiver, lam)
    return {"quiver": quiver, "r_lambda": r, "sigma_lambda": sigma_lambda(quiver, r),
            "regular_trace": regular_trace(group, lam)}
