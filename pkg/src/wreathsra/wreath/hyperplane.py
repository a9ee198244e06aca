"""Parameter hyperplanes attached to a simple Y and a rectangular diagram.

For Y with dimension vector alpha and an l x m rectangle W the hyperplane is

    dim Y + (ell/2)(m - l) k + sum_{a>=1} c_a chi_Y(gamma^a) = 0,

equivalently lambda . alpha + (ell/2)(m - l) k = 0.  Points are written
(k, c_1, ..., c_{ell-1}); tangent directions in lambda coordinates are
(k, lambda_0, ..., lambda_{ell-1}) with zero lambda-sum.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..arith import Cyclotomic, scalar_to_json, simplify
from ..gamma import CyclicGroup, ParameterError
from ..linalg import Echelon, dense_to_row, solve_affine
from ..symcomb import as_partition, content, is_rectangle, rectangle_shape


@dataclass(frozen=True)
class Hyperplane:
    ell: int
    alpha: tuple
    k_coeff: Fraction
    c_coeffs: tuple     # chi_Y(gamma^a), a = 1..ell-1
    constant: int       # dim Y
    label: str = ""

    @property
    def lambda_coeffs(self) -> tuple:
        return self.alpha

    def c_row(self) -> list:
        """Coefficients on (k, c_1, ..., c_{ell-1})."""
        return [self.k_coeff, *self.c_coeffs]

    def tangent_lambda_row(self) -> list:
        """Coefficients on (k, lambda_0, ..., lambda_{ell-1}); constant 0."""
        return [self.k_coeff, *(Fraction(a) for a in self.alpha)]

    def evaluate(self, k, c: Sequence):
        total = self.constant + self.k_coeff * k
        for a, coeff in enumerate(self.c_coeffs):
            total = total + coeff * c[a]
        return simplify(total)

    def evaluate_lambda(self, k, lam: Sequence):
        return simplify(sum((a * v for a, v in zip(self.alpha, lam)), Fraction(0)) + self.k_coeff * k)

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "label": self.label,
            "lambda_form": {"k": scalar_to_json(self.k_coeff),
                            "lambda": [str(a) for a in self.alpha], "constant": "0"},
            "c_form": {"k": scalar_to_json(self.k_coeff),
                       "c": [scalar_to_json(v) for v in self.c_coeffs],
                       "constant": str(self.constant)},
        }


def _characters(group: CyclicGroup, alpha: Sequence[int]) -> tuple:
    ell = group.ell
    out = []
    for a in range(1, ell):
        total = Cyclotomic.from_rational(ell, 0)
        for j, n in enumerate(alpha):
            if n:
                total = total + group.zeta(j * a) * n
        out.append(simplify(total))
    return tuple(out)


def _make(group: CyclicGroup, alpha, k_coeff, label) -> Hyperplane:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != group.ell:
        raise ParameterError(f"dimension vector {alpha} does not match ell = {group.ell}")
    return Hyperplane(group.ell, alpha, Fraction(k_coeff), _characters(group, alpha), sum(alpha), label)


def hyperplane(group: CyclicGroup, alpha: Sequence[int], m: int, l: int,
               n_i: int | None = None) -> Hyperplane:
    """Hyperplane for a simple of dimension vector alpha and an l x m rectangle."""
    if n_i is not None and m * l != n_i:
        raise ValueError(f"m * l = {m * l} differs from N_i = {n_i}")
    if m <= 0 or l <= 0:
        raise ValueError("rectangle sides must be positive")
    return _make(group, alpha, Fraction(group.ell, 2) * (m - l), f"m={m},l={l}")


def content_hyperplane(group: CyclicGroup, alpha: Sequence[int], mu: Sequence[int]) -> Hyperplane:
    """Same trace argument for any diagram: (m - l) is replaced by 2 c(mu) / N.

    For a rectangle this is exactly :func:`hyperplane`; for other shapes it is
    only the naive guess used as a negative control.
    """
    mu = as_partition(mu)
    n = sum(mu)
    return _make(group, alpha, Fraction(group.ell, 2) * Fraction(2 * content(mu), n), f"mu={mu}")


def hyperplane_for_partition(group: CyclicGroup, alpha: Sequence[int], mu: Sequence[int]) -> Hyperplane:
    mu = as_partition(mu)
    if not is_rectangle(mu):
        raise ValueError(f"{mu} is not a rectangle")
    l, m = rectangle_shape(mu)
    return hyperplane(group, alpha, m, l, sum(mu))


def module_hyperplanes(module, naive: bool = False) -> list[Hyperplane]:
    """One hyperplane per block of an induced module."""
    out = []
    for mu, simple in zip(module.partitions, module.simples):
        if naive or not is_rectangle(mu):
            out.append(content_hyperplane(module.group, simple.alpha, mu))
        else:
            out.append(hyperplane_for_partition(module.group, simple.alpha, mu))
    return out


@dataclass(frozen=True)
class AffineSubspace:
    ambient: int
    consistent: bool
    point: tuple
    directions: tuple
    codimension: int | None

    def to_json(self) -> dict:
        return {
            "consistent": self.consistent,
            "point": [scalar_to_json(v) for v in self.point],
            "directions": [[scalar_to_json(v) for v in d] for d in self.directions],
            "codimension": self.codimension,
        }


def intersect_hyperplanes(planes: Sequence[Hyperplane], ell: int | None = None) -> AffineSubspace:
    """Exact intersection in (k, c) space; an empty intersection is reported, not raised."""
    if not planes and ell is None:
        raise ValueError("need ell when intersecting no hyperplanes")
    ell = planes[0].ell if planes else ell
    if any(p.ell != ell for p in planes):
        raise ParameterError("hyperplanes over different groups")
    ncols = ell
    sol = solve_affine([p.c_row() for p in planes], [-p.constant for p in planes], ncols)
    if sol is None:
        return AffineSubspace(ncols, False, (), (), None)
    point, dirs = sol
    return AffineSubspace(ncols, True, tuple(point), tuple(tuple(d) for d in dirs), ncols - len(dirs))


def tangent_lambda_space(planes: Sequence[Hyperplane], ell: int) -> list[list]:
    """Directions (k, lambda_hat) tangent to the intersection, as a nullspace basis."""
    rows = [dense_to_row(p.tangent_lambda_row()) for p in planes]
    rows.append({1 + j: Fraction(1) for j in range(ell)})
    basis = Echelon(ell + 1).extend(rows).nullspace()
    return [[b.get(j, Fraction(0)) for j in range(ell + 1)] for b in basis]


__all__ = [
    "AffineSubspace",
    "Hyperplane",
    "content_hyperplane",
    "hyperplane",
    "hyperplane_for_partition",
    "intersect_hyperplanes",
    "module_hyperplanes",
    "tangent_lambda_space",
]
