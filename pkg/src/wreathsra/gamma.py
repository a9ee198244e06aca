"""The cyclic group Z/ell inside SL(2, C) and its deformation parameters.

The generator gamma acts on the symplectic basis of L by
``gamma.x = zeta x`` and ``gamma.y = zeta^-1 y``.  Irreducible characters are
``chi_j(gamma^a) = zeta^(j a)`` with j = 0 the trivial one.

Two coordinate systems describe the rank-one parameter:

* ``ClassParameter``: values c_a on the nontrivial elements gamma^a,
* ``LambdaVector``: lambda_j = trace of Lambda = 1 + sum_a c_a gamma^a on the
  j-th irreducible, i.e. ``lambda_j = 1 + sum_a c_a zeta^(j a)``.

They are related by an exact discrete Fourier transform.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import Cyclotomic, scalar_from_json, scalar_to_json, simplify


class ParameterError(ValueError):
    """Inconsistent or mismatched deformation parameters."""


@dataclass(frozen=True)
class CyclicGroup:
    ell: int

    def __post_init__(self):
        if not isinstance(self.ell, int) or isinstance(self.ell, bool):
            raise TypeError("ell must be an integer")
        if self.ell < 2:
            raise ValueError(
                f"ell = {self.ell}: the trivial group has no nontrivial classes; need ell >= 2")
        # validates the field size limit
        Cyclotomic.zeta(self.ell)

    @property
    def order(self) -> int:
        return self.ell

    def zeta(self, power: int = 1) -> Cyclotomic:
        return Cyclotomic.zeta(self.ell, power)

    def character(self, j: int, a: int) -> Cyclotomic:
        """chi_j(gamma^a)."""
        return self.zeta(j * a)

    def character_table(self) -> list[list[Cyclotomic]]:
        return [[self.character(j, a) for a in range(self.ell)] for j in range(self.ell)]

    def class_pairing(self, f: Sequence, g: Sequence):
        """(1/ell) sum_a f(gamma^a) g(gamma^-a) for class functions given as lists."""
        ell = self.ell
        total = sum((f[a] * g[(-a) % ell] for a in range(ell)), Cyclotomic.from_rational(ell, 0))
        return simplify(total / ell)

    def l_character(self) -> list[Cyclotomic]:
        """Character of the defining representation L: zeta^a + zeta^-a."""
        return [self.zeta(a) + self.zeta(-a) for a in range(self.ell)]

    @property
    def delta(self) -> tuple[int, ...]:
        """Dimensions of the irreducibles (all one for a cyclic group)."""
        return (1,) * self.ell

    @property
    def trivial_index(self) -> int:
        return 0

    def l_weights(self) -> dict[str, int]:
        """Exponent e with gamma.u = zeta^e u for u in the symplectic basis."""
        return {"x": 1, "y": -1}

    def omega_l(self, u: str, v: str) -> int:
        """Symplectic form on L with omega(x, y) = 1."""
        return {("x", "y"): 1, ("y", "x"): -1}.get((u, v), 0)

    def omega_twisted(self, a: int, u: str, v: str) -> Cyclotomic:
        """omega_L(gamma^a u, v)."""
        return self.zeta(a * self.l_weights()[u]) * self.omega_l(u, v)

    def to_json(self) -> dict:
        return {"ell": self.ell}


def _coerce_values(values, ell):
    out = []
    for v in values:
        if isinstance(v, (str, dict)):
            v = scalar_from_json(v)
        v = simplify(v)
        if isinstance(v, Cyclotomic) and v.order != ell:
            raise ParameterError(f"value {v!r} does not live in Q(zeta_{ell})")
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class ClassParameter:
    """Values c_a for a = 1..ell-1 (none for the identity)."""

    ell: int
    values: tuple

    def __post_init__(self):
        vals = _coerce_values(self.values, self.ell)
        if len(vals) != self.ell - 1:
            raise ParameterError(f"class parameter needs {self.ell - 1} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def zero(cls, ell: int) -> "ClassParameter":
        return cls(ell, (Fraction(0),) * (ell - 1))

    def __getitem__(self, a: int):
        """c at gamma^a, a in 1..ell-1."""
        if not 1 <= a < self.ell:
            raise IndexError(a)
        return self.values[a - 1]

    def to_json(self) -> list:
        return [scalar_to_json(v) for v in self.values]


@dataclass(frozen=True)
class LambdaVector:
    ell: int
    components: tuple

    def __post_init__(self):
        comps = _coerce_values(self.components, self.ell)
        if len(comps) != self.ell:
            raise ParameterError(f"lambda needs {self.ell} components, got {len(comps)}")
        object.__setattr__(self, "components", comps)

    def __getitem__(self, j: int):
        return self.components[j]

    def __len__(self) -> int:
        return self.ell

    def __iter__(self):
        return iter(self.components)

    def dot(self, alpha: Sequence[int]):
        if len(alpha) != self.ell:
            raise ParameterError(f"dimension vector of length {len(alpha)} for ell = {self.ell}")
        return simplify(sum((c * int(a) for c, a in zip(self.components, alpha)), Fraction(0)))

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.components)

    def to_json(self) -> list:
        return [scalar_to_json(v) for v in self.components]


def lambda_from_c(group: CyclicGroup, c: ClassParameter) -> LambdaVector:
    """lambda_j = 1 + sum_{a=1}^{ell-1} c_a zeta^(j a)."""
    ell = group.ell
    if c.ell != ell:
        raise ParameterError(f"class parameter for ell = {c.ell} used with ell = {ell}")
    comps = []
    for j in range(ell):
        total = Cyclotomic.from_rational(ell, 1)
        for a in range(1, ell):
            if c[a]:
                total = total + c[a] * group.zeta(j * a)
        comps.append(total)
    return LambdaVector(ell, tuple(comps))


def c_from_lambda(group: CyclicGroup, lam: LambdaVector) -> ClassParameter:
    """Inverse transform c_a = (1/ell) sum_j (lambda_j - 1) zeta^(-j a)."""
    ell = group.ell
    if lam.ell != ell:
        raise ParameterError(f"lambda for ell = {lam.ell} used with ell = {ell}")
    total = regular_trace(group, lam)
    if total != ell:
        raise ParameterError(
            f"sum of lambda components is {total}, but it must equal ell = {ell} "
            "(the identity coefficient of Lambda is 1)")
    return ClassParameter(ell, tuple(_inverse_dft(group, [x - 1 for x in lam.components])[1:]))


def tangent_c_from_lambda(group: CyclicGroup, lam_hat: Sequence) -> list:
    """Linearised inverse transform for parameter directions (sum of lam_hat is 0)."""
    if len(lam_hat) != group.ell:
        raise ParameterError("direction has the wrong length")
    if simplify(sum(lam_hat, Fraction(0))) != 0:
        raise ParameterError("lambda direction must have zero sum")
    return _inverse_dft(group, lam_hat)[1:]


def tangent_lambda_from_c(group: CyclicGroup, c_hat: Sequence) -> list:
    ell = group.ell
    if len(c_hat) != ell - 1:
        raise ParameterError("direction has the wrong length")
    out = []
    for j in range(ell):
        total = Cyclotomic.from_rational(ell, 0)
        for a in range(1, ell):
            total = total + c_hat[a - 1] * group.zeta(j * a)
        out.append(simplify(total))
    return out


def _inverse_dft(group: CyclicGroup, values: Sequence) -> list:
    ell = group.ell
    out = []
    for a in range(ell):
        total = Cyclotomic.from_rational(ell, 0)
        for j, v in enumerate(values):
            if v:
                total = total + v * group.zeta(-j * a)
        out.append(simplify(total / ell))
    return out


def regular_trace(group: CyclicGroup, lam: LambdaVector):
    """lambda . delta, the trace of Lambda on the regular representation."""
    return lam.dot(group.delta)
