"""Elements of the wreath product S_N x| (Z/ell)^N.

An element ``(sigma, a)`` stands for ``sigma * gamma_1^a_1 ... gamma_N^a_N``
with the twist applied first.  Permutations are one-line tuples on 0..N-1
and compose as functions: ``(sigma tau)(i) = sigma(tau(i))``.  With these
conventions ``sigma gamma_i sigma^-1 = gamma_sigma(i)`` and

    (sigma, a)(tau, b) = (sigma tau, a o tau + b).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from ..arith import Cyclotomic
from ..linalg import SparseMatrix, rank


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    return tuple(sigma[t] for t in tau)


def invert(sigma: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(sigma)
    for i, s in enumerate(sigma):
        out[s] = i
    return tuple(out)


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


@dataclass(frozen=True)
class WreathElement:
    ell: int
    perm: tuple
    twist: tuple

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
        twist = tuple(int(a) % self.ell for a in self.twist)
        if len(twist) != len(perm):
            raise ValueError("twist length differs from the permutation size")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "twist", twist)

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, ell: int, n: int) -> "WreathElement":
        return cls(ell, tuple(range(n)), (0,) * n)

    @classmethod
    def gamma(cls, ell: int, n: int, i: int, power: int = 1) -> "WreathElement":
        """gamma_i^power (slot i, 0-based)."""
        tw = [0] * n
        tw[i] = power
        return cls(ell, tuple(range(n)), tuple(tw))

    @classmethod
    def swap(cls, ell: int, n: int, i: int, j: int) -> "WreathElement":
        return cls(ell, transposition(n, i, j), (0,) * n)

    @classmethod
    def s_gamma(cls, ell: int, n: int, i: int, j: int, power: int) -> "WreathElement":
        """s_ij gamma_i^power gamma_j^-power, a reflection of type (S)."""
        tw = [0] * n
        tw[i] = power
        tw[j] = -power
        return cls(ell, transposition(n, i, j), tuple(tw))

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        if (self.ell, self.n) != (other.ell, other.n):
            raise ValueError("elements of different wreath products")
        perm = compose(self.perm, other.perm)
        twist = tuple(self.twist[other.perm[j]] + other.twist[j] for j in range(self.n))
        return WreathElement(self.ell, perm, twist)

    def inverse(self) -> "WreathElement":
        inv = invert(self.perm)
        # (sigma, a)^-1 = (sigma^-1, -a o sigma^-1)
        return WreathElement(self.ell, inv, tuple(-self.twist[inv[j]] for j in range(self.n)))

    def __pow__(self, k: int) -> "WreathElement":
        out = WreathElement.identity(self.ell, self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def vector_matrix(self) -> SparseMatrix:
        """Action on V = L^N in the basis x_1, y_1, ..., x_N, y_N."""
        n, ell = self.n, self.ell
        rows: dict[int, dict[int, object]] = {}
        for j in range(n):
            # gamma^a first on slot j, then slot j moves to sigma(j)
            a = self.twist[j]
            tgt = self.perm[j]
            rows.setdefault(2 * tgt, {})[2 * j] = Cyclotomic.zeta(ell, a)
            rows.setdefault(2 * tgt + 1, {})[2 * j + 1] = Cyclotomic.zeta(ell, -a)
        return SparseMatrix(2 * n, 2 * n, rows)

    def reflection_rank(self) -> int:
        """rank(Id - g) on V."""
        m = SparseMatrix.identity(2 * self.n) - self.vector_matrix()
        return rank((r for r in m.rows.values()), 2 * self.n)

    def is_symplectic_reflection(self) -> bool:
        return self.reflection_rank() == 2

    def reflection_type(self) -> str | None:
        """'S' for s_ij gamma_i gamma_j^-1, 'Gamma' for gamma_i (gamma != 1), else None."""
        moved = [i for i in range(self.n) if self.perm[i] != i]
        twisted = [i for i in range(self.n) if self.twist[i]]
        if len(moved) == 2 and set(twisted) <= set(moved):
            i, j = moved
            if (self.twist[i] + self.twist[j]) % self.ell == 0:
                return "S"
        if not moved and len(twisted) == 1:
            return "Gamma"
        return None


def all_elements(ell: int, n: int) -> Iterator[WreathElement]:
    for perm in permutations(range(n)):
        for twist in product(range(ell), repeat=n):
            yield WreathElement(ell, perm, twist)
