"""Partitions, Young diagrams and symmetric-group characters.

Partitions are tuples of positive ints, largest part first.  Cell (i, j)
(row i, column j, both 0-indexed) has content j - i.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .linalg import SparseMatrix

Partition = tuple


class PartitionError(ValueError):
    pass


def as_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise PartitionError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise PartitionError(f"partition parts must be weakly decreasing: {p}")
    return p


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    def rec(rest, largest):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail
    yield from rec(n, n)


def conjugate(mu: Partition) -> Partition:
    return tuple(sum(1 for r in mu if r > j) for j in range(mu[0])) if mu else ()


def cells(mu: Partition) -> Iterator[tuple[int, int]]:
    for i, r in enumerate(mu):
        for j in range(r):
            yield i, j


def hook_length(mu: Partition, i: int, j: int) -> int:
    return mu[i] - j + conjugate(mu)[j] - i - 1


def dim_irrep(mu: Sequence[int]) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    mu = as_partition(mu)
    n = sum(mu)
    conj = conjugate(mu)
    prod = 1
    for i, j in cells(mu):
        prod *= mu[i] - j + conj[j] - i - 1
    return factorial(n) // prod


def content(mu: Sequence[int]) -> int:
    mu = as_partition(mu)
    return sum(j - i for i, j in cells(mu))


def num_corners(mu: Sequence[int]) -> int:
    mu = as_partition(mu)
    return len(set(mu))


def is_rectangle(mu: Sequence[int]) -> bool:
    return num_corners(mu) == 1


def rectangle_shape(mu: Sequence[int]) -> tuple[int, int]:
    """(height l, width m) of a rectangular diagram."""
    mu = as_partition(mu)
    if not is_rectangle(mu):
        raise PartitionError(f"{mu} is not a rectangle")
    return len(mu), mu[0]


def transposition_character(mu: Sequence[int]) -> Fraction:
    """chi_mu at a transposition: dim * content / (N choose 2)."""
    mu = as_partition(mu)
    n = sum(mu)
    if n < 2:
        raise PartitionError("S_N has no transpositions for N < 2")
    return Fraction(dim_irrep(mu) * content(mu), n * (n - 1) // 2)


# -- Murnaghan-Nakayama ----------------------------------------------------

def _beta_set(mu: Partition, length: int) -> tuple[int, ...]:
    mu = tuple(mu) + (0,) * (length - len(mu))
    return tuple(sorted((mu[i] + length - 1 - i for i in range(length)), reverse=True))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    length = len(b)
    parts = tuple(b[i] - (length - 1 - i) for i in range(length))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(mu: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not mu else 0
    k, rest = rho[0], rho[1:]
    length = len(mu)
    beta = _beta_set(mu, length)
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        # removing a k-rim hook; its height is the number of beads jumped over
        height = sum(1 for x in beta if nb < x < b)
        new = _from_beta([nb if x == b else x for x in beta])
        total += (-1) ** height * _mn(new, rest)
    return total


def mn_character(mu: Sequence[int], cycle_type: Sequence[int]) -> int:
    """Character value chi_mu(cycle_type) by the Murnaghan-Nakayama rule."""
    mu = as_partition(mu)
    rho = tuple(sorted((int(x) for x in cycle_type), reverse=True))
    if sum(mu) != sum(rho):
        raise PartitionError(f"|mu| = {sum(mu)} but the cycle type has size {sum(rho)}")
    return _mn(mu, rho)


# -- explicit representation matrices --------------------------------------

def standard_tableaux(mu: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Standard Young tableaux of shape mu (entries 1..N), in a fixed order."""
    mu = as_partition(mu)
    n = sum(mu)
    out = []

    def rec(rows, k):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(mu)):
            if len(rows[i]) < mu[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(rows, k + 1)
                rows[i].pop()

    rec([[] for _ in mu], 1)
    return out


def _positions(tab) -> dict[int, tuple[int, int]]:
    return {v: (i, j) for i, row in enumerate(tab) for j, v in enumerate(row)}


def seminormal_generators(mu: Sequence[int]) -> list[SparseMatrix]:
    """Matrices of s_1, ..., s_{N-1} in Young's seminormal form (rational entries).

    With r the axial distance c(k+1) - c(k) in tableau T and T' = s_k T:
    same row gives +1, same column -1; otherwise, if k+1 sits in a lower
    row of T than k, s_k T = T/r + T' and s_k T' = (1 - 1/r^2) T - T'/r.
    """
    mu = as_partition(mu)
    n = sum(mu)
    tabs = standard_tableaux(mu)
    index = {t: i for i, t in enumerate(tabs)}
    dim = len(tabs)
    gens = []
    for k in range(1, n):
        rows: dict[int, dict[int, Fraction]] = {}
        for t, ti in index.items():
            pos = _positions(t)
            (i1, j1), (i2, j2) = pos[k], pos[k + 1]
            if i1 == i2:
                rows.setdefault(ti, {})[ti] = Fraction(1)
                continue
            if j1 == j2:
                rows.setdefault(ti, {})[ti] = Fraction(-1)
                continue
            r = Fraction((j2 - i2) - (j1 - i1))
            swapped = tuple(tuple(k + 1 if v == k else k if v == k + 1 else v for v in row) for row in t)
            si = index[swapped]
            # matrix column ti holds the image of basis vector ti
            rows.setdefault(ti, {})[ti] = 1 / r
            if i2 > i1:
                rows.setdefault(si, {})[ti] = Fraction(1)
            else:
                rows.setdefault(si, {})[ti] = 1 - 1 / (r * r)
        gens.append(SparseMatrix(dim, dim, rows))
    return gens


def adjacent_decomposition(perm: Sequence[int]) -> list[int]:
    """Indices k (0-based, meaning s_{k+1}) with perm = s_{k_1} s_{k_2} ... s_{k_m}.

    perm is given in one-line notation on 0..N-1, perm[i] = sigma(i).
    """
    arr = list(perm)
    word = []
    # bubble sort: arr = sigma; right-multiplying by s_k swaps positions k, k+1
    changed = True
    while changed:
        changed = False
        for k in range(len(arr) - 1):
            if arr[k] > arr[k + 1]:
                arr[k], arr[k + 1] = arr[k + 1], arr[k]
                word.append(k)
                changed = True
    # arr * s_{w1} * ... * s_{wm} = id  =>  arr = s_{wm} ... s_{w1}
    return list(reversed(word))


def permutation_matrix_in_irrep(mu: Sequence[int], perm: Sequence[int],
                                gens: Sequence[SparseMatrix] | None = None) -> SparseMatrix:
    if gens is None:
        gens = seminormal_generators(mu)
    dim = dim_irrep(mu)
    out = SparseMatrix.identity(dim)
    for k in adjacent_decomposition(perm):
        out = out @ gens[k]
    return out
