from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from wreathsra.linalg import SparseMatrix
from wreathsra.symcomb import (PartitionError, adjacent_decomposition, as_partition, conjugate, content,
                               dim_irrep, is_rectangle, mn_character, num_corners, partitions,
                               permutation_matrix_in_irrep, rectangle_shape, seminormal_generators,
                               standard_tableaux, transposition_character)


def cycle_type(perm) -> tuple:
    seen, lengths = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        n, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def test_dim_examples():
    assert dim_irrep((5,)) == 1
    assert dim_irrep((2, 2)) == 2
    assert dim_irrep((2, 1)) == 2
    assert dim_irrep((3, 2)) == len(standard_tableaux((3, 2))) == 5


def test_content_examples():
    assert content((2, 2)) == 0
    for n in range(1, 9):
        assert content((n,)) == n * (n - 1) // 2


@pytest.mark.parametrize("l", range(1, 7))
@pytest.mark.parametrize("m", range(1, 7))
def test_rectangle_content(l, m):
    assert Fraction(content((m,) * l)) == Fraction(l * m * (m - l), 2)
    assert is_rectangle((m,) * l)
    assert rectangle_shape((m,) * l) == (l, m)   # (rows, columns)


def test_corners():
    assert num_corners((3, 3)) == 1
    assert num_corners((3, 1)) == 2
    assert num_corners((3, 2, 1)) == 3


def test_transposition_examples():
    assert transposition_character((4,)) == 1
    assert transposition_character((2, 2)) == 0
    assert transposition_character((1, 1, 1, 1)) == -1


def test_mn_examples():
    for mu in partitions(6):
        assert mn_character(mu, (1,) * 6) == dim_irrep(mu)
    assert mn_character((2, 2), (2, 1, 1)) == 0
    assert mn_character((5,), (3, 2)) == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_transposition_matches_mn(n):
    for mu in partitions(n):
        assert transposition_character(mu) == mn_character(mu, (2,) + (1,) * (n - 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_sum_of_squares(n):
    assert sum(dim_irrep(mu) ** 2 for mu in partitions(n)) == factorial(n)


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_conjugate_and_validation():
    assert conjugate((3, 1)) == (2, 1, 1)
    with pytest.raises(PartitionError):
        as_partition((1, 2))


@pytest.mark.parametrize("mu", [(3,), (2, 1), (2, 2), (3, 1), (2, 1, 1), (3, 2), (2, 2, 1)])
def test_seminormal_coxeter_relations(mu):
    gens = seminormal_generators(mu)
    one = SparseMatrix.identity(dim_irrep(mu))
    for k, s in enumerate(gens):
        assert s @ s == one
        if k + 1 < len(gens):
            t = gens[k + 1]
            assert s @ t @ s == t @ s @ t
        for t in gens[k + 2:]:
            assert s @ t == t @ s


@pytest.mark.parametrize("n", range(2, 6))
def test_irrep_characters_match_mn(n):
    # trace of the seminormal matrix of every permutation = MN character of its cycle type
    for mu in partitions(n):
        gens = seminormal_generators(mu)
        for perm in permutations(range(n)):
            tr = permutation_matrix_in_irrep(mu, perm, gens).trace()
            assert tr == mn_character(mu, cycle_type(perm))


@pytest.mark.parametrize("n", range(2, 6))
def test_adjacent_decomposition(n):
    for perm in permutations(range(n)):
        out = tuple(range(n))
        for k in adjacent_decomposition(perm):
            s = list(range(n))
            s[k], s[k + 1] = s[k + 1], s[k]
            out = compose(out, tuple(s))
        assert out == perm


@pytest.mark.parametrize("n", range(3, 6))
def test_irrep_is_homomorphism(n):
    mu = (n - 1, 1)
    gens = seminormal_generators(mu)
    perms = list(permutations(range(n)))
    for p in perms[::3]:
        for q in perms[::5]:
            lhs = permutation_matrix_in_irrep(mu, compose(p, q), gens)
            rhs = permutation_matrix_in_irrep(mu, p, gens) @ permutation_matrix_in_irrep(mu, q, gens)
            assert lhs == rhs
