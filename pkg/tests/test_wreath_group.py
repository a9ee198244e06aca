import random
from itertools import product
from math import comb

import pytest

from wreathsra.wreath import WreathElement, all_elements
from wreathsra.wreath.group import compose, invert


def random_element(rng, ell, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return WreathElement(ell, tuple(perm), tuple(rng.randrange(ell) for _ in range(n)))


@pytest.mark.parametrize("ell,n", [(2, 2), (3, 2), (2, 3), (4, 3)])
def test_group_axioms(ell, n):
    rng = random.Random(ell * 10 + n)
    e = WreathElement.identity(ell, n)
    for _ in range(100):
        a, b, c = (random_element(rng, ell, n) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == e == a.inverse() * a
        assert a * e == a


@pytest.mark.parametrize("ell,n", [(2, 2), (3, 3)])
def test_vector_action_is_homomorphism(ell, n):
    rng = random.Random(5)
    for _ in range(50):
        a, b = random_element(rng, ell, n), random_element(rng, ell, n)
        assert (a * b).vector_matrix() == a.vector_matrix() @ b.vector_matrix()


@pytest.mark.parametrize("ell,n", [(2, 3), (3, 2), (3, 3), (4, 2)])
def test_semidirect_relation(ell, n):
    for perm in product(range(n), repeat=n):
        if sorted(perm) != list(range(n)):
            continue
        s = WreathElement(ell, perm, (0,) * n)
        for i in range(n):
            g = WreathElement.gamma(ell, n, i)
            assert s * g * s.inverse() == WreathElement.gamma(ell, n, perm[i])


@pytest.mark.parametrize("ell,n", [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
def test_reflection_census(ell, n):
    # type S: ell * C(n, 2) elements, type Gamma: n * (ell - 1) elements
    counts = {"S": 0, "Gamma": 0}
    for g in all_elements(ell, n):
        if g.is_symplectic_reflection():
            kind = g.reflection_type()
            assert kind is not None
            counts[kind] += 1
        else:
            assert g.reflection_type() is None
    assert counts == {"S": ell * comb(n, 2), "Gamma": n * (ell - 1)}


def test_order_of_elements():
    assert WreathElement.gamma(5, 2, 1) ** 5 == WreathElement.identity(5, 2)
    s = WreathElement.s_gamma(3, 3, 0, 2, 1)
    assert s * s == WreathElement.identity(3, 3)


def test_permutation_helpers():
    p = (2, 0, 1)
    assert compose(p, invert(p)) == (0, 1, 2)
    with pytest.raises(ValueError):
        WreathElement(2, (0, 0), (0, 0))
