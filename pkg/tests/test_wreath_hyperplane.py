from fractions import Fraction

import pytest

from wreathsra.gamma import CyclicGroup
from wreathsra.wreath import (content_hyperplane, hyperplane, hyperplane_for_partition,
                              intersect_hyperplanes, tangent_lambda_space)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_row_hyperplane_ell2(g2, n):
    h = hyperplane(g2, (1, 0), m=n, l=1, n_i=n)
    assert (h.constant, h.k_coeff, tuple(h.c_coeffs)) == (1, n - 1, (1,))


def test_single_slot_has_no_k(g3):
    h = hyperplane(g3, (1, 1, 0), 1, 1)
    assert h.k_coeff == 0
    # lambda . alpha form
    assert h.evaluate_lambda(5, [Fraction(1), Fraction(-1), Fraction(3)]) == 0


def test_square_has_no_k(g3):
    assert hyperplane_for_partition(g3, (1, 1, 0), (2, 2)).k_coeff == 0


def test_rectangle_side_check(g2):
    with pytest.raises(ValueError):
        hyperplane(g2, (1, 0), 2, 2, n_i=3)
    with pytest.raises(ValueError):
        hyperplane_for_partition(g2, (1, 0), (2, 1))


def test_content_form_agrees_on_rectangles(g2):
    for mu in [(3,), (1, 1, 1), (2, 2), (3, 3), (2, 2, 2)]:
        a = content_hyperplane(g2, (2, 1), mu)
        b = hyperplane_for_partition(g2, (2, 1), mu)
        assert (a.k_coeff, a.c_coeffs, a.constant) == (b.k_coeff, b.c_coeffs, b.constant)


def test_evaluation_matches_lambda_form(g3):
    # constant + sum c_a chi(gamma^a) equals lambda . alpha for lambda built from c
    from wreathsra.gamma import ClassParameter, lambda_from_c
    h = hyperplane(g3, (1, 1, 0), 2, 1)
    c = ClassParameter(3, (Fraction(1, 2), Fraction(-3, 4)))
    lv = lambda_from_c(g3, c)
    assert h.evaluate(Fraction(2), list(c.values)) == h.evaluate_lambda(Fraction(2), lv.components)


def test_single_hyperplane(g2):
    s = intersect_hyperplanes([hyperplane(g2, (1, 0), 2, 1)])
    assert s.consistent and s.codimension == 1
    assert len(s.directions) == 1


def test_duplicate_hyperplane(g2):
    h = hyperplane(g2, (1, 0), 2, 1)
    assert intersect_hyperplanes([h, h]).codimension == 1


def test_two_single_slot_hyperplanes_ell3(g3):
    planes = [hyperplane(g3, (1, 0, 0), 1, 1), hyperplane(g3, (0, 1, 0), 1, 1)]
    s = intersect_hyperplanes(planes)
    assert s.consistent and s.codimension == 2
    assert len(s.directions) == 1 and s.directions[0][0] != 0     # k free
    lam_dirs = tangent_lambda_space(planes, 3)
    assert len(lam_dirs) == 1
    assert lam_dirs[0][1] == lam_dirs[0][2] == lam_dirs[0][3] == 0


def test_inconsistent_intersection(g2):
    a = hyperplane(g2, (1, 0), 1, 1)
    b = hyperplane(g2, (0, 1), 1, 1)   # lambda_0 = 0 and lambda_1 = 0 contradict sum = 2
    assert not intersect_hyperplanes([a, b]).consistent


def test_different_groups_rejected():
    with pytest.raises(ValueError):
        intersect_hyperplanes([hyperplane(CyclicGroup(2), (1, 0), 1, 1),
                               hyperplane(CyclicGroup(3), (1, 0, 0), 1, 1)])
