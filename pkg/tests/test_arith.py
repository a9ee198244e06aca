from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathsra.arith import (Cyclotomic, FieldLimitError, OrderMismatchError, cyclotomic_polynomial,
                             embed_complex, euler_phi, parse_rational, scalar_from_json, scalar_to_json,
                             simplify)


@pytest.mark.parametrize("ell,poly", [(1, [-1, 1]), (2, [1, 1]), (4, [1, 0, 1]), (3, [1, 1, 1]),
                                      (6, [1, -1, 1])])
def test_cyclotomic_polynomial(ell, poly):
    assert cyclotomic_polynomial(ell) == poly


def test_degree_is_phi():
    for n in range(1, 30):
        assert len(cyclotomic_polynomial(n)) - 1 == euler_phi(n)


def test_zeta_squared_at_four():
    z = Cyclotomic.zeta(4)
    assert simplify(z * z) == -1


def test_inverse_of_zeta_at_four():
    z = Cyclotomic.zeta(4)
    assert z.inverse() == -z
    assert simplify(z * z.inverse()) == 1


def test_embed_examples():
    assert embed_complex(Cyclotomic.from_rational(5, 1)) == 1.0
    assert abs(embed_complex(Cyclotomic.zeta(4)) - 1j) < 1e-12
    assert abs(embed_complex(Cyclotomic.zeta(3) + Cyclotomic.zeta(3, 2)) + 1.0) < 1e-12


def test_zeta_powers_wrap():
    for ell in range(2, 9):
        assert Cyclotomic.zeta(ell, ell) == Cyclotomic.from_rational(ell, 1)
        assert Cyclotomic.zeta(ell, -1) == Cyclotomic.zeta(ell, ell - 1)


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        Cyclotomic.zeta(3) + Cyclotomic.zeta(4)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.from_rational(5, 0).inverse()


def test_degree_limit():
    with pytest.raises(FieldLimitError):
        Cyclotomic.zeta(1009)


def test_parse_and_json_roundtrip():
    assert parse_rational("-1/2") == Fraction(-1, 2)
    a = Cyclotomic.from_polynomial(5, [Fraction(1, 3), 0, Fraction(-2)])
    assert scalar_from_json(scalar_to_json(a), 5) == a
    assert scalar_from_json(scalar_to_json(Fraction(7, 3))) == Fraction(7, 3)


small = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def elements(ell):
    deg = len(cyclotomic_polynomial(ell)) - 1
    return st.lists(small, min_size=deg, max_size=deg).map(lambda c: Cyclotomic.from_polynomial(ell, c))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 8, 12]).flatmap(lambda ell: st.tuples(elements(ell), elements(ell))))
def test_embedding_is_multiplicative(pair):
    a, b = pair
    assert abs(embed_complex(a * b) - embed_complex(a) * embed_complex(b)) < 1e-9


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 5, 7, 9]).flatmap(elements))
def test_nonzero_elements_invert(a):
    if simplify(a) == 0:
        return
    assert simplify(a * a.inverse()) == 1
    assert abs(embed_complex(a.conjugate()) - embed_complex(a).conjugate()) < 1e-9


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 5, 8]).flatmap(lambda ell: st.tuples(elements(ell), elements(ell), elements(ell))))
def test_distributive(triple):
    a, b, c = triple
    assert a * (b + c) == a * b + a * c
