from fractions import Fraction

import pytest

from wreathsra.gamma import ClassParameter, c_from_lambda
from wreathsra.jobs import parse_job
from wreathsra.selftest import DEFAULT_CATALOG
from wreathsra.wreath import (PreconditionError, build_induced, first_order_deformation,
                              intersect_hyperplanes, linearized_residuals_vanish, module_hyperplanes,
                              parameter_at, tangent_matches)

from .conftest import lam
from .oracles import numeric_tangent, same_span


def build(case):
    job = parse_job(case)
    return build_induced(job.group, job.lam, job.composition, job.partitions, job.roots)


@pytest.fixture
def scalar(g2):
    return build_induced(g2, lam(0, 2), (2,), [(2,)], [(1, 0)])


def test_scalar_tangent(scalar):
    fo = first_order_deformation(scalar, ClassParameter(2, (Fraction(-1),)))
    assert fo.tangent_c == [[1, -1]]
    assert fo.codimension == 1 and fo.unique_modulo_trivial


def test_zero_direction_has_zero_correction(scalar):
    fo = first_order_deformation(scalar)
    corr = fo.correction([0, 0])
    assert all(m.is_zero() for m in corr["x"] + corr["y"])


def test_non_tangent_direction_rejected(scalar):
    fo = first_order_deformation(scalar)
    with pytest.raises(PreconditionError):
        fo.correction([1, 0])


def test_wrong_base_rejected(scalar):
    with pytest.raises(PreconditionError):
        first_order_deformation(scalar, ClassParameter(2, (Fraction(1),)))
    with pytest.raises(PreconditionError):
        first_order_deformation(scalar, parameter_at(scalar, 1, [-2]))


@pytest.mark.parametrize("case", DEFAULT_CATALOG, ids=[c["name"] for c in DEFAULT_CATALOG])
def test_catalog_tangent_equals_hyperplanes(case):
    m = build(case)
    fo = first_order_deformation(m)
    inter = intersect_hyperplanes(module_hyperplanes(m))
    assert inter.consistent
    assert tangent_matches(fo, inter.directions)
    assert fo.codimension == m.r
    assert fo.unique_modulo_trivial


@pytest.mark.parametrize("case", DEFAULT_CATALOG[:8], ids=[c["name"] for c in DEFAULT_CATALOG[:8]])
def test_corrections_checked_independently(case):
    # every basis direction has a correction that satisfies the linearised relations,
    # evaluated directly rather than through the solver's linear system
    m = build(case)
    fo = first_order_deformation(m)
    for d in fo.tangent_c:
        assert linearized_residuals_vanish(m, fo, d, fo.correction(d))


def test_dim3_needs_nonzero_correction(g2):
    m = build_induced(g2, lam(-2, 4), (2,), [(2,)], [(2, 1)])
    fo = first_order_deformation(m)
    (d,) = fo.tangent_c
    corr = fo.correction(d)
    assert d[0] != 0
    assert not all(x.is_zero() for x in corr["x"] + corr["y"])
    # dropping the correction breaks the linearised relations
    zero = {"x": [x.scale(0) for x in corr["x"]], "y": [y.scale(0) for y in corr["y"]]}
    assert not linearized_residuals_vanish(m, fo, d, zero)


def test_non_rectangle_shrinks_locus(g2):
    m = build_induced(g2, lam(0, 2), (3,), [(2, 1)], [(1, 0)], check_hypotheses=False)
    fo = first_order_deformation(m)
    naive = intersect_hyperplanes(module_hyperplanes(m, naive=True))
    assert naive.codimension == 1
    assert fo.codimension == 2


@pytest.mark.parametrize("case", DEFAULT_CATALOG, ids=[c["name"] for c in DEFAULT_CATALOG])
def test_exact_tangent_matches_float_oracle(case):
    m = build(case)
    fo = first_order_deformation(m)
    assert same_span(numeric_tangent(m), fo.tangent_c)


def test_adjacent_simples_have_no_tangent(g3):
    # both routes agree that k is obstructed when Ext^1 between the blocks is nonzero
    m = build_induced(g3, lam(0, 0, 3), (1, 1), [(1,), (1,)], [(1, 0, 0), (0, 1, 0)],
                      check_hypotheses=False)
    fo = first_order_deformation(m)
    assert fo.tangent_c == [] and fo.codimension == 3
    assert numeric_tangent(m).shape[0] == 0
    inter = intersect_hyperplanes(module_hyperplanes(m))
    assert inter.codimension == 2
