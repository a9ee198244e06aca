from fractions import Fraction

import numpy as np
import pytest

from wreathsra.gamma import ClassParameter
from wreathsra.jobs import parse_job
from wreathsra.selftest import DEFAULT_CATALOG
from wreathsra.wreath import (ContinuationError, PreconditionError, build_induced, direction_for_k,
                              first_order_deformation, newton_continue)
from wreathsra.wreath.continuation import _Problem

from .conftest import lam

BY_NAME = {c["name"]: c for c in DEFAULT_CATALOG}


def build(name):
    job = parse_job(BY_NAME[name])
    return build_induced(job.group, job.lam, job.composition, job.partitions, job.roots)


@pytest.fixture
def scalar():
    return build("ell2-trivial-N2")


@pytest.mark.parametrize("k", [Fraction(3, 10), Fraction(1, 10), Fraction(-2), Fraction(5)])
def test_scalar_closed_form(scalar, k):
    fo = first_order_deformation(scalar)
    d, step = direction_for_k(fo, k)
    res = newton_continue(scalar, d, step, first=fo)
    assert res.residual == 0.0
    assert res.k == k and res.c == (-1 - k,)
    assert np.all(res.x[0] == 0) and np.all(res.y[0] == 0)


def test_step_zero(scalar):
    fo = first_order_deformation(scalar)
    res = newton_continue(scalar, [1, -1], 0, first=fo)
    assert res.k == 0 and res.c == (-1,) and res.iterations == 0


@pytest.mark.parametrize("name", ["ell2-dim3-row", "ell3-dim2-row", "ell4-pair-N2", "ell3-single-N2"])
def test_reaches_k_one_tenth(name):
    m = build(name)
    fo = first_order_deformation(m)
    d, step = direction_for_k(fo, Fraction(1, 10))
    res = newton_continue(m, d, step, tolerance=1e-11, first=fo)
    assert res.residual < 1e-9
    assert abs(complex(res.k) - 0.1) < 1e-15


def test_residual_evaluator_is_independent_of_newton():
    # recompute the residual of the Newton output with freshly built constants
    m = build("ell2-dim3-row")
    fo = first_order_deformation(m)
    d, step = direction_for_k(fo, Fraction(1, 10))
    res = newton_continue(m, d, step, first=fo)
    p = _Problem(m)
    p.set_parameter(res.k, ClassParameter(2, res.c))
    vec = p.pack({"x": res.x, "y": res.y})
    assert np.max(np.abs(p.residual(vec))) < 1e-9


def test_jacobian_matches_finite_differences():
    m = build("ell3-dim2-row")
    p = _Problem(m)
    fo = first_order_deformation(m)
    p.set_parameter(Fraction(1, 10), fo.c0)
    rng = np.random.default_rng(1)
    v = rng.normal(size=p.nvars) + 1j * rng.normal(size=p.nvars)
    dv = rng.normal(size=p.nvars) + 1j * rng.normal(size=p.nvars)
    h = 1e-6
    fd = (p.residual(v + h * dv) - p.residual(v - h * dv)) / (2 * h)
    assert np.allclose(p.jacobian(v) @ dv, fd, atol=1e-6)


def test_non_tangent_direction(scalar):
    with pytest.raises(PreconditionError):
        newton_continue(scalar, [1, 0], Fraction(1, 10))


def test_failure_is_reported():
    m = build("ell2-dim3-row")
    fo = first_order_deformation(m)
    d, _ = direction_for_k(fo, 1)
    with pytest.raises(ContinuationError) as info:
        newton_continue(m, d, 50, tolerance=1e-14, substeps=1, max_iter=1, first=fo)
    assert info.value.report["substep"] == 1


def test_k_forced_to_zero_is_reported(g3):
    m = build_induced(g3, lam(0, 0, 3), (1, 1), [(1,), (1,)], [(1, 0, 0), (0, 1, 0)],
                      check_hypotheses=False)
    fo = first_order_deformation(m)
    with pytest.raises(PreconditionError):
        direction_for_k(fo, Fraction(1, 10))
