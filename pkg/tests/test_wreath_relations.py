from fractions import Fraction

import pytest

from wreathsra.gamma import c_from_lambda
from wreathsra.jobs import parse_job
from wreathsra.selftest import DEFAULT_CATALOG
from wreathsra.wreath import build_induced, check_R1_R2, parameter_at
from wreathsra.wreath.relations import report_to_json

from .conftest import lam


@pytest.fixture
def scalar(g2):
    return build_induced(g2, lam(0, 2), (2,), [(2,)], [(1, 0)])


@pytest.mark.parametrize("case", DEFAULT_CATALOG, ids=[c["name"] for c in DEFAULT_CATALOG])
def test_base_point_satisfies_relations(case):
    job = parse_job(case)
    m = build_induced(job.group, job.lam, job.composition, job.partitions, job.roots)
    assert check_R1_R2(m, parameter_at(m, 0, c_from_lambda(job.group, job.lam)))["ok"]


@pytest.mark.parametrize("k", [Fraction(0), Fraction(3, 10), Fraction(-7, 2), Fraction(100)])
def test_scalar_module_on_hyperplane(scalar, k):
    report = check_R1_R2(scalar, parameter_at(scalar, k, [-1 - k]))
    assert report["ok"]


def test_scalar_module_off_hyperplane(scalar):
    report = check_R1_R2(scalar, parameter_at(scalar, Fraction(3, 10), [Fraction(-1)]))
    assert not report["R1_ok"] and report["R2_ok"]


def test_nonzero_k_breaks_dim3_module(g2):
    # matrices built at k = 0 do not satisfy the relations at k != 0 when D > 1
    m = build_induced(g2, lam(-2, 4), (2,), [(2,)], [(2, 1)])
    c0 = c_from_lambda(g2, lam(-2, 4))
    assert not check_R1_R2(m, parameter_at(m, Fraction(1, 10), c0))["ok"]


def test_report_json_is_plain(scalar):
    out = report_to_json(check_R1_R2(scalar, parameter_at(scalar, 0, [-1])))
    assert out["ok"] is True
