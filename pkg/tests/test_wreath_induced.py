from itertools import permutations
from math import factorial

import pytest

from wreathsra.gamma import CyclicGroup
from wreathsra.jobs import parse_job
from wreathsra.selftest import DEFAULT_CATALOG
from wreathsra.wreath import (HypothesisError, WreathElement, all_elements, build_induced,
                              check_group_relations, coset_representatives)

from .conftest import lam


def catalog_modules():
    for case in DEFAULT_CATALOG:
        job = parse_job(case, name=case["name"])
        yield case["name"], build_induced(job.group, job.lam, job.composition, job.partitions, job.roots)


@pytest.mark.parametrize("comp", [(2,), (1, 1), (2, 1), (1, 2), (2, 2), (1, 1, 1), (3, 1)])
def test_coset_representatives(comp):
    reps = coset_representatives(comp)
    n = sum(comp)
    count = factorial(n)
    for nb in comp:
        count //= factorial(nb)
    assert len(reps) == count
    assert reps[0] == tuple(range(n))
    # increasing on each block, and distinct cosets
    start = 0
    for nb in comp:
        for rep in reps:
            assert list(rep[start:start + nb]) == sorted(rep[start:start + nb])
        start += nb
    assert len(set(reps)) == len(reps)


def test_scalar_module(g2):
    m = build_induced(g2, lam(0, 2), (2,), [(2,)], [(1, 0)])
    assert m.dim == 1 == m.expected_dim()


def test_column_sign(g2):
    m = build_induced(g2, lam(0, 2), (2,), [(1, 1)], [(1, 0)])
    assert m.rho(WreathElement.swap(2, 2, 0, 1)).to_dense() == [[-1]]


def test_dimension_formula(g2):
    m = build_induced(g2, lam(-2, 4), (3,), [(3,)], [(2, 1)])
    assert m.dim == 27 == m.expected_dim()


def test_rank_one_is_unchanged(g2):
    m = build_induced(g2, lam(-2, 4), (1,), [(1,)], [(2, 1)])
    assert m.dim == 3
    assert m.x[0] == m.simples[0].X and m.y[0] == m.simples[0].Y


def test_adjacent_simples_rejected(g3):
    # Ext^1 between the two one-dimensional simples is 1 (see test_rankone)
    with pytest.raises(HypothesisError):
        build_induced(g3, lam(0, 0, 3), (1, 1), [(1,), (1,)], [(1, 0, 0), (0, 1, 0)])
    m = build_induced(g3, lam(0, 0, 3), (1, 1), [(1,), (1,)], [(1, 0, 0), (0, 1, 0)],
                      check_hypotheses=False)
    assert m.dim == 2 and m.n_cosets == 2


def test_non_rectangle_rejected(g2):
    with pytest.raises(HypothesisError):
        build_induced(g2, lam(0, 2), (3,), [(2, 1)], [(1, 0)])


def test_bad_inputs(g2):
    with pytest.raises(ValueError):
        build_induced(g2, lam(0, 2), (2,), [(3,)], [(1, 0)])
    with pytest.raises(ValueError):
        build_induced(g2, lam(0, 2), (2,), [(2,)], [(0, 1)])


@pytest.mark.parametrize("name,module", list(catalog_modules()), ids=lambda v: v if isinstance(v, str) else "")
def test_group_relations_on_catalog(name, module):
    assert all(check_group_relations(module).values())
    assert module.dim == module.expected_dim()


def test_rho_is_homomorphism_by_brute_force():
    m = build_induced(CyclicGroup(4), lam(2, 0, 2, 0), (2, 1), [(2,), (1,)], [(0, 1, 0, 0), (0, 0, 0, 1)])
    elems = list(all_elements(4, 3))
    rhos = {(g.perm, g.twist): m.rho(g) for g in elems}
    for g in elems[::7]:
        for h in elems[::11]:
            gh = g * h
            assert rhos[(gh.perm, gh.twist)] == rhos[(g.perm, g.twist)] @ rhos[(h.perm, h.twist)]


def test_character_of_induced_module():
    # one-dimensional Y's and trivial W: on S_3 this is the permutation module on 3 points
    m = build_induced(CyclicGroup(4), lam(2, 0, 2, 0), (2, 1), [(2,), (1,)], [(0, 1, 0, 0), (0, 0, 0, 1)])
    for perm in permutations(range(3)):
        fixed = sum(1 for i in range(3) if perm[i] == i)
        assert m.rho(WreathElement(4, perm, (0, 0, 0))).trace() == fixed
