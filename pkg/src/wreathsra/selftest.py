"""Property suites run by ``wreathsra selftest``.

Each suite returns a :class:`SuiteResult`; a suite fails as soon as one of
its checks fails or raises, and the failing check is named in ``details``.
Catalog cases are job dictionaries (see ``schemas/job.schema.json``).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable

from . import roots as rootmod
from .gamma import CyclicGroup, LambdaVector, ParameterError, c_from_lambda
from .jobs import Job, parse_job
from .rankone import all_simples, build_simple, check_relations
from .symcomb import content, dim_irrep, mn_character, partitions, transposition_character
from .wreath import (HypothesisError, build_induced, check_group_relations, check_R1_R2,
                     check_trace_conditions, direction_for_k, first_order_deformation,
                     intersect_hyperplanes, module_hyperplanes, newton_continue, parameter_at,
                     tangent_matches, tensor_swap_trace)

#: cases passing every hypothesis check of build_induced
DEFAULT_CATALOG: list[dict] = [
    {"name": "ell2-trivial-N2", "ell": 2, "lambda": ["0", "2"], "composition": [2],
     "partitions": [[2]], "roots": [[1, 0]], "continue_k": "1/10"},
    {"name": "ell2-trivial-N3", "ell": 2, "lambda": ["0", "2"], "composition": [3],
     "partitions": [[3]], "roots": [[1, 0]]},
    {"name": "ell2-column-N2", "ell": 2, "lambda": ["0", "2"], "composition": [2],
     "partitions": [[1, 1]], "roots": [[1, 0]]},
    {"name": "ell2-column-N3", "ell": 2, "lambda": ["0", "2"], "composition": [3],
     "partitions": [[1, 1, 1]], "roots": [[1, 0]]},
    {"name": "ell2-square-N4", "ell": 2, "lambda": ["0", "2"], "composition": [4],
     "partitions": [[2, 2]], "roots": [[1, 0]]},
    {"name": "ell2-dim3-row", "ell": 2, "lambda": ["-2", "4"], "composition": [2],
     "partitions": [[2]], "roots": [[2, 1]], "continue_k": "1/10"},
    {"name": "ell2-dim3-column", "ell": 2, "lambda": ["-2", "4"], "composition": [2],
     "partitions": [[1, 1]], "roots": [[2, 1]]},
    {"name": "ell3-single-N2", "ell": 3, "lambda": ["0", "0", "3"], "composition": [2],
     "partitions": [[2]], "roots": [[1, 0, 0]], "continue_k": "1/10"},
    {"name": "ell3-dim2-row", "ell": 3, "lambda": ["1", "-1", "3"], "composition": [2],
     "partitions": [[2]], "roots": [[1, 1, 0]], "continue_k": "1/10"},
    {"name": "ell3-dim2-column", "ell": 3, "lambda": ["1", "-1", "3"], "composition": [2],
     "partitions": [[1, 1]], "roots": [[1, 1, 0]]},
    {"name": "ell4-pair-N2", "ell": 4, "lambda": ["2", "0", "2", "0"], "composition": [1, 1],
     "partitions": [[1], [1]], "roots": [[0, 1, 0, 0], [0, 0, 0, 1]], "continue_k": "1/10"},
    {"name": "ell4-pair-N3", "ell": 4, "lambda": ["2", "0", "2", "0"], "composition": [2, 1],
     "partitions": [[2], [1]], "roots": [[0, 1, 0, 0], [0, 0, 0, 1]]},
]


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int = 0
    details: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checks": self.checks, "details": self.details}


class _Suite:
    def __init__(self, name: str):
        self.result = SuiteResult(name, True)

    def check(self, label: str, fn: Callable[[], bool]) -> None:
        self.result.checks += 1
        try:
            ok = bool(fn())
            msg = None if ok else "check returned false"
        except Exception as exc:  # a failing check must not stop the report
            ok, msg = False, f"{type(exc).__name__}: {exc}"
        if not ok:
            self.result.passed = False
            self.result.details.append({"check": label, "error": msg})


def _build(job: Job, **kw):
    return build_induced(job.group, job.lam, job.composition, job.partitions, job.roots,
                         check_hypotheses=kw.get("check_hypotheses", job.check_hypotheses))


# -- suites -----------------------------------------------------------------

def suite_mckay(max_ell: int = 8) -> SuiteResult:
    s = _Suite("mckay")
    for ell in range(2, max_ell + 1):
        def run(ell=ell):
            q = rootmod.mckay_quiver(CyclicGroup(ell))
            expected = [[0] * ell for _ in range(ell)]
            for i in range(ell):
                expected[i][(i + 1) % ell] += 1
                expected[(i + 1) % ell][i] += 1
            delta = (1,) * ell
            a_delta = [sum(q.adjacency[i][j] * delta[j] for j in range(ell)) for i in range(ell)]
            return ([list(r) for r in q.adjacency] == expected and a_delta == [2] * ell
                    and rootmod.tits_form(q, delta) == 0)
        s.check(f"ell={ell}", run)
    return s.result


def random_lambda(rng: random.Random, ell: int) -> LambdaVector:
    vals = [Fraction(rng.randint(-6, 6), rng.choice((1, 1, 2, 3))) for _ in range(ell - 1)]
    vals.append(Fraction(ell) - sum(vals))
    return LambdaVector(ell, tuple(vals))


def suite_classification(seed: int = 0, samples: int = 100, max_ell: int = 5, bound: int = 10) -> SuiteResult:
    s = _Suite("classification")
    rng = random.Random(seed)
    for ell in range(2, max_ell + 1):
        group = CyclicGroup(ell)
        quiver = rootmod.mckay_quiver(group)
        for t in range(samples):
            lam = random_lambda(rng, ell)

            def run(lam=lam):
                r = rootmod.r_lambda(quiver, lam)
                boxed = [a for a in r if max(abs(x) for x in a) <= bound]
                if boxed != rootmod.brute_force_r_lambda(quiver, lam, bound):
                    return False
                sig = rootmod.sigma_lambda(quiver, r)
                return all(check_relations(m, lam) for m in all_simples(group, lam)) and len(sig) == len(
                    all_simples(group, lam))
            s.check(f"ell={ell} lambda={[str(x) for x in lam]}", run)
    return s.result


def suite_combinatorics(max_n: int = 8, max_side: int = 6) -> SuiteResult:
    s = _Suite("combinatorics")
    for n in range(2, max_n + 1):
        for mu in partitions(n):
            s.check(f"transposition {mu}",
                    lambda mu=mu, n=n: transposition_character(mu) == mn_character(mu, (2,) + (1,) * (n - 2)))
    for n in range(1, max_n + 1):
        s.check(f"sum dim^2 N={n}", lambda n=n: sum(dim_irrep(mu) ** 2 for mu in partitions(n)) == factorial(n))
    for l in range(1, max_side + 1):
        for m in range(1, max_side + 1):
            s.check(f"rectangle {l}x{m}",
                    lambda l=l, m=m: Fraction(content((m,) * l)) == Fraction(l * m * (m - l), 2))
    return s.result


def _case_name(case: dict, t: int) -> str:
    return case.get("name", f"case{t}")


def _for_each_case(suite: _Suite, catalog: Iterable[dict], fn: Callable[[Job], bool], tag: str = "") -> None:
    """Run ``fn`` on every parsed case; parse errors count as failures of this suite."""
    for t, case in enumerate(catalog):
        name = _case_name(case, t)
        suite.check(f"{name}{tag}", lambda case=case, name=name: fn(parse_job(case, name=name)))


def suite_group_relations(catalog) -> SuiteResult:
    s = _Suite("group-relations")

    def run(job):
        m = _build(job)
        base = parameter_at(m, 0, c_from_lambda(job.group, job.lam))
        return all(check_group_relations(m).values()) and m.dim == m.expected_dim() and check_R1_R2(m, base)["ok"]
    _for_each_case(s, catalog, run)
    return s.result


def suite_deformation(catalog) -> SuiteResult:
    s = _Suite("deformation")

    def run(job):
        m = _build(job)
        fo = first_order_deformation(m)
        inter = intersect_hyperplanes(module_hyperplanes(m))
        return (inter.consistent and tangent_matches(fo, inter.directions)
                and fo.codimension == m.r and fo.unique_modulo_trivial)
    _for_each_case(s, catalog, run)
    return s.result


def suite_trace(catalog) -> SuiteResult:
    s = _Suite("trace")

    def forms(job):
        return all(r["ok"] for r in check_trace_conditions(_build(job)))

    def identity(job):
        ell = job.group.ell
        for root in job.roots:
            y = build_simple(job.group, job.lam, root)
            if not all(tensor_swap_trace(y, n, j, tw) == y.dim ** (n - 1)
                       for n in (2, 3) for j in range(1, n) for tw in range(ell)):
                return False
        return True
    _for_each_case(s, catalog, forms)
    _for_each_case(s, catalog, identity, " tensor identity")
    return s.result


def suite_continuation(catalog, tolerance: float = 1e-9) -> SuiteResult:
    s = _Suite("continuation")

    def run(job):
        k_target = job.scalar("continue_k")
        m = _build(job)
        fo = first_order_deformation(m)
        d, step = direction_for_k(fo, k_target)
        return newton_continue(m, d, step, tolerance * 1e-2, first=fo).residual < tolerance
    _for_each_case(s, [c for c in catalog if "continue_k" in c], run)
    return s.result


def suite_negative_controls() -> SuiteResult:
    s = _Suite("negative-controls")
    g2 = CyclicGroup(2)
    lam = LambdaVector(2, (Fraction(0), Fraction(2)))

    def rejects_non_rectangle():
        try:
            build_induced(g2, lam, (3,), [(2, 1)], [(1, 0)])
        except HypothesisError:
            return True
        return False

    def bypass_shrinks():
        m = build_induced(g2, lam, (3,), [(2, 1)], [(1, 0)], check_hypotheses=False)
        fo = first_order_deformation(m)
        naive = intersect_hyperplanes(module_hyperplanes(m, naive=True))
        return fo.codimension > naive.codimension

    def rejects_zero_trace():
        try:
            rootmod.r_lambda(rootmod.mckay_quiver(g2), LambdaVector(2, (Fraction(1), Fraction(-1))))
        except ParameterError:
            return True
        return False

    def off_hyperplane_fails():
        m = build_induced(g2, lam, (2,), [(2,)], [(1, 0)])
        on = check_R1_R2(m, parameter_at(m, Fraction(3, 10), [Fraction(-13, 10)]))
        off = check_R1_R2(m, parameter_at(m, Fraction(3, 10), [Fraction(-1)]))
        return on["ok"] and not off["R1_ok"] and off["R2_ok"]

    s.check("non-rectangular W rejected", rejects_non_rectangle)
    s.check("bypassed non-rectangle shrinks the consistent set", bypass_shrinks)
    s.check("lambda . delta = 0 rejected", rejects_zero_trace)
    s.check("off-hyperplane parameters break R1", off_hyperplane_fails)
    return s.result


def run_all(catalog: list[dict] | None = None, seed: int = 0) -> list[SuiteResult]:
    catalog = DEFAULT_CATALOG if catalog is None else catalog
    return [
        suite_mckay(),
        suite_classification(seed=seed),
        suite_combinatorics(),
        suite_group_relations(catalog),
        suite_deformation(catalog),
        suite_trace(catalog),
        suite_continuation(catalog),
        suite_negative_controls(),
    ]
