"""Trace conditions cutting out the deformation locus.

Multiply R1 at an anchor slot s of block i by P_i, the product over the slots
outside block i of a central element Z(i) of C[Gamma] with Tr_{Y_b} Z(i) = 1
for b != i and 0 for b = i.  P_i commutes with x_s, y_s, so the left side
has trace zero and the trace of the right side is a linear form in (k, c).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial, prod

from ..arith import Cyclotomic, scalar_to_json, simplify
from ..linalg import SparseMatrix
from ..rankone import SimpleModule, central_with_traces
from .hyperplane import Hyperplane, module_hyperplanes
from .induced import InducedModule
from .relations import t_operator


@dataclass(frozen=True)
class TraceForm:
    """constant + k_coeff * k + sum_a c_coeffs[a-1] * c_a."""
    block: int
    anchor: int
    constant: object
    k_coeff: object
    c_coeffs: tuple
    central: tuple          # u_a of Z(i)

    def row(self) -> list:
        return [self.constant, self.k_coeff, *self.c_coeffs]

    def to_json(self) -> dict:
        return {
            "block": self.block + 1,
            "anchor_slot": self.anchor + 1,
            "constant": scalar_to_json(self.constant),
            "k": scalar_to_json(self.k_coeff),
            "c": [scalar_to_json(v) for v in self.c_coeffs],
            "central_element": [scalar_to_json(u) for u in self.central],
        }


def _slot_central(module: InducedModule, slot: int, u) -> SparseMatrix:
    ell = module.ell
    vals = []
    for ch in module.chars:
        total = Cyclotomic.from_rational(ell, 0)
        for a, ua in enumerate(u):
            if ua:
                total = total + ua * Cyclotomic.zeta(ell, a * ch[slot])
        vals.append(simplify(total))
    return SparseMatrix.diag(vals)


def projector_p(module: InducedModule, block: int) -> tuple[SparseMatrix, list]:
    targets = [Fraction(0) if b == block else Fraction(1) for b in range(module.r)]
    u = central_with_traces(module.simples, targets)
    P = SparseMatrix.identity(module.dim)
    for slot, b in enumerate(module.blocks):
        if b != block:
            P = P @ _slot_central(module, slot, u)
    return P, u


def trace_condition(module: InducedModule, block: int, c0=None) -> TraceForm:
    """Trace of (RHS of R1 at the first slot of the block) * P_block, as a form in (k, c).

    ``c0`` is accepted for symmetry with the solver; the form does not depend on it.
    """
    if not 0 <= block < module.r:
        raise ValueError(f"block index {block} out of range for r = {module.r}")
    anchor = module.block_starts[block]
    P, u = projector_p(module, block)
    constant = P.trace()
    k_coeff = simplify((t_operator(module, anchor) @ P).trace() / 2)
    c_coeffs = tuple(simplify((module.gamma_power(anchor, a) @ P).trace()) for a in range(1, module.ell))
    return TraceForm(block, anchor, simplify(constant), k_coeff, c_coeffs, tuple(u))


def expected_multiplier(module: InducedModule, block: int):
    """a * (dim Y_i)^(N_i - 1) * prod dim W_j with a = (N - N_i)! / prod_{j != i} N_j!."""
    n_i = module.composition[block]
    a = factorial(module.n_slots - n_i) // prod(
        factorial(nb) for b, nb in enumerate(module.composition) if b != block)
    return a * module.dim_y[block] ** (n_i - 1) * prod(module.dim_w)


def proportional_to(form: TraceForm, plane: Hyperplane):
    """The exact scalar t with form = t * plane, or None if not proportional."""
    target = [plane.constant, plane.k_coeff, *plane.c_coeffs]
    mine = form.row()
    t = None
    for f, h in zip(mine, target):
        if h:
            t = simplify(f / h) if t is None else t
            break
    if t is None:
        return None if any(mine) else Fraction(0)
    if all(not simplify(f - t * h) for f, h in zip(mine, target)):
        return t
    return None


def check_trace_conditions(module: InducedModule, naive: bool = False) -> list[dict]:
    planes = module_hyperplanes(module, naive=naive)
    out = []
    for b in range(module.r):
        form = trace_condition(module, b)
        t = proportional_to(form, planes[b])
        out.append({
            "block": b,
            "form": form,
            "hyperplane": planes[b],
            "multiplier": t,
            "expected_multiplier": expected_multiplier(module, b),
            "ok": t is not None and t == expected_multiplier(module, b),
        })
    return out


def tensor_swap_trace(simple: SimpleModule, n: int, j: int, twist: int = 0):
    """Tr of s_{1j} gamma_1^twist gamma_j^-twist on Y^{(x) n}, from an explicit permutation.

    Built independently of the induced-module code: basis = multi-indices,
    the swap exchanges factors 0 and j.
    """
    if not 0 < j < n:
        raise ValueError("need 0 < j < n")
    d = simple.dim
    G = simple.G
    total = Cyclotomic.from_rational(simple.ell, 0)
    for t in product(range(d), repeat=n):
        swapped = list(t)
        swapped[0], swapped[j] = t[j], t[0]
        if tuple(swapped) != t:
            continue
        # diagonal twist acts before the swap
        w = G[t[0], t[0]] ** twist * G[t[j], t[j]] ** (-twist) if twist else 1
        total = total + w
    return simplify(total)


__all__ = [
    "TraceForm",
    "check_trace_conditions",
    "expected_multiplier",
    "projector_p",
    "proportional_to",
    "tensor_swap_trace",
    "trace_condition",
]
