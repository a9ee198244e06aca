"""The induced module M = (+)_l sigma_l M' with explicit generator matrices.

M' = W_1 (x) ... (x) W_r (x) Y_1^{(x)N_1} (x) ... (x) Y_r^{(x)N_r}, with the
parabolic S_N1 x ... x S_Nr acting on W and permuting tensor slots, and
the j-th copy of the rank-one algebra acting on slot j.  Basis vectors are
triples (coset l, W-basis index, Y multi-index over the slots of M').

For sigma in S_N, sigma sigma_l = sigma_h sigma' with sigma' in the
parabolic subgroup, and sigma (sigma_l (x) m) = sigma_h (x) sigma' m.
An element of the slot algebra at slot i acts on sigma_l (x) m through
slot sigma_l^-1(i) of M'.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial, prod
from typing import Sequence

from ..arith import Cyclotomic
from ..gamma import CyclicGroup, LambdaVector, ParameterError
from ..linalg import SparseMatrix
from ..rankone import build_simple, ext1_dim
from ..symcomb import (adjacent_decomposition, as_partition, dim_irrep, is_rectangle,
                       permutation_matrix_in_irrep, seminormal_generators)
from .group import WreathElement, compose, invert

#: refuse modules larger than this
MAX_DIMENSION = 2000


class HypothesisError(ValueError):
    """The requested data fail a hypothesis the deformation construction needs."""


class DimensionLimitError(ValueError):
    pass


def block_of_slots(composition: Sequence[int]) -> tuple[int, ...]:
    out = []
    for b, nb in enumerate(composition):
        out.extend([b] * nb)
    return tuple(out)


def _multiset_words(counts: Sequence[int]):
    """Words with counts[b] letters b, in lexicographic order."""
    n = sum(counts)
    if n == 0:
        yield ()
        return
    for b, cb in enumerate(counts):
        if cb:
            rest = list(counts)
            rest[b] -= 1
            for tail in _multiset_words(rest):
                yield (b,) + tail


def coset_representatives(composition: Sequence[int]) -> list[tuple[int, ...]]:
    """Minimal-length representatives of S_N / S_N1 x ... x S_Nr.

    A left coset is determined by where each block lands; the representative
    maps the slots of every block increasingly onto their image.  The identity
    comes first.
    """
    blocks = block_of_slots(composition)
    starts = [sum(composition[:b]) for b in range(len(composition))]
    reps = []
    for word in _multiset_words(composition):
        sigma = [0] * len(blocks)
        seen = [0] * len(composition)
        for pos, b in enumerate(word):
            sigma[starts[b] + seen[b]] = pos
            seen[b] += 1
        reps.append(tuple(sigma))
    return reps


def _coset_word(sigma: Sequence[int], blocks: Sequence[int]) -> tuple[int, ...]:
    inv = invert(sigma)
    return tuple(blocks[inv[i]] for i in range(len(sigma)))


@dataclass(eq=False)
class InducedModule:
    group: CyclicGroup
    lam: LambdaVector
    composition: tuple
    partitions: tuple
    simples: tuple
    cosets: tuple
    dim_w: tuple
    dim_y: tuple
    # generator matrices: s_{i,i+1} for i = 0..N-2, gamma_1, x_i and y_i
    swaps: list = field(repr=False, default_factory=list)
    gamma1: SparseMatrix | None = field(repr=False, default=None)
    gammas: list = field(repr=False, default_factory=list)
    x: list = field(repr=False, default_factory=list)
    y: list = field(repr=False, default_factory=list)
    chars: list = field(repr=False, default_factory=list)
    hypotheses_checked: bool = True
    _w_gens: list = field(repr=False, default_factory=list)
    cache: dict = field(repr=False, default_factory=dict)

    @property
    def ell(self) -> int:
        return self.group.ell

    @property
    def n_slots(self) -> int:
        return sum(self.composition)

    @property
    def r(self) -> int:
        return len(self.composition)

    @property
    def n_cosets(self) -> int:
        return len(self.cosets)

    @property
    def dim(self) -> int:
        return len(self.chars)

    @property
    def blocks(self) -> tuple[int, ...]:
        return block_of_slots(self.composition)

    @property
    def block_starts(self) -> tuple[int, ...]:
        return tuple(sum(self.composition[:b]) for b in range(self.r))

    def expected_dim(self) -> int:
        n = factorial(self.n_slots) // prod(factorial(k) for k in self.composition)
        return n * prod(self.dim_w) * prod(d ** k for d, k in zip(self.dim_y, self.composition))

    def rho(self, g: WreathElement) -> SparseMatrix:
        """Matrix of an arbitrary group element, as a product of stored generators."""
        if g.n != self.n_slots or g.ell != self.ell:
            raise ValueError("element of a different wreath product")
        out = SparseMatrix.identity(self.dim)
        for k in adjacent_decomposition(g.perm):
            out = out @ self.swaps[k]
        diag = [Cyclotomic.zeta(self.ell, sum(a * p for a, p in zip(g.twist, ch))) for ch in self.chars]
        return out @ SparseMatrix.diag(diag)

    def gamma_power(self, i: int, a: int) -> SparseMatrix:
        return SparseMatrix.diag([Cyclotomic.zeta(self.ell, a * ch[i]) for ch in self.chars])

    def isotypic_projector(self, i: int, j: int) -> SparseMatrix:
        """Projection onto vectors on which gamma_i acts by zeta^j."""
        return SparseMatrix.diag([Fraction(1 if ch[i] == j % self.ell else 0) for ch in self.chars])

    def summary(self) -> dict:
        return {
            "ell": self.ell,
            "lambda": self.lam.to_json(),
            "composition": list(self.composition),
            "partitions": [list(p) for p in self.partitions],
            "roots": [list(s.alpha) for s in self.simples],
            "n_cosets": self.n_cosets,
            "dim": self.dim,
            "hypotheses_checked": self.hypotheses_checked,
        }


def _w_matrix(partitions, w_gens, sigma_prime, starts, composition) -> SparseMatrix:
    """rho_W of a parabolic permutation: tensor product of per-block irreps."""
    out = SparseMatrix.identity(1)
    for b, mu in enumerate(partitions):
        s0, nb = starts[b], composition[b]
        local = tuple(sigma_prime[s0 + t] - s0 for t in range(nb))
        out = out.kron(permutation_matrix_in_irrep(mu, local, w_gens[b]))
    return out


def verify_hypotheses(group: CyclicGroup, lam: LambdaVector, partitions, simples) -> None:
    for mu in partitions:
        if not is_rectangle(mu):
            raise HypothesisError(f"W = {tuple(mu)} is not a rectangular Young diagram")
    roots = [s.alpha for s in simples]
    if len(set(roots)) != len(roots):
        raise HypothesisError(f"the simples must be pairwise non-isomorphic; got roots {roots}")
    for a in range(len(simples)):
        for b in range(len(simples)):
            if a != b and ext1_dim(simples[a], simples[b], lam):
                raise HypothesisError(
                    f"Ext^1(Y_{a + 1}, Y_{b + 1}) != 0 for roots {simples[a].alpha}, {simples[b].alpha}")


def build_induced(group: CyclicGroup, lam: LambdaVector, composition: Sequence[int],
                  partitions: Sequence[Sequence[int]], roots: Sequence[Sequence[int]],
                  check_hypotheses: bool = True) -> InducedModule:
    """Construct M at k = 0.  ``check_hypotheses=False`` is a test hook."""
    composition = tuple(int(n) for n in composition)
    if not composition or any(n <= 0 for n in composition):
        raise ValueError(f"composition must consist of positive integers: {composition}")
    if not (len(partitions) == len(roots) == len(composition)):
        raise ValueError("composition, partitions and roots need the same length")
    partitions = tuple(as_partition(mu) for mu in partitions)
    for b, (mu, nb) in enumerate(zip(partitions, composition)):
        if sum(mu) != nb:
            raise ValueError(f"partition {mu} does not have size N_{b + 1} = {nb}")
    if lam.ell != group.ell:
        raise ParameterError("lambda has the wrong length")
    simples = tuple(build_simple(group, lam, a) for a in roots)
    if check_hypotheses:
        verify_hypotheses(group, lam, partitions, simples)
    elif len({s.alpha for s in simples}) != len(simples):
        # repeated roots break the block structure even with the checks off
        raise HypothesisError("repeated roots are not supported")

    n = sum(composition)
    blocks = block_of_slots(composition)
    starts = tuple(sum(composition[:b]) for b in range(len(composition)))
    cosets = coset_representatives(composition)
    dim_w = tuple(dim_irrep(mu) for mu in partitions)
    dim_y = tuple(s.dim for s in simples)
    slot_dims = [dim_y[blocks[j]] for j in range(n)]
    dw = prod(dim_w)
    dy = prod(slot_dims)
    total = len(cosets) * dw * dy
    if total > MAX_DIMENSION:
        raise DimensionLimitError(f"module dimension {total} exceeds the limit {MAX_DIMENSION}")

    y_indices = list(product(*[range(d) for d in slot_dims]))
    y_pos = {t: k for k, t in enumerate(y_indices)}

    def index(l, w, yk):
        return (l * dw + w) * dy + yk

    w_gens = [seminormal_generators(mu) for mu in partitions]
    coset_pos = {_coset_word(s, blocks): l for l, s in enumerate(cosets)}

    # characters of gamma_i on every basis vector
    chars = []
    for l, sigma in enumerate(cosets):
        inv = invert(sigma)
        for w in range(dw):
            for yt in y_indices:
                chars.append(tuple(simples[blocks[inv[i]]].chars[yt[inv[i]]] for i in range(n)))

    swaps = []
    for k in range(n - 1):
        s = list(range(n))
        s[k], s[k + 1] = s[k + 1], s[k]
        rows: dict[int, dict[int, object]] = {}
        for l, sigma_l in enumerate(cosets):
            ss = compose(s, sigma_l)
            h = coset_pos[_coset_word(ss, blocks)]
            sp = compose(invert(cosets[h]), ss)
            wmat = _w_matrix(partitions, w_gens, sp, starts, composition)
            for yt in y_indices:
                new = [0] * n
                for j in range(n):
                    new[sp[j]] = yt[j]
                ynew = y_pos[tuple(new)]
                yold = y_pos[yt]
                for wi, wj, v in wmat.items():
                    rows.setdefault(index(h, wi, ynew), {})[index(l, wj, yold)] = v
        swaps.append(SparseMatrix(total, total, rows))

    xs, ys = [], []
    for i in range(n):
        xr: dict[int, dict[int, object]] = {}
        yr: dict[int, dict[int, object]] = {}
        for l, sigma in enumerate(cosets):
            j = invert(sigma)[i]
            simple = simples[blocks[j]]
            for w in range(dw):
                for yt in y_indices:
                    col = index(l, w, y_pos[yt])
                    for target, src in ((xr, simple.X), (yr, simple.Y)):
                        for a, v in src.columns().get(yt[j], {}).items():
                            nt = list(yt)
                            nt[j] = a
                            target.setdefault(index(l, w, y_pos[tuple(nt)]), {})[col] = v
        xs.append(SparseMatrix(total, total, xr))
        ys.append(SparseMatrix(total, total, yr))

    module = InducedModule(group, lam, composition, partitions, simples, tuple(cosets),
                           dim_w, dim_y, swaps=swaps, x=xs, y=ys, chars=chars,
                           hypotheses_checked=check_hypotheses, _w_gens=w_gens)
    module.gammas = [module.gamma_power(i, 1) for i in range(n)]
    module.gamma1 = module.gammas[0]
    return module


def check_group_relations(module: InducedModule) -> dict[str, bool]:
    """Coxeter relations, gamma^ell = 1 and sigma gamma_i sigma^-1 = gamma_sigma(i)."""
    n, ell, D = module.n_slots, module.ell, module.dim
    one = SparseMatrix.identity(D)
    s = module.swaps
    ok_sq = all(m @ m == one for m in s)
    ok_braid = all(s[k] @ s[k + 1] @ s[k] == s[k + 1] @ s[k] @ s[k + 1] for k in range(n - 2))
    ok_far = all(s[a] @ s[b] == s[b] @ s[a] for a in range(n - 1) for b in range(a + 2, n - 1))
    ok_gamma = module.gamma1 ** ell == one
    ok_conj = True
    for k in range(n - 1):
        for i in range(n):
            si = k + 1 if i == k else k if i == k + 1 else i
            if s[k] @ module.gammas[i] != module.gammas[si] @ s[k]:
                ok_conj = False
    # x_i, y_i transform like vectors of V under the group
    ok_vec = True
    zeta = Cyclotomic.zeta(ell)
    for k in range(n - 1):
        for i in range(n):
            si = k + 1 if i == k else k if i == k + 1 else i
            ok_vec &= s[k] @ module.x[i] == module.x[si] @ s[k]
            ok_vec &= s[k] @ module.y[i] == module.y[si] @ s[k]
    for i in range(n):
        for j in range(n):
            g = module.gammas[j]
            w = zeta if i == j else Cyclotomic.from_rational(ell, 1)
            ok_vec &= g @ module.x[i] == (module.x[i] @ g).scale(w)
            ok_vec &= g @ module.y[i] == (module.y[i] @ g).scale(w.inverse())
    return {
        "involutions": ok_sq,
        "braid": ok_braid,
        "commuting": ok_far,
        "gamma_order": ok_gamma,
        "semidirect": ok_conj,
        "equivariance": bool(ok_vec),
    }
