"""Sparse exact linear algebra over Q or a cyclotomic field.

Entries may be :class:`fractions.Fraction` or :class:`~wreathsra.arith.Cyclotomic`;
nothing here ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .arith import Cyclotomic, embed_complex, simplify

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SparseMatrix:
    """Immutable-by-convention sparse matrix stored as ``{row: {col: value}}``."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, object]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        clean: dict[int, dict[int, object]] = {}
        for i, row in (rows or {}).items():
            r = {j: simplify(v) for j, v in row.items() if v}
            if r:
                clean[i] = r
        self.rows = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: _ONE} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "SparseMatrix":
        return cls(nrows, nrows if ncols is None else ncols)

    @classmethod
    def diag(cls, values: Sequence) -> "SparseMatrix":
        n = len(values)
        return cls(n, n, {i: {i: v} for i, v in enumerate(values)})

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return cls(nrows, ncols, {i: {j: v for j, v in enumerate(row)} for i, row in enumerate(data)})

    @classmethod
    def _wrap(cls, nrows, ncols, rows) -> "SparseMatrix":
        obj = object.__new__(cls)
        obj.nrows, obj.ncols, obj.rows = nrows, ncols, rows
        return obj

    # -- access -------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        return self.rows.get(i, {}).get(j, _ZERO)

    def items(self):
        for i, row in self.rows.items():
            for j, v in row.items():
                yield i, j, v

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def to_dense(self) -> list[list]:
        out = [[_ZERO] * self.ncols for _ in range(self.nrows)]
        for i, j, v in self.items():
            out[i][j] = v
        return out

    def to_complex(self):
        import numpy as np

        out = np.zeros(self.shape, dtype=complex)
        for i, j, v in self.items():
            out[i, j] = embed_complex(v)
        return out

    def columns(self) -> dict[int, dict[int, object]]:
        cols: dict[int, dict[int, object]] = {}
        for i, j, v in self.items():
            cols.setdefault(j, {})[i] = v
        return cols

    def is_zero(self) -> bool:
        return not self.rows

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in self.rows.items())

    def diagonal(self) -> list:
        return [self[i, i] for i in range(min(self.nrows, self.ncols))]

    def trace(self):
        total = _ZERO
        for i, r in self.rows.items():
            v = r.get(i)
            if v:
                total = total + v
        return simplify(total)

    # -- arithmetic ---------------------------------------------------------
    def _combine(self, other: "SparseMatrix", sign: int) -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            tgt = rows.setdefault(i, {})
            for j, v in r.items():
                nv = tgt.get(j, _ZERO) + (v if sign > 0 else -v)
                if nv:
                    tgt[j] = simplify(nv)
                else:
                    tgt.pop(j, None)
            if not tgt:
                del rows[i]
        return SparseMatrix._wrap(self.nrows, self.ncols, rows)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return SparseMatrix._wrap(self.nrows, self.ncols,
                                  {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def scale(self, s) -> "SparseMatrix":
        s = simplify(s)
        if not s:
            return SparseMatrix.zeros(self.nrows, self.ncols)
        return SparseMatrix._wrap(self.nrows, self.ncols,
                                  {i: {j: simplify(v * s) for j, v in r.items()} for i, r in self.rows.items()})

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        rows = {}
        orows = other.rows
        for i, r in self.rows.items():
            acc: dict[int, object] = {}
            for k, a in r.items():
                ork = orows.get(k)
                if not ork:
                    continue
                for j, b in ork.items():
                    acc[j] = acc.get(j, _ZERO) + a * b
            acc = {j: simplify(v) for j, v in acc.items() if v}
            if acc:
                rows[i] = acc
        return SparseMatrix._wrap(self.nrows, other.ncols, rows)

    def __pow__(self, n: int) -> "SparseMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            raise ValueError("negative powers are not supported; invert explicitly")
        result = SparseMatrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix._wrap(self.ncols, self.nrows, self.columns())

    def map(self, fn: Callable) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols,
                            {i: {j: fn(v) for j, v in r.items()} for i, r in self.rows.items()})

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        rows: dict[int, dict[int, object]] = {}
        for i, j, a in self.items():
            for p, q, b in other.items():
                rows.setdefault(i * other.nrows + p, {})[j * other.ncols + q] = simplify(a * b)
        return SparseMatrix._wrap(self.nrows * other.nrows, self.ncols * other.ncols, rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and (self - other).is_zero()

    def __hash__(self):
        raise TypeError("SparseMatrix is unhashable")

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b - b @ a


def block_diag(blocks: Sequence[SparseMatrix]) -> SparseMatrix:
    rows: dict[int, dict[int, object]] = {}
    r0 = c0 = 0
    for b in blocks:
        for i, j, v in b.items():
            rows.setdefault(r0 + i, {})[c0 + j] = v
        r0 += b.nrows
        c0 += b.ncols
    return SparseMatrix._wrap(r0, c0, rows)


def permutation_inverse_matrix(m: SparseMatrix) -> SparseMatrix:
    """Inverse of a monomial matrix (one nonzero per row and column)."""
    rows: dict[int, dict[int, object]] = {}
    for i, j, v in m.items():
        rows.setdefault(j, {})[i] = simplify(1 / v)
    if len(rows) != m.nrows or m.nrows != m.ncols:
        raise ValueError("matrix is not monomial")
    return SparseMatrix._wrap(m.ncols, m.nrows, rows)


# ---------------------------------------------------------------------------
# elimination on sparse row vectors {col: value}

Row = dict


def _axpy(target: Row, factor, source: Row) -> None:
    """target -= factor * source, in place, dropping exact zeros."""
    for j, v in source.items():
        nv = target.get(j, _ZERO) - factor * v
        if nv:
            target[j] = nv
        else:
            target.pop(j, None)


class Echelon:
    """Incremental row echelon form with unit pivots.

    Rows are reduced against existing pivots as they are added, so every
    stored row has a distinct leading column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, Row] = {}

    def reduce(self, row: Row) -> Row:
        row = {j: v for j, v in row.items() if v}
        while row:
            lead = min(row)
            prow = self.pivots.get(lead)
            if prow is None:
                return row
            _axpy(row, row[lead], prow)
        return row

    def add(self, row: Mapping) -> bool:
        """Insert a row; returns True when it increased the rank."""
        row = self.reduce(dict(row))
        if not row:
            return False
        lead = min(row)
        inv = 1 / row[lead]
        self.pivots[lead] = {j: simplify(v * inv) for j, v in row.items()}
        return True

    def extend(self, rows: Iterable[Mapping]) -> "Echelon":
        for r in rows:
            self.add(r)
        return self

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(dict(row))

    def rref(self) -> list[tuple[int, Row]]:
        """Fully reduced rows sorted by pivot column."""
        order = sorted(self.pivots)
        reduced: dict[int, Row] = {}
        for p in reversed(order):
            row = dict(self.pivots[p])
            for q in [c for c in row if c != p and c in reduced]:
                _axpy(row, row[q], reduced[q])
            reduced[p] = {j: simplify(v) for j, v in row.items() if v}
        return [(p, reduced[p]) for p in order]

    def nullspace(self) -> list[Row]:
        rows = self.rref()
        pivset = {p for p, _ in rows}
        basis = []
        for f in range(self.ncols):
            if f in pivset:
                continue
            vec = {f: _ONE}
            for p, r in rows:
                v = r.get(f)
                if v:
                    vec[p] = simplify(-v)
            basis.append(vec)
        return basis


def rank(rows: Iterable[Mapping], ncols: int) -> int:
    return Echelon(ncols).extend(rows).rank


def rref_rows(rows: Iterable[Mapping], ncols: int) -> list[list]:
    """Canonical reduced row echelon form as dense rows."""
    ech = Echelon(ncols).extend(rows)
    return [[r.get(j, _ZERO) for j in range(ncols)] for _, r in ech.rref()]


def nullspace(rows: Iterable[Mapping], ncols: int) -> list[list]:
    ech = Echelon(ncols).extend(rows)
    return [[v.get(j, _ZERO) for j in range(ncols)] for v in ech.nullspace()]


def dense_to_row(vec: Sequence) -> Row:
    return {j: v for j, v in enumerate(vec) if v}


def same_row_space(a: Sequence[Sequence], b: Sequence[Sequence], ncols: int) -> bool:
    return rref_rows(map(dense_to_row, a), ncols) == rref_rows(map(dense_to_row, b), ncols)


def solve_affine(rows: Sequence[Sequence], rhs: Sequence, ncols: int):
    """Solve ``rows @ v = rhs`` exactly.

    Returns ``(point, directions)`` with free variables set to zero in the
    point, or ``None`` when the system is inconsistent.
    """
    aug = []
    for r, b in zip(rows, rhs):
        d = dense_to_row(r)
        if b:
            d[ncols] = simplify(b)
        aug.append(d)
    ech = Echelon(ncols + 1).extend(aug)
    if ncols in ech.pivots:
        return None
    point = [_ZERO] * ncols
    for p, r in ech.rref():
        point[p] = r.get(ncols, _ZERO)
    dirs = Echelon(ncols).extend(
        {j: v for j, v in r.items() if j < ncols} for r in aug
    ).nullspace()
    return point, [[d.get(j, _ZERO) for j in range(ncols)] for d in dirs]


# ---------------------------------------------------------------------------
# systems whose unknowns are matrices

class LinearSystem:
    """Homogeneous linear equations in matrix-valued and scalar unknowns.

    Matrix unknowns may be restricted to a support (set of allowed entries);
    entries outside the support are fixed at zero.  Each call to
    :meth:`add_matrix_equation` contributes one scalar equation per entry of
    the resulting matrix expression.
    """

    def __init__(self):
        self.ncols = 0
        self.matrix_vars: dict[str, tuple[tuple[int, int], dict[tuple[int, int], int]]] = {}
        self.scalar_vars: dict[str, int] = {}
        self.equations: list[Row] = []
        self.labels: list[str] = []

    def add_matrix_unknown(self, name: str, shape: tuple[int, int],
                           support: Iterable[tuple[int, int]] | None = None) -> None:
        if name in self.matrix_vars or name in self.scalar_vars:
            raise ValueError(f"duplicate unknown {name!r}")
        if support is None:
            support = ((i, j) for i in range(shape[0]) for j in range(shape[1]))
        index = {}
        for ij in sorted(set(support)):
            index[ij] = self.ncols
            self.ncols += 1
        self.matrix_vars[name] = (shape, index)

    def add_scalar_unknown(self, name: str) -> int:
        if name in self.matrix_vars or name in self.scalar_vars:
            raise ValueError(f"duplicate unknown {name!r}")
        self.scalar_vars[name] = self.ncols
        self.ncols += 1
        return self.ncols - 1

    def columns_of(self, name: str) -> list[int]:
        if name in self.scalar_vars:
            return [self.scalar_vars[name]]
        return sorted(self.matrix_vars[name][1].values())

    def add_matrix_equation(self, shape: tuple[int, int], terms: Sequence, label: str = "") -> None:
        """Add ``sum(terms) == 0`` entrywise.

        Each term is either ``(coef, L, name, R)`` meaning coef * L @ V @ R
        (L or R may be None for the identity) or ``(name, K)`` meaning the
        scalar unknown times the constant matrix K.
        """
        acc: dict[tuple[int, int], Row] = {}
        for term in terms:
            if len(term) == 2:
                name, K = term
                col = self.scalar_vars[name]
                for i, j, v in K.items():
                    row = acc.setdefault((i, j), {})
                    row[col] = row.get(col, _ZERO) + v
                continue
            coef, L, name, R = term
            (vr, vc), index = self.matrix_vars[name]
            lcols = L.columns() if L is not None else None
            rrows = R.rows if R is not None else None
            for (q, r), col in index.items():
                left = lcols.get(q, {}) if lcols is not None else {q: _ONE}
                right = rrows.get(r, {}) if rrows is not None else {r: _ONE}
                for p, lv in left.items():
                    lc = lv * coef
                    for s, rv in right.items():
                        row = acc.setdefault((p, s), {})
                        row[col] = row.get(col, _ZERO) + lc * rv
        for key in sorted(acc):
            row = {c: simplify(v) for c, v in acc[key].items() if v}
            if row:
                self.equations.append(row)
                self.labels.append(label)

    def add_row(self, row: Mapping, label: str = "") -> None:
        row = {c: simplify(v) for c, v in row.items() if v}
        if row:
            self.equations.append(row)
            self.labels.append(label)

    def vector_from_matrices(self, values: Mapping[str, SparseMatrix]) -> Row:
        """Coordinates of given matrix values; raises if outside the support."""
        vec: Row = {}
        for name, M in values.items():
            _, index = self.matrix_vars[name]
            for i, j, v in M.items():
                col = index.get((i, j))
                if col is None:
                    raise ValueError(f"entry {(i, j)} of {name} lies outside its support")
                vec[col] = v
        return vec

    def satisfied_by(self, vec: Mapping[int, object]) -> bool:
        """True when every equation vanishes at ``vec``."""
        for row in self.equations:
            total = _ZERO
            for c, v in row.items():
                x = vec.get(c)
                if x:
                    total = total + v * x
            if simplify(total):
                return False
        return True

    def matrices_from_vector(self, vec: Mapping[int, object]) -> dict[str, SparseMatrix]:
        out = {}
        for name, ((r, c), index) in self.matrix_vars.items():
            rows: dict[int, dict[int, object]] = {}
            for (i, j), col in index.items():
                v = vec.get(col)
                if v:
                    rows.setdefault(i, {})[j] = v
            out[name] = SparseMatrix(r, c, rows)
        return out

    def echelon(self, column_order: Sequence[int] | None = None) -> Echelon:
        """Echelon form; ``column_order`` lists original columns in elimination order."""
        if column_order is None:
            return Echelon(self.ncols).extend(self.equations)
        pos = {c: k for k, c in enumerate(column_order)}
        return Echelon(self.ncols).extend({pos[c]: v for c, v in r.items()} for r in self.equations)

