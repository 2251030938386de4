"""Deterministic exact linear algebra over Q and F_p.

Dense matrices, leftmost-pivot reduced row echelon form, kernels, column
spaces, and exact quotient spaces with coordinate maps.  Everything is
pure and reproducible: no pivoting heuristics, no randomization.  All
in-scope instances are small (degreewise dimensions of a few hundred at
most), so dense Fraction arithmetic is the right trade.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldMismatchError, FieldSpec


class ContainmentError(ValueError):
    """A claimed subspace is not contained in the ambient span."""


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over a fixed ground field."""

    field: FieldSpec
    nrows: int
    ncols: int
    rows: tuple

    @classmethod
    def from_rows(cls, field: FieldSpec, rows) -> "Matrix":
        coerced = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        ncols = len(coerced[0]) if coerced else 0
        for row in coerced:
            if len(row) != ncols:
                raise ValueError("ragged rows")
        return cls(field, len(coerced), ncols, coerced)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return cls(field, nrows, ncols, tuple(tuple(z for _ in range(ncols)) for _ in range(nrows)))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        cols = tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols))
        return Matrix(self.field, self.ncols, self.nrows, cols)

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        F = self.field
        out = []
        for row in self.rows:
            acc = F.zero()
            for a, x in zip(row, vec):
                acc = F.add(acc, F.mul(a, x))
            out.append(acc)
        return tuple(out)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatchError("matrix product across different fields")
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        F = self.field
        ot = other.transpose()
        rows = tuple(
            tuple(_dot(F, row, col) for col in ot.rows)
            for row in self.rows
        )
        return Matrix(F, self.nrows, other.ncols, rows)

    def is_zero(self) -> bool:
        F = self.field
        return all(F.is_zero(x) for row in self.rows for x in row)


def _dot(F: FieldSpec, u, v):
    acc = F.zero()
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


@dataclass(frozen=True)
class RowReduction:
    rref: Matrix
    rank: int
    pivot_cols: tuple


def row_reduce(m: Matrix) -> RowReduction:
    """Reduced row echelon form with leftmost pivots.

    Deterministic: the pivot of each step is the first nonzero entry in
    the leftmost eligible column, pivots are scaled to 1 and cleared
    above and below, so the output is the unique RREF of the row space.
    """
    F = m.field
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if not F.is_zero(rows[i][c]):
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and not F.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    rref = Matrix(F, nrows, ncols, tuple(tuple(row) for row in rows))
    return RowReduction(rref, len(pivots), tuple(pivots))


def kernel_basis(m: Matrix) -> list:
    """Echelonized basis of the null space {v : M v = 0}.

    One basis vector per free column, in column order, with a 1 in the
    free coordinate; deterministic.
    """
    F = m.field
    red = row_reduce(m)
    pivots = list(red.pivot_cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [F.zero()] * m.ncols
        v[fc] = F.one()
        for r, pc in enumerate(pivots):
            # pivot row r reads: x_pc + sum_{c>pc} a_c x_c = 0
            v[pc] = F.neg(red.rref.entry(r, fc))
        basis.append(tuple(v))
    return basis


def image_basis(m: Matrix) -> list:
    """Echelonized basis of the column space, as vectors of length nrows."""
    red = row_reduce(m.transpose())
    return [row for row in red.rref.rows[: red.rank]]


def rank(m: Matrix) -> int:
    return row_reduce(m).rank


class Echelon:
    """Incremental reduced-echelon store for a subspace of k^n.

    Supports exact membership, residual reduction, and growth one vector
    at a time; rows are kept fully reduced with unit pivots.
    """

    def __init__(self, field: FieldSpec, dim: int):
        self.field = field
        self.dim = dim
        self.rows: list = []
        self.pivots: list = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Residual of vec modulo the stored subspace."""
        F = self.field
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not F.is_zero(c):
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, vec) -> bool:
        F = self.field
        return all(F.is_zero(x) for x in self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert vec; returns True when it enlarged the subspace."""
        F = self.field
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if not F.is_zero(x)), None)
        if p is None:
            return False
        inv = F.inv(v[p])
        v = tuple(F.mul(inv, x) for x in v)
        at = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(at, list(v))
        self.pivots.insert(at, p)
        for i in range(len(self.rows)):
            if i == at:
                continue
            c = self.rows[i][p]
            if not F.is_zero(c):
                self.rows[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(self.rows[i], v)]
        return True

    def basis(self) -> list:
        return [tuple(r) for r in self.rows]


def span_coordinates(field: FieldSpec, span, vec):
    """Coordinates of vec in the given spanning vectors, or None.

    Solves span^T x = vec exactly; when the span is linearly dependent
    the leftmost-pivot solution is returned (free coefficients zero).
    """
    if not span:
        return () if all(field.is_zero(x) for x in vec) else None
    n = len(span[0])
    if len(vec) != n:
        raise ValueError("dimension mismatch")
    aug = Matrix.from_rows(
        field, [[span[j][i] for j in range(len(span))] + [vec[i]] for i in range(n)]
    )
    red = row_reduce(aug)
    if len(span) in red.pivot_cols:
        return None
    F = field
    coords = [F.zero()] * len(span)
    for r, p in enumerate(red.pivot_cols):
        coords[p] = red.rref.entry(r, len(span))
    return tuple(coords)


@dataclass
class QuotientSpace:
    """A quotient span/sub with chosen complement representatives.

    ``representatives`` are echelon-normalized vectors of the ambient
    space whose classes form a basis; :meth:`project` returns exact
    coordinates of a vector's class in that basis.
    """

    field: FieldSpec
    dim_ambient: int
    representatives: list
    _sub_ech: Echelon
    _rep_ech: Echelon

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def project(self, vec):
        residual = self._sub_ech.reduce(vec)
        coords = span_coordinates(self.field, self.representatives, residual)
        if coords is None:
            raise ContainmentError("vector not in the ambient span")
        return coords


def quotient_by(field: FieldSpec, span, sub) -> QuotientSpace:
    """Quotient of span(span) by span(sub), with coordinate maps.

    Raises :class:`ContainmentError` unless sub is contained in the
    ambient span.
    """
    if span:
        n = len(span[0])
    elif sub:
        n = len(sub[0])
    else:
        n = 0
    amb = Echelon(field, n)
    for v in span:
        amb.add(v)
    sub_ech = Echelon(field, n)
    for v in sub:
        if not amb.contains(v):
            raise ContainmentError("sub vector outside the ambient span")
        sub_ech.add(v)
    rep_ech = Echelon(field, n)
    reps = []
    seen = Echelon(field, n)
    for v in sub:
        seen.add(v)
    for v in span:
        residual = seen.reduce(v)
        if any(not field.is_zero(x) for x in residual):
            # normalize to a unit leading coefficient for determinism
            p = next(i for i, x in enumerate(residual) if not field.is_zero(x))
            inv = field.inv(residual[p])
            residual = tuple(field.mul(inv, x) for x in residual)
            reps.append(residual)
            rep_ech.add(residual)
            seen.add(residual)
    return QuotientSpace(field, n, reps, sub_ech, rep_ech)
