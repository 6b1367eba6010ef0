"""Exact linear algebra over a field context.

Matrices are dense, immutable tuples of field elements.  Subspaces are kept
as reduced row echelon bases, so two equal subspaces have identical
representations and containment reduces to pivot elimination.  The wedge
helpers coordinatize the n-th exterior power of a 2n-dimensional space by
colexicographic rank of n-element index subsets.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

from .field import FieldCtx, FieldElem

Vector = tuple[FieldElem, ...]


def as_vector(ctx: FieldCtx, entries: Iterable) -> Vector:
    return tuple(ctx(e) for e in entries)


class Matrix:
    """A rows x cols matrix over one field context, row-major and immutable."""

    __slots__ = ("ctx", "rows", "cols", "entries", "_h")

    def __init__(self, ctx: FieldCtx, rows: int, cols: int, entries: Iterable):
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        self.entries = tuple(ctx(e) for e in entries)
        if len(self.entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(self.entries)}")
        self._h = hash((ctx, rows, cols, self.entries))

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence]) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(ctx, nrows, ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "Matrix":
        return cls(ctx, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "Matrix":
        return cls(ctx, rows, cols, [0] * (rows * cols))

    def entry(self, r: int, c: int) -> FieldElem:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> Vector:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def row_list(self) -> list[Vector]:
        return [self.row(r) for r in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.ctx, self.cols, self.rows,
                      [self.entry(r, c) for c in range(self.cols) for r in range(self.rows)])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        zero = self.ctx.zero()
        out = []
        for r in range(self.rows):
            row = self.row(r)
            for c in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + row[k] * other.entry(k, c)
                out.append(acc)
        return Matrix(self.ctx, self.rows, other.cols, out)

    def apply(self, v: Sequence[FieldElem]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        zero = self.ctx.zero()
        out = []
        for r in range(self.rows):
            row = self.row(r)
            acc = zero
            for k in range(self.cols):
                acc = acc + row[k] * v[k]
            out.append(acc)
        return tuple(out)

    def det(self) -> FieldElem:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return _det_rows([list(self.row(r)) for r in range(self.rows)], self.ctx)

    def inverse(self) -> "Matrix":
        """Inverse of a 2x2 matrix (all the artifact ever inverts)."""
        if self.rows != 2 or self.cols != 2:
            raise ValueError("inverse implemented for 2x2 matrices only")
        a, b, c, d = self.entries
        det = a * d - b * c
        if not det:
            raise ZeroDivisionError("matrix is singular")
        inv = det.inverse()
        return Matrix(self.ctx, 2, 2, [d * inv, -b * inv, -c * inv, a * inv])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return self._h

    def __repr__(self):
        body = "; ".join(" ".join(repr(e) for e in self.row(r)) for r in range(self.rows))
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


def _rref_rows(rows: list[list[FieldElem]], ncols: int) -> tuple[list[list[FieldElem]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        lead = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank of a matrix."""
    rows, pivots = _rref_rows([list(m.row(r)) for r in range(m.rows)], m.cols)
    return Matrix.from_rows(m.ctx, rows) if rows else m, len(pivots)


def _det_rows(rows: list[list[FieldElem]], ctx: FieldCtx) -> FieldElem:
    n = len(rows)
    sign_flip = False
    det = ctx.one()
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return ctx.zero()
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign_flip = not sign_flip
        det = det * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return -det if sign_flip else det


class Subspace:
    """A subspace of F^d held by its canonical reduced row echelon basis."""

    __slots__ = ("ctx", "ambient_dim", "basis", "pivots", "_h")

    def __init__(self, ctx: FieldCtx, ambient_dim: int,
                 basis: tuple[Vector, ...], pivots: tuple[int, ...]):
        self.ctx = ctx
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots
        self._h = hash((ctx, ambient_dim, basis))

    @classmethod
    def from_vectors(cls, ctx: FieldCtx, ambient_dim: int,
                     vectors: Iterable[Sequence]) -> "Subspace":
        rows = [[ctx(e) for e in v] for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise ValueError("vector length differs from ambient dimension")
        reduced, pivots = _rref_rows(rows, ambient_dim)
        basis = tuple(tuple(r) for r in reduced[:len(pivots)])
        return cls(ctx, ambient_dim, basis, tuple(pivots))

    @classmethod
    def zero(cls, ctx: FieldCtx, ambient_dim: int) -> "Subspace":
        return cls(ctx, ambient_dim, (), ())

    @classmethod
    def full(cls, ctx: FieldCtx, ambient_dim: int) -> "Subspace":
        return cls.from_vectors(ctx, ambient_dim, Matrix.identity(ctx, ambient_dim).row_list())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence[FieldElem]) -> Vector:
        """Residual of v after eliminating along the basis pivots."""
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        out = list(v)
        for row, c in zip(self.basis, self.pivots):
            f = out[c]
            if f:
                out = [x - f * y for x, y in zip(out, row)]
        return tuple(out)

    def contains_vector(self, v: Sequence[FieldElem]) -> bool:
        return not any(self.reduce(v))

    def contains(self, inner: "Subspace") -> bool:
        """True iff every basis row of ``inner`` lies in this row space.

        Equivalent to the rank of the stacked basis matrix staying equal to
        this subspace's dimension; computed by eliminating each row of
        ``inner`` against the canonical pivots.
        """
        if inner.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains_vector(row) for row in inner.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return self._h

    def __repr__(self):
        rows = ["[" + ", ".join(repr(e) for e in row) + "]" for row in self.basis]
        return f"Subspace(dim={self.dim} of {self.ambient_dim}: {'; '.join(rows)})"


class SemilinearMap:
    """v -> matrix . frobenius^twist(v), with frobenius applied entrywise."""

    __slots__ = ("matrix", "twist")

    def __init__(self, matrix: Matrix, twist: int = 1):
        if twist < 0:
            raise ValueError("twist power must be >= 0")
        self.matrix = matrix
        self.twist = twist

    def apply(self, v: Sequence[FieldElem]) -> Vector:
        twisted = tuple(x.frobenius(self.twist) for x in v)
        return self.matrix.apply(twisted)

    __call__ = apply

    def __repr__(self):
        return f"SemilinearMap(twist={self.twist}, matrix={self.matrix!r})"


# -- exterior power coordinates ---------------------------------------------


def wedge_basis_index(n: int, subset: Sequence[int]) -> int:
    """Colexicographic rank of an n-element subset of {0, ..., 2n-1}."""
    sub = tuple(subset)
    if len(sub) != n or any(sub[i] >= sub[i + 1] for i in range(len(sub) - 1)):
        raise ValueError("subset must be strictly increasing of size n")
    if sub and (sub[0] < 0 or sub[-1] >= 2 * n):
        raise ValueError("subset entries must lie in {0, ..., 2n-1}")
    return sum(comb(s, j + 1) for j, s in enumerate(sub))


def wedge_basis_subsets(n: int) -> list[tuple[int, ...]]:
    """All n-element subsets of {0, ..., 2n-1} in colexicographic order."""
    return sorted(combinations(range(2 * n), n), key=lambda s: tuple(reversed(s)))


def _wedge_expand(vectors: Sequence[Vector], n: int, ctx: FieldCtx) -> Vector:
    """Coordinates of v_1 ^ ... ^ v_n in the colex wedge basis of F^(2n)."""
    acc: dict[tuple[int, ...], FieldElem] = {(): ctx.one()}
    for v in vectors:
        support = [(j, c) for j, c in enumerate(v) if c]
        nxt: dict[tuple[int, ...], FieldElem] = {}
        for subset, coeff in acc.items():
            for j, c in support:
                if j in subset:
                    continue
                pos = sum(1 for s in subset if s < j)
                term = coeff * c
                if (len(subset) - pos) % 2:
                    term = -term
                key_list = list(subset)
                key_list.insert(pos, j)
                key = tuple(key_list)
                prev = nxt.get(key)
                total = term if prev is None else prev + term
                if total:
                    nxt[key] = total
                elif prev is not None:
                    del nxt[key]
        acc = nxt
    dim = comb(2 * n, n)
    zero = ctx.zero()
    coords = [zero] * dim
    for subset, coeff in acc.items():
        coords[wedge_basis_index(n, subset)] = coeff
    return tuple(coords)


def wedge_of_lines(lines: Sequence[Subspace]) -> Subspace:
    """Wedge n block-supported lines of F^(2n) into a line of the n-th
    exterior power.

    Line i must be one-dimensional and supported in coordinates
    {2i, 2i+1}; the blocks are pairwise disjoint and increasing, so the
    product expansion needs no sign bookkeeping.
    """
    n = len(lines)
    if n == 0:
        raise ValueError("need at least one line")
    ctx = lines[0].ctx
    ambient = 2 * n
    coeff_pairs = []
    for i, line in enumerate(lines):
        if line.dim != 1 or line.ambient_dim != ambient:
            raise ValueError(f"input {i} is not a line of a {ambient}-dim space")
        row = line.basis[0]
        if any(row[j] for j in range(ambient) if j not in (2 * i, 2 * i + 1)):
            raise ValueError(f"line {i} is not supported in block {{{2 * i}, {2 * i + 1}}}")
        coeff_pairs.append((row[2 * i], row[2 * i + 1]))
    dim = comb(ambient, n)
    zero = ctx.zero()
    coords = [zero] * dim
    for eps in product((0, 1), repeat=n):
        coeff = ctx.one()
        for i, e in enumerate(eps):
            coeff = coeff * coeff_pairs[i][e]
            if not coeff:
                break
        if coeff:
            subset = tuple(2 * i + e for i, e in enumerate(eps))
            coords[wedge_basis_index(n, subset)] = coeff
    return Subspace.from_vectors(ctx, dim, [coords])


@lru_cache(maxsize=None)
def induced_filtration(omega: Subspace, m: int) -> Subspace:
    """The m-th piece of the filtration that an n-dimensional subspace of
    F^(2n) induces on the n-th exterior power.

    The piece is the span of all wedges with at least m factors drawn from
    ``omega`` and the remaining factors from a full basis of the ambient
    space; here the full basis is omega's own basis extended by the standard
    vectors at its non-pivot columns, which spans the same subspace with far
    fewer wedges.  Piece 0 is the whole exterior power and piece n is the
    top wedge of omega.  Results are cached; inputs are immutable.
    """
    ambient = omega.ambient_dim
    if ambient % 2:
        raise ValueError("ambient dimension must be even")
    n = ambient // 2
    if omega.dim != n:
        raise ValueError(f"omega must have dimension {n}, got {omega.dim}")
    if not 0 <= m <= n:
        raise ValueError(f"filtration index must be in [0, {n}], got {m}")
    ctx = omega.ctx
    zero = ctx.zero()
    one = ctx.one()
    complement = []
    pivot_set = set(omega.pivots)
    for c in range(ambient):
        if c not in pivot_set:
            complement.append(tuple(one if j == c else zero for j in range(ambient)))
    spanning = []
    for j in range(m, n + 1):
        for part_a in combinations(omega.basis, j):
            for part_b in combinations(complement, n - j):
                spanning.append(_wedge_expand(list(part_a) + list(part_b), n, ctx))
    return Subspace.from_vectors(ctx, comb(ambient, n), spanning)
