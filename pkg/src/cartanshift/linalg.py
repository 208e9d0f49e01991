"""Exact linear algebra over a prime field F_q.

Vectors are sparse: a ``dict`` mapping coordinate index to a nonzero residue
in ``range(q)``.  Matrices keep one such dict per row.  The Cartan and
simplicial boundary matrices built elsewhere in the package are extremely
sparse, so elimination works on dicts and picks short vectors first, which
keeps fill-in small.  Dense coordinate matrices (generic changes of
coordinates) go through :func:`dense_pivots`, a numpy elimination.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from .errors import CompositionNotZero, DimensionMismatch

DEFAULT_PRIME = 2**31 - 1

Vector = dict


def is_prime(q: int) -> bool:
    """Deterministic Miller-Rabin, exact for q < 3.3 * 10^24."""
    if q < 2:
        return False
    bases = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for b in bases:
        if q % b == 0:
            return q == b
    d, s = q - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        x = pow(a, d, q)
        if x in (1, q - 1):
            continue
        for _ in range(s - 1):
            x = x * x % q
            if x == q - 1:
                break
        else:
            return False
    return True


def inverse(a: int, q: int) -> int:
    a %= q
    if a == 0:
        raise ZeroDivisionError("zero has no inverse in F_q")
    return pow(a, q - 2, q)


class Matrix:
    """Sparse ``nrows x ncols`` matrix over F_q, stored row by row."""

    __slots__ = ("nrows", "ncols", "q", "rows")

    def __init__(self, nrows: int, ncols: int, rows: list[Vector] | None = None,
                 q: int = DEFAULT_PRIME):
        self.nrows = nrows
        self.ncols = ncols
        self.q = q
        if rows is None:
            rows = [{} for _ in range(nrows)]
        if len(rows) != nrows:
            raise DimensionMismatch(f"expected {nrows} rows, got {len(rows)}")
        self.rows = rows

    @classmethod
    def from_dense(cls, data: Iterable[Iterable[int]], q: int = DEFAULT_PRIME,
                   ncols: int | None = None) -> "Matrix":
        dense = [list(r) for r in data]
        if ncols is None:
            ncols = len(dense[0]) if dense else 0
        rows = []
        for r in dense:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix")
            rows.append({c: x % q for c, x in enumerate(r) if x % q})
        return cls(len(dense), ncols, rows, q)

    @classmethod
    def from_columns(cls, nrows: int, columns: list[Vector],
                     q: int = DEFAULT_PRIME) -> "Matrix":
        rows: list[Vector] = [{} for _ in range(nrows)]
        for c, col in enumerate(columns):
            for r, x in col.items():
                rows[r][c] = x
        return cls(nrows, len(columns), rows, q)

    @classmethod
    def identity(cls, n: int, q: int = DEFAULT_PRIME) -> "Matrix":
        return cls(n, n, [{i: 1} for i in range(n)], q)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, q: int = DEFAULT_PRIME) -> "Matrix":
        return cls(nrows, ncols, None, q)

    def columns(self) -> list[Vector]:
        cols: list[Vector] = [{} for _ in range(self.ncols)]
        for r, row in enumerate(self.rows):
            for c, x in row.items():
                cols[c][r] = x
        return cols

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, self.columns(), self.q)

    def to_dense(self) -> list[list[int]]:
        out = []
        for row in self.rows:
            r = [0] * self.ncols
            for c, x in row.items():
                r[c] = x
            out.append(r)
        return out

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        q = self.q
        out = []
        orows = other.rows
        for row in self.rows:
            acc: Vector = {}
            for k, a in row.items():
                for c, b in orows[k].items():
                    acc[c] = (acc.get(c, 0) + a * b) % q
            out.append({c: x for c, x in acc.items() if x})
        return Matrix(self.nrows, other.ncols, out, q)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.q, self.rows) == (
            other.nrows, other.ncols, other.q, other.rows)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, q={self.q}, nnz={sum(map(len, self.rows))})"


class Echelon:
    """Incrementally maintained row echelon basis of a subspace of F_q^N.

    Every stored vector is monic at its leading (smallest) index and no two
    share a leading index.
    """

    __slots__ = ("q", "pivots")

    def __init__(self, q: int = DEFAULT_PRIME, vectors: Iterable[Vector] = ()):
        self.q = q
        self.pivots: dict[int, Vector] = {}
        for v in sorted(vectors, key=len):
            self.add(v)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Vector) -> Vector:
        """Subtract basis vectors until the leading index is not a pivot."""
        q = self.q
        pivots = self.pivots
        v = dict(v)
        while v:
            c = min(v)
            row = pivots.get(c)
            if row is None:
                break
            f = v[c]
            for k, x in row.items():
                y = (v.get(k, 0) - f * x) % q
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
        return v

    def add(self, v: Vector) -> bool:
        """Insert ``v``; return True iff it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        c = min(v)
        inv = pow(v[c], self.q - 2, self.q)
        q = self.q
        self.pivots[c] = {k: (x * inv) % q for k, x in v.items()}
        return True

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def reduced_rows(self) -> list[tuple[int, Vector]]:
        """Fully reduced basis as ``(pivot, row)`` pairs, pivots increasing."""
        q = self.q
        order = sorted(self.pivots)
        done: dict[int, Vector] = {}
        for c in reversed(order):
            row = dict(self.pivots[c])
            for k in sorted(k for k in row if k != c and k in done):
                f = row.get(k)
                if not f:
                    continue
                for kk, x in done[k].items():
                    y = (row.get(kk, 0) - f * x) % q
                    if y:
                        row[kk] = y
                    else:
                        row.pop(kk, None)
            done[c] = row
        return [(c, done[c]) for c in order]

    def normal_form(self, v: Vector) -> Vector:
        """Fully reduce ``v`` against the reduced basis (no pivot entries left)."""
        q = self.q
        v = {k: x % q for k, x in v.items() if x % q}
        for c, row in self.reduced_rows():
            f = v.get(c)
            if f:
                for k, x in row.items():
                    y = (v.get(k, 0) - f * x) % q
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        return v


class RREF(NamedTuple):
    rank: int
    pivots: list[int]
    basis: Matrix


def rank_of_vectors(vectors: Iterable[Vector], q: int = DEFAULT_PRIME) -> int:
    return Echelon(q, vectors).rank


def rank(m: Matrix) -> int:
    return rank_of_vectors(m.rows, m.q)


def rref(m: Matrix) -> RREF:
    ech = Echelon(m.q, m.rows)
    reduced = ech.reduced_rows()
    pivots = [c for c, _ in reduced]
    basis = Matrix(len(reduced), m.ncols, [row for _, row in reduced], m.q)
    return RREF(len(pivots), pivots, basis)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Sparse basis of ``{v : m v = 0}``, one vector per free column."""
    q = m.q
    reduced = Echelon(q, m.rows).reduced_rows()
    pivot_cols = {c for c, _ in reduced}
    # column f of the reduced matrix, read off pivot rows
    by_free: dict[int, Vector] = {}
    for c, row in reduced:
        for k, x in row.items():
            if k != c:
                by_free.setdefault(k, {})[c] = (-x) % q
    out = []
    for f in range(m.ncols):
        if f in pivot_cols:
            continue
        v = by_free.get(f, {})
        v[f] = 1
        out.append(v)
    return out


def apply(m: Matrix, v: Vector) -> Vector:
    q = m.q
    out: Vector = {}
    for r, row in enumerate(m.rows):
        s = 0
        for c, x in row.items():
            y = v.get(c)
            if y:
                s += x * y
        s %= q
        if s:
            out[r] = s
    return out


def homology_dim(boundary_in: Matrix, boundary_out: Matrix) -> int:
    """``dim ker(out) - rank(in)`` for ``A --in--> B --out--> C``."""
    if boundary_in.nrows != boundary_out.ncols:
        raise DimensionMismatch(
            f"in has {boundary_in.nrows} rows but out has {boundary_out.ncols} columns")
    if boundary_in.q != boundary_out.q:
        raise DimensionMismatch("matrices over different fields")
    if not (boundary_out @ boundary_in).is_zero():
        raise CompositionNotZero("out . in != 0")
    return boundary_out.ncols - rank(boundary_out) - rank(boundary_in)


def dense_pivots(rows: np.ndarray, q: int) -> list[int]:
    """Pivot columns of a row echelon form of a dense integer matrix mod q.

    Used for initial subspaces: with columns sorted from largest to smallest
    monomial the pivots are exactly the initial monomials.
    """
    if q >= 2**31:
        raise ValueError("dense elimination needs q < 2^31 to avoid int64 overflow")
    a = np.array(rows, dtype=np.int64) % q
    if a.ndim != 2 or a.size == 0:
        return []
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), q - 2, q)
        a[r, c:] = (a[r, c:] * inv) % q
        below = a[r + 1:, c]
        rows_nz = np.flatnonzero(below)
        if rows_nz.size:
            idx = rows_nz + r + 1
            f = a[idx, c][:, None]
            a[idx, c:] = (a[idx, c:] - (f * a[r, c:]) % q) % q
        pivots.append(c)
        r += 1
    return pivots


def matmul_mod(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    """``a @ b mod q`` for residues below 2^31 without int64 overflow.

    b is split into 16-bit limbs, so each partial product stays below 2^47
    and sums of up to 2^15 of them fit in int64.
    """
    if q >= 2**31:
        raise ValueError("dense products need q < 2^31 to avoid int64 overflow")
    a = np.asarray(a, dtype=np.int64) % q
    b = np.asarray(b, dtype=np.int64) % q
    if a.shape[-1] > 2**15:
        raise ValueError("inner dimension too large for limb splitting")
    lo = (a @ (b & 0xFFFF)) % q
    hi = (a @ (b >> 16)) % q
    return (lo + (hi << 16) % q) % q
