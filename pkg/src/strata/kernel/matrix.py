"""Dense exact matrices over Q or F_p.

Immutable after construction.  rank / kernel_basis / solve are exact: solve
re-multiplies to verify its answer, kernel columns multiply to exactly zero.
All elimination goes through the backend pair (fraction-free over Z for Q,
ordinary reduction mod p).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..errors import DimensionMismatch, FieldMismatch
from .backend import echelon_int, echelon_mod
from .fields import QQ, PrimeField


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries", "_echelon")

    def __init__(self, field, rows, cols, entries):
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows*cols} entries, got {len(entries)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)
        self._echelon = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != m:
                raise DimensionMismatch("ragged rows")
            flat.extend(field.coerce(x) for x in r)
        return cls(field, n, m, flat)

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field, n):
        e = [field.zero] * (n * n)
        for i in range(n):
            e[i * n + i] = field.one
        return cls(field, n, n, e)

    @classmethod
    def column(cls, field, vec):
        return cls(field, len(vec), 1, [field.coerce(x) for x in vec])

    @classmethod
    def from_columns(cls, field, cols_, nrows=None):
        cols_ = [list(c) for c in cols_]
        if not cols_:
            if nrows is None:
                raise DimensionMismatch("from_columns needs nrows when there are no columns")
            return cls.zeros(field, nrows, 0)
        n = len(cols_[0])
        return cls.from_rows(field, [[cols_[j][i] for j in range(len(cols_))] for i in range(n)])

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def row_list(self):
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def is_zero(self):
        z = self.field.is_zero
        return all(z(x) for x in self.entries)

    # -- arithmetic ----------------------------------------------------------

    def _same_field(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("add shape mismatch")
        add = self.field.add
        return Matrix(self.field, self.rows, self.cols, [add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("sub shape mismatch")
        sub = self.field.sub
        return Matrix(self.field, self.rows, self.cols, [sub(a, b) for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols, [neg(a) for a in self.entries])

    def scale(self, c):
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, [mul(c, a) for a in self.entries])

    def __mul__(self, other):
        self._same_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [f.zero] * (n * m)
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for t in range(k):
                x = arow[t]
                if f.is_zero(x):
                    continue
                boff = t * m
                ooff = i * m
                for j in range(m):
                    y = b[boff + j]
                    if not f.is_zero(y):
                        out[ooff + j] = f.add(out[ooff + j], f.mul(x, y))
        return Matrix(f, n, m, out)

    def transpose(self):
        e = self.entries
        c = self.cols
        return Matrix(self.field, c, self.rows, [e[i * c + j] for j in range(c) for i in range(self.rows)])

    def hstack(self, other):
        self._same_field(other)
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        rows = [self.row(i) + other.row(i) for i in range(self.rows)]
        return Matrix.from_rows(self.field, rows) if rows else Matrix.zeros(self.field, 0, self.cols + other.cols)

    def vstack(self, other):
        self._same_field(other)
        if self.cols != other.cols:
            raise DimensionMismatch("vstack col mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    # -- elimination ---------------------------------------------------------

    def _int_rows(self):
        # Clear denominators row by row; row scaling does not change the row space.
        out = []
        for i in range(self.rows):
            r = self.row(i)
            mult = lcm(*(x.denominator for x in r)) if r else 1
            out.append([int(x * mult) for x in r])
        return out

    def rref(self):
        """Reduced row echelon form; returns (Matrix, pivot column list)."""
        if self._echelon is not None and self._echelon[0] == "rref":
            return self._echelon[1], self._echelon[2]
        if self.field == QQ:
            pivots, rows = echelon_int(self._int_rows(), True)
            frows = []
            for k, r in enumerate(rows):
                if k < len(pivots):
                    piv = r[pivots[k]]
                    frows.append([Fraction(x, piv) for x in r])
                else:
                    frows.append([Fraction(0)] * self.cols)
        elif isinstance(self.field, PrimeField):
            pivots, rows = echelon_mod([self.row(i) for i in range(self.rows)], self.field.p, True)
            frows = rows
        else:
            raise FieldMismatch(f"no elimination backend for {self.field}")
        out = Matrix.from_rows(self.field, frows) if frows else Matrix.zeros(self.field, 0, self.cols)
        self._echelon = ("rref", out, pivots)
        return out, pivots

    def rank(self):
        if self._echelon is not None:
            return len(self._echelon[2])
        if self.field == QQ:
            pivots, _ = echelon_int(self._int_rows(), False)
        else:
            pivots, _ = echelon_mod([self.row(i) for i in range(self.rows)], self.field.p, False)
        return len(pivots)

    def kernel_basis(self):
        """Matrix whose columns are a basis of the right null space."""
        R, pivots = self.rref()
        f = self.field
        pivset = set(pivots)
        free = [j for j in range(self.cols) if j not in pivset]
        cols_ = []
        for fc in free:
            v = [f.zero] * self.cols
            v[fc] = f.one
            for k, pc in enumerate(pivots):
                v[pc] = f.neg(R[k, fc])
            cols_.append(v)
        return Matrix.from_columns(f, cols_, nrows=self.cols)

    def solve(self, b):
        """Some X with self @ X = b, or None when inconsistent.  Verified."""
        self._same_field(b)
        if b.rows != self.rows:
            raise DimensionMismatch("solve: row mismatch")
        aug = self.hstack(b)
        R, pivots = aug.rref()
        if any(p >= self.cols for p in pivots):
            return None
        f = self.field
        xcols = []
        for j in range(b.cols):
            x = [f.zero] * self.cols
            for k, pc in enumerate(pivots):
                x[pc] = R[k, self.cols + j]
            xcols.append(x)
        X = Matrix.from_columns(f, xcols, nrows=self.cols)
        if not (self * X - b).is_zero():
            return None
        return X

    def inverse(self):
        if self.rows != self.cols:
            raise DimensionMismatch("inverse of non-square matrix")
        X = self.solve(Matrix.identity(self.field, self.rows))
        if X is None:
            raise ZeroDivisionError("matrix is singular")
        return X

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [self.field.fmt(x) for x in self.entries],
        }

    @classmethod
    def from_json(cls, field, obj):
        return cls(field, obj["rows"], obj["cols"], [field.parse(s) for s in obj["entries"]])
