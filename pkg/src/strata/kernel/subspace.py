"""Subspaces of k^n in canonical (RREF row basis) form.

Used everywhere an ideal, submodule, span or quotient is manipulated.  The
canonical form makes equality a tuple comparison and fixes the deterministic
complement: coordinates at the non-pivot ambient positions, in ambient order.
"""

from __future__ import annotations

from .matrix import Matrix


class Subspace:
    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis: Matrix, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis  # RREF, one row per basis vector, no zero rows
        self.pivots = tuple(pivots)

    @classmethod
    def from_rows(cls, field, ambient_dim, rows):
        rows = [r for r in rows]
        if not rows:
            return cls(field, ambient_dim, Matrix.zeros(field, 0, ambient_dim), ())
        M = Matrix.from_rows(field, rows)
        R, pivots = M.rref()
        basis = Matrix.from_rows(field, [R.row(i) for i in range(len(pivots))]) if pivots else Matrix.zeros(field, 0, ambient_dim)
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls.from_rows(field, ambient_dim, [])

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self):
        return len(self.pivots)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim})"

    def reduce(self, vec):
        """(coords in basis rows, remainder); remainder zero iff vec in span."""
        f = self.field
        v = [f.coerce(x) for x in vec]
        coords = []
        for k, pc in enumerate(self.pivots):
            c = v[pc]
            coords.append(c)
            if not f.is_zero(c):
                row = self.basis.row(k)
                for j in range(self.ambient_dim):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return coords, v

    def contains(self, vec):
        _, rem = self.reduce(vec)
        return all(self.field.is_zero(x) for x in rem)

    def contains_space(self, other: "Subspace"):
        return all(self.contains(other.basis.row(i)) for i in range(other.dim))

    def plus(self, other: "Subspace"):
        rows = [self.basis.row(i) for i in range(self.dim)] + [other.basis.row(i) for i in range(other.dim)]
        return Subspace.from_rows(self.field, self.ambient_dim, rows)

    def intersect(self, other: "Subspace"):
        # Row space of A meets row space of B: kernel of [A^T | -B^T] pairs.
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        A = self.basis.transpose()
        B = other.basis.transpose()
        K = A.hstack(-B).kernel_basis()
        rows = []
        for j in range(K.cols):
            coeffs = [K[i, j] for i in range(self.dim)]
            vec = [self.field.zero] * self.ambient_dim
            for i, c in enumerate(coeffs):
                if not self.field.is_zero(c):
                    row = self.basis.row(i)
                    for t in range(self.ambient_dim):
                        vec[t] = self.field.add(vec[t], self.field.mul(c, row[t]))
            rows.append(vec)
        return Subspace.from_rows(self.field, self.ambient_dim, rows)

    # -- quotient bookkeeping ------------------------------------------------

    def complement_coords(self):
        """Ambient coordinates spanning a complement (non-pivots, ambient order)."""
        pivset = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in pivset]

    def projection_matrix(self):
        """Matrix of k^n -> k^C, v |-> (v mod self) in complement coordinates."""
        f = self.field
        comp = self.complement_coords()
        rows = []
        for c in comp:
            row = [f.zero] * self.ambient_dim
            row[c] = f.one
            for k, pc in enumerate(self.pivots):
                row[pc] = f.neg(self.basis[k, c])
            rows.append(row)
        if not rows:
            return Matrix.zeros(f, 0, self.ambient_dim)
        return Matrix.from_rows(f, rows)

    def lift_matrix(self):
        """Section k^C -> k^n sending the class of e_c to e_c."""
        f = self.field
        comp = self.complement_coords()
        cols = []
        for c in comp:
            v = [f.zero] * self.ambient_dim
            v[c] = f.one
            cols.append(v)
        return Matrix.from_columns(f, cols, nrows=self.ambient_dim)
