"""3x3 matrices over a field handle, with exact rank, kernel and charpoly."""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, PrimeField
from .unipoly import UniPoly


@dataclass(frozen=True)
class Matrix3:
    field: Field
    rows: tuple  # three tuples of three raw field values

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, tuple(tuple(field.from_fraction(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, field):
        z, o = field.zero, field.one
        return cls(field, ((o, z, z), (z, o, z), (z, z, o)))

    @classmethod
    def zeros(cls, field):
        z = field.zero
        return cls(field, ((z, z, z),) * 3)

    @classmethod
    def unit(cls, field, i, j):
        """E_ij with 1-based indices."""
        rows = [[field.zero] * 3 for _ in range(3)]
        rows[i - 1][j - 1] = field.one
        return cls(field, tuple(map(tuple, rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [x for r in self.rows for x in r]

    def _map2(self, other, op):
        return Matrix3(self.field, tuple(tuple(op(x, y) for x, y in zip(r, s))
                                         for r, s in zip(self.rows, other.rows)))

    def __add__(self, other):
        return self._map2(other, self.field.add)

    def __sub__(self, other):
        return self._map2(other, self.field.sub)

    def __neg__(self):
        F = self.field
        return Matrix3(F, tuple(tuple(F.neg(x) for x in r) for r in self.rows))

    def scale(self, c):
        F = self.field
        return Matrix3(F, tuple(tuple(F.mul(c, x) for x in r) for r in self.rows))

    def shift(self, lam):
        """``self + lam * I``."""
        F = self.field
        return Matrix3(F, tuple(tuple(F.add(x, lam) if i == j else x for j, x in enumerate(r))
                                for i, r in enumerate(self.rows)))

    def __matmul__(self, other):
        F = self.field
        if isinstance(other, Matrix3):
            cols = list(zip(*other.rows))
            return Matrix3(F, tuple(tuple(_dot(F, r, c) for c in cols) for r in self.rows))
        return tuple(_dot(F, r, other) for r in self.rows)

    def transpose(self):
        return Matrix3(self.field, tuple(zip(*self.rows)))

    def trace(self):
        F = self.field
        return F.add(F.add(self.rows[0][0], self.rows[1][1]), self.rows[2][2])

    def det(self):
        F = self.field
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        m = F.mul
        t1 = m(a, F.sub(m(e, i), m(f, h)))
        t2 = m(b, F.sub(m(d, i), m(f, g)))
        t3 = m(c, F.sub(m(d, h), m(e, g)))
        return F.add(F.sub(t1, t2), t3)

    def adjugate(self):
        F = self.field
        r = self.rows
        m = F.mul

        def minor(i, j):
            ri = [k for k in range(3) if k != i]
            cj = [k for k in range(3) if k != j]
            return F.sub(m(r[ri[0]][cj[0]], r[ri[1]][cj[1]]), m(r[ri[0]][cj[1]], r[ri[1]][cj[0]]))

        cof = [[minor(i, j) if (i + j) % 2 == 0 else F.neg(minor(i, j)) for j in range(3)]
               for i in range(3)]
        return Matrix3(F, tuple(zip(*cof)))

    def inverse(self):
        d = self.det()
        if self.field.is_zero(d):
            raise ValueError("matrix is singular")
        return self.adjugate().scale(self.field.inv(d))

    def is_scalar(self) -> bool:
        F = self.field
        r = self.rows
        return (all(F.is_zero(r[i][j]) for i in range(3) for j in range(3) if i != j)
                and r[0][0] == r[1][1] == r[2][2])

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for x in self.entries())

    def nonzero_row(self):
        for r in self.rows:
            if any(not self.field.is_zero(x) for x in r):
                return r
        return None

    def nonzero_column(self):
        return self.transpose().nonzero_row()

    def __str__(self):
        F = self.field
        return "[" + "; ".join(" ".join(F.fmt(x) for x in r) for r in self.rows) + "]"


def _dot(F, u, v):
    acc = F.zero
    for x, y in zip(u, v):
        acc = F.add(acc, F.mul(x, y))
    return acc


def charpoly(A: Matrix3) -> UniPoly:
    """``det(tI - A)``: t^3 - tr t^2 + (sum of principal 2-minors) t - det."""
    F = A.field
    r = A.rows
    m = F.mul
    s2 = F.zero
    for i, j in ((0, 1), (0, 2), (1, 2)):
        s2 = F.add(s2, F.sub(m(r[i][i], r[j][j]), m(r[i][j], r[j][i])))
    return UniPoly(F, (F.neg(A.det()), s2, F.neg(A.trace()), F.one))


def row_echelon(field: Field, rows):
    """Reduced row echelon form by exact Gauss-Jordan elimination.

    Returns ``(rref_rows, pivot_columns)``.  Works for any row length.
    """
    F = field
    if type(F) is PrimeField:
        return _row_echelon_mod(F.p, rows)
    M = [list(r) for r in rows]
    pivots = []
    if not M:
        return [], []
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if not F.is_zero(M[i][c])), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and not F.is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return [tuple(row) for row in M[:r]], pivots


def _row_echelon_mod(p: int, rows):
    """Same as :func:`row_echelon` on plain ints mod p."""
    M = [list(r) for r in rows]
    pivots = []
    if not M:
        return [], []
    r = 0
    for c in range(len(M[0])):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        pr = M[r] = [inv * x % p for x in M[r]]
        for i in range(len(M)):
            f = M[i][c]
            if i != r and f:
                M[i] = [(x - f * y) % p for x, y in zip(M[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return [tuple(row) for row in M[:r]], pivots


def rank3(A: Matrix3) -> int:
    return len(row_echelon(A.field, A.rows)[1])


def kernel(A: Matrix3) -> list[tuple]:
    """Basis of ``{x : A x = 0}`` read off the reduced echelon form."""
    return nullspace(A.field, A.rows, 3)


def cayley_hamilton_residual(A: Matrix3) -> Matrix3:
    """p(A) for p = charpoly(A); the zero matrix in a correct build."""
    p = charpoly(A)
    F = A.field
    acc = Matrix3.zeros(F)
    for c in reversed(p.coeffs):
        acc = (acc @ A).shift(c)
    return acc


def nullspace(field: Field, rows, ncols: int) -> list[tuple]:
    """Basis of the right kernel of an arbitrary matrix given by rows."""
    F = field
    rref, pivots = row_echelon(F, rows) if rows else ([], [])
    basis = []
    for fc in (c for c in range(ncols) if c not in pivots):
        v = [F.zero] * ncols
        v[fc] = F.one
        for row, pc in zip(rref, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(tuple(v))
    return basis
