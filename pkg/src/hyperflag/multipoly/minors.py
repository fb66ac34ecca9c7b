"""The three 2x2 minors of the matrix with rows (X, Y, Z) and (f1, f2, f3)."""

from __future__ import annotations

from dataclasses import dataclass

from ..exactalg import nullspace
from ..sections import SectionMatrix, ZeroSectionError
from .homog import HomPoly, coefficient_rank, monomials, n_monomials, normalize_linear, shift_map


def variables(F):
    o, z = F.one, F.zero
    return (HomPoly(F, 1, (o, z, z)), HomPoly(F, 1, (z, o, z)), HomPoly(F, 1, (z, z, o)))


@dataclass(frozen=True)
class MinorTriple:
    q12: HomPoly  # X f2 - Y f1
    q13: HomPoly  # X f3 - Z f1
    q23: HomPoly  # Y f3 - Z f2

    @property
    def field(self):
        return self.q12.field

    def as_list(self) -> list[HomPoly]:
        return [self.q12, self.q13, self.q23]

    def nonzero(self) -> list[HomPoly]:
        return [q for q in self.as_list() if not q.is_zero()]

    def syzygy(self) -> HomPoly:
        """``X*q23 - Y*q13 + Z*q12``; identically zero."""
        X, Y, Z = variables(self.field)
        return X * self.q23 - Y * self.q13 + Z * self.q12

    def span_rank(self) -> int:
        return coefficient_rank(self.as_list())

    def scale(self, c) -> "MinorTriple":
        return MinorTriple(self.q12.scale(c), self.q13.scale(c), self.q23.scale(c))


def minors_ideal(A: SectionMatrix) -> MinorTriple:
    """``(X f2 - Y f1, X f3 - Z f1, Y f3 - Z f2)`` with ``fi`` = row i of A."""
    if A.is_zero_section():
        raise ZeroSectionError()
    F = A.field
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = A.rows
    z, neg, sub = F.zero, F.neg, F.sub
    # coefficients on X^2, XY, Y^2, XZ, YZ, Z^2
    return MinorTriple(
        HomPoly(F, 2, (a2, sub(b2, a1), neg(b1), c2, neg(c1), z)),
        HomPoly(F, 2, (a3, b3, z, sub(c3, a1), neg(b1), neg(c1))),
        HomPoly(F, 2, (z, a3, b3, neg(a2), sub(c3, b2), neg(c2))),
    )


def _gcd_of_two_quadrics(q1: HomPoly, q2: HomPoly):
    """Common linear factor of two independent quadrics, or ``None``.

    Solves ``q1*M2 - q2*M1 = 0`` for linear ``M1, M2``; a nonzero solution
    exists exactly when the quadrics share a linear factor, which is then
    ``q1 / M1``.
    """
    F = q1.field
    n3 = n_monomials(3)
    rows = [[F.zero] * 6 for _ in range(n3)]
    # unknowns: M1 coefficients (cols 0..2), M2 coefficients (cols 3..5)
    for k, m in enumerate(monomials(1)):
        for j, x in zip(shift_map(2, m), q2.coeffs):
            rows[j][k] = F.sub(rows[j][k], x)
        for j, x in zip(shift_map(2, m), q1.coeffs):
            rows[j][3 + k] = F.add(rows[j][3 + k], x)
    ker = nullspace(F, rows, 6)
    if not ker:
        return None
    M1 = HomPoly(F, 1, ker[0][:3])
    L = q1.divide_exact(M1)
    if L is None:  # pragma: no cover - excluded by the algebra above
        raise AssertionError("inconsistent quadric gcd")
    return normalize_linear(L)


def common_linear_factor(m: MinorTriple):
    """Linear form (first nonzero coefficient 1) dividing every minor, or ``None``."""
    qs = m.nonzero()
    if not qs:
        raise ZeroSectionError()
    first = qs[0]
    second = next((q for q in qs[1:] if coefficient_rank([first, q]) == 2), None)
    if second is None:
        raise ValueError("minor span has dimension 1; not the minors of a nonzero section")
    L = _gcd_of_two_quadrics(first, second)
    if L is None:
        return None
    if all(q.divide_exact(L) is not None for q in qs):
        return L
    return None
