"""Dense homogeneous polynomials in X, Y, Z.

Coefficients of a degree-d form are stored against the monomials of degree
d listed in *descending* graded-reverse-lexicographic order (X > Y > Z), so
index 0 is always ``X^d`` and the leading monomial of a nonzero form is its
first nonzero slot.  Degree 2 reads ``X^2, XY, Y^2, XZ, YZ, Z^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..exactalg import Field, row_echelon

VARS = ("X", "Y", "Z")


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent vectors of degree ``d``, largest first in grevlex."""
    out = []
    for c in range(d + 1):
        for b in range(d - c + 1):
            out.append((d - b - c, b, c))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict:
    return {m: i for i, m in enumerate(monomials(d))}


def n_monomials(d: int) -> int:
    return (d + 1) * (d + 2) // 2


@lru_cache(maxsize=None)
def shift_map(d: int, mult: tuple[int, int, int]) -> tuple[int, ...]:
    """Where each degree-``d`` monomial lands after multiplying by ``mult``."""
    e = d + sum(mult)
    idx = monomial_index(e)
    return tuple(idx[(a + mult[0], b + mult[1], c + mult[2])] for a, b, c in monomials(d))


def divides(m, n) -> bool:
    return m[0] <= n[0] and m[1] <= n[1] and m[2] <= n[2]


def fmt_monomial(m) -> str:
    parts = []
    for v, e in zip(VARS, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class HomPoly:
    field: Field
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != n_monomials(self.degree):
            raise ValueError(f"degree {self.degree} form needs {n_monomials(self.degree)} coefficients")

    @classmethod
    def zero(cls, field, d):
        return cls(field, d, (field.zero,) * n_monomials(d))

    @classmethod
    def from_terms(cls, field, d, terms):
        """``terms`` maps exponent triples to integer/rational coefficients."""
        c = [field.zero] * n_monomials(d)
        idx = monomial_index(d)
        for m, v in terms.items():
            i = idx[tuple(m)]
            c[i] = field.add(c[i], field.from_fraction(v))
        return cls(field, d, tuple(c))

    @classmethod
    def linear(cls, field, coeffs):
        """``a X + b Y + c Z`` from raw field values ``(a, b, c)``."""
        return cls(field, 1, tuple(coeffs))

    def terms(self):
        F = self.field
        return {m: c for m, c in zip(monomials(self.degree), self.coeffs) if not F.is_zero(c)}

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coeffs)

    def lead_index(self) -> int:
        F = self.field
        for i, c in enumerate(self.coeffs):
            if not F.is_zero(c):
                return i
        raise ValueError("zero polynomial has no leading monomial")

    def lead_monomial(self):
        return monomials(self.degree)[self.lead_index()]

    def lead_coeff(self):
        return self.coeffs[self.lead_index()]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead_coeff()))

    def scale(self, c):
        F = self.field
        return HomPoly(F, self.degree, tuple(F.mul(c, x) for x in self.coeffs))

    def __add__(self, other):
        self._check(other)
        F = self.field
        return HomPoly(F, self.degree, tuple(F.add(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        F = self.field
        return HomPoly(F, self.degree, tuple(F.sub(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        F = self.field
        return HomPoly(F, self.degree, tuple(F.neg(x) for x in self.coeffs))

    def _check(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")

    def mul_monomial(self, m, c=None):
        F = self.field
        e = self.degree + sum(m)
        out = [F.zero] * n_monomials(e)
        for j, x in zip(shift_map(self.degree, tuple(m)), self.coeffs):
            out[j] = x if c is None else F.mul(c, x)
        return HomPoly(F, e, tuple(out))

    def __mul__(self, other):
        if not isinstance(other, HomPoly):
            return self.scale(other)
        F = self.field
        e = self.degree + other.degree
        out = [F.zero] * n_monomials(e)
        for m, c in zip(monomials(other.degree), other.coeffs):
            if F.is_zero(c):
                continue
            for j, x in zip(shift_map(self.degree, m), self.coeffs):
                if not F.is_zero(x):
                    out[j] = F.add(out[j], F.mul(c, x))
        return HomPoly(F, e, tuple(out))

    def __call__(self, point, field=None):
        """Evaluate at a point; ``field`` may be an extension holding the point."""
        F = field or self.field
        acc = F.zero
        for (a, b, c), coef in zip(monomials(self.degree), self.coeffs):
            if self.field.is_zero(coef):
                continue
            term = F.mul(F.mul(F.pow(point[0], a), F.pow(point[1], b)), F.pow(point[2], c))
            acc = F.add(acc, F.mul(coef, term))
        return acc

    def divide_exact(self, divisor: "HomPoly"):
        """Quotient ``q`` with ``divisor * q == self``, or ``None``."""
        F = self.field
        e = self.degree - divisor.degree
        if e < 0:
            return None
        if self.is_zero():
            return HomPoly.zero(F, e)
        # columns: unknown quotient coefficients, rows: target monomials
        n_out = n_monomials(self.degree)
        cols = []
        for m in monomials(e):
            col = [F.zero] * n_out
            for j, x in zip(shift_map(divisor.degree, m), divisor.coeffs):
                col[j] = x
            cols.append(col)
        aug = [[cols[k][r] for k in range(len(cols))] + [self.coeffs[r]] for r in range(n_out)]
        rref, piv = row_echelon(F, aug)
        nq = len(cols)
        if nq in piv:
            return None
        q = [F.zero] * nq
        for row, pc in zip(rref, piv):
            q[pc] = row[-1]
        return HomPoly(F, e, tuple(q))

    def fmt(self) -> str:
        F = self.field
        parts = []
        for m, c in zip(monomials(self.degree), self.coeffs):
            if F.is_zero(c):
                continue
            mono = fmt_monomial(m)
            s = F.fmt(c)
            if mono == "1":
                parts.append(s)
            elif s == "1":
                parts.append(mono)
            elif s == "-1":
                parts.append("-" + mono)
            elif "+" in s[1:] or "/" in s:
                parts.append(f"({s})*{mono}")
            else:
                parts.append(f"{s}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.fmt()


def normalize_linear(L: HomPoly) -> HomPoly:
    """Scale a linear form so its first nonzero coefficient is 1."""
    F = L.field
    for c in L.coeffs:
        if not F.is_zero(c):
            return L.scale(F.inv(c))
    raise ValueError("zero linear form")


def coefficient_rank(polys) -> int:
    polys = list(polys)
    if not polys:
        return 0
    return len(row_echelon(polys[0].field, [p.coeffs for p in polys])[1])
