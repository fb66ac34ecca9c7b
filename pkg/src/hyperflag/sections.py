"""Sections of T_P2 as 3x3 matrices modulo the identity, and P^7 coordinates.

A triple of linear forms ``(f1, f2, f3)`` is stored as the matrix whose row
i holds the X, Y, Z coefficients of ``fi``.  Adding a multiple of the
identity adds a multiple of ``(X, Y, Z)``, which does not change the
tangent-bundle section.  Hyperplanes of P^7 are written in the trace-zero
basis ``E11-E33, E22-E33, E12, E13, E21, E23, E31, E32``.

Accepted text grammar for ``parse_section``::

    section := form ',' form ',' form
    form    := ['+'|'-'] term (('+'|'-') term)*
    term    := [coef ['*']] var | coef
    var     := 'X' | 'Y' | 'Z'
    coef    := integer | integer '/' integer

A bare ``coef`` term must be zero (forms are homogeneous of degree one).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import QQ, Field, Matrix3

BASIS_LABELS = ("E11-E33", "E22-E33", "E12", "E13", "E21", "E23", "E31", "E32")
_OFF_DIAGONAL = ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))


class ZeroSectionError(ValueError):
    def __init__(self, msg="zero section"):
        super().__init__(msg)


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class SectionMatrix:
    matrix: Matrix3

    @classmethod
    def from_rows(cls, rows, field: Field = QQ):
        return cls(Matrix3.from_rows(field, rows))

    @property
    def field(self):
        return self.matrix.field

    @property
    def rows(self):
        return self.matrix.rows

    def is_zero_section(self) -> bool:
        return self.matrix.is_scalar()

    def require_nonzero(self):
        if self.is_zero_section():
            raise ZeroSectionError()
        return self

    def same_section(self, other: "SectionMatrix") -> bool:
        """Equal as sections: the difference is a multiple of the identity."""
        return (self.matrix - other.matrix).is_scalar()

    def shift(self, lam) -> "SectionMatrix":
        return SectionMatrix(self.matrix.shift(lam))

    def scale(self, c) -> "SectionMatrix":
        return SectionMatrix(self.matrix.scale(c))

    def trace_zero(self) -> "SectionMatrix":
        F = self.field
        lam = F.div(self.matrix.trace(), F.from_int(3))
        return self.shift(F.neg(lam))

    def reduce_mod(self, field: Field) -> "SectionMatrix":
        """Image of a rational section in a prime field."""
        if self.field == field:
            return self
        if self.field != QQ:
            raise ValueError(f"cannot reduce a section over {self.field} to {field}")
        return SectionMatrix(Matrix3.from_rows(field, self.rows))

    def render(self) -> str:
        return ", ".join(render_linear_form(self.field, r) for r in self.rows)

    def __str__(self):
        return self.render()


def render_linear_form(F: Field, coeffs) -> str:
    parts = []
    for var, c in zip("XYZ", coeffs):
        if F.is_zero(c):
            continue
        s = F.fmt(c)
        if s == "1":
            term = var
        elif s == "-1":
            term = "-" + var
        else:
            term = f"{s}*{var}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts) or "0"


@dataclass(frozen=True)
class HyperplaneP7:
    field: Field
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("a hyperplane of P^7 needs 8 coordinates")
        if all(self.field.is_zero(c) for c in self.coords):
            raise ValueError("all-zero hyperplane coordinates")

    @classmethod
    def from_values(cls, values, field: Field = QQ):
        return cls(field, tuple(field.from_fraction(v) for v in values))

    def normalized(self) -> "HyperplaneP7":
        F = self.field
        lead = next(c for c in self.coords if not F.is_zero(c))
        inv = F.inv(lead)
        return HyperplaneP7(F, tuple(F.mul(inv, c) for c in self.coords))

    def same_point(self, other) -> bool:
        return self.normalized().coords == other.normalized().coords

    def fmt(self) -> str:
        return "(" + ",".join(self.field.fmt(c) for c in self.coords) + ")"


def section_to_hyperplane(A: SectionMatrix) -> HyperplaneP7:
    """Coordinates of the trace-zero representative in the fixed basis.

    Not normalized; use :meth:`HyperplaneP7.normalized` for reports.
    """
    A.require_nonzero()
    T = A.trace_zero().rows
    coords = (T[0][0], T[1][1]) + tuple(T[i][j] for i, j in _OFF_DIAGONAL)
    return HyperplaneP7(A.field, coords)


def hyperplane_to_section(h: HyperplaneP7) -> SectionMatrix:
    F = h.field
    c = h.coords
    rows = [[F.zero] * 3 for _ in range(3)]
    rows[0][0] = c[0]
    rows[1][1] = c[1]
    rows[2][2] = F.neg(F.add(c[0], c[1]))
    for (i, j), v in zip(_OFF_DIAGONAL, c[2:]):
        rows[i][j] = v
    return SectionMatrix(Matrix3(F, tuple(map(tuple, rows))))


# -- parsing ---------------------------------------------------------------


def _tokenize(text):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "XYZ":
            toks.append(("var", ch, i))
            i += 1
        elif ch in "+-*/,":
            toks.append((ch, ch, i))
            i += 1
        elif ch == "^":
            raise ParseError("nonlinear term", i)
        elif ch.isalpha():
            raise ParseError(f"unknown variable {ch!r}", i)
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def coef(self):
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("expected a number or X, Y, Z", pos)
        if self.peek()[0] == "/":
            self.take()
            kind2, den, pos2 = self.take()
            if kind2 != "int":
                raise ParseError("expected a denominator", pos2)
            if den == 0:
                raise ParseError("zero denominator", pos2)
            return Fraction(val, den)
        return Fraction(val)

    def term(self, sign, out):
        kind, _, pos = self.peek()
        if kind == "var":
            c = Fraction(1)
        else:
            c = self.coef()
            if self.peek()[0] == "*":
                self.take()
                if self.peek()[0] != "var":
                    raise ParseError("nonlinear term" if self.peek()[0] == "int" else "expected X, Y or Z",
                                     self.peek()[2])
            elif self.peek()[0] != "var":
                if c != 0:
                    raise ParseError("constant term in a linear form", pos)
                return
        _, var, vpos = self.take()
        if self.peek()[0] in ("var", "*", "int"):
            raise ParseError("nonlinear term", self.peek()[2])
        out["XYZ".index(var)] += sign * c

    def form(self):
        out = [Fraction(0)] * 3
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        self.term(sign, out)
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            self.term(sign, out)
        return out

    def section(self):
        forms = [self.form()]
        while self.peek()[0] == ",":
            self.take()
            forms.append(self.form())
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected token", pos)
        if len(forms) != 3:
            raise ParseError(f"expected 3 linear forms, got {len(forms)}", pos)
        return forms


def parse_section(text: str, field: Field = QQ) -> SectionMatrix:
    """Parse ``"f1, f2, f3"``; e.g. ``"Y, Z+X, 0"`` or ``"X, 2*Y, 3Z"``."""
    rows = _Parser(text).section()
    return SectionMatrix.from_rows(rows, field)


def parse_hyperplane(text: str, field: Field = QQ) -> HyperplaneP7:
    """Eight comma-separated rationals, optionally in parentheses."""
    s = text.strip().strip("()")
    try:
        vals = [Fraction(v.strip()) for v in s.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad hyperplane coordinates {text!r}: {exc}") from None
    return HyperplaneP7.from_values(vals, field)
