"""Zero schemes of vector fields on P^2 from the eigenstructure of the matrix.

The zero scheme of the section given by ``A`` is the locus where ``A x`` is
proportional to ``x``, so it is read off from the characteristic polynomial
``p`` of ``A``, ``g = gcd(p, p')`` and the rank of ``A - lambda I``:

==========  ==========  ====================================
deg g       rank        zero scheme
==========  ==========  ====================================
0           --          a: three distinct points
1           2           b: double point + simple point
1           1           d: line (eigenplane) + point
2           2           c: triple point (kernel of N)
2           1           e: line ker N, embedded point im N
==========  ==========  ====================================

where ``N = A - (tr A / 3) I`` in the last two rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import lcm

from .exactalg import (
    QQ,
    CharacteristicError,
    Matrix3,
    UniPoly,
    build_ext_field,
    charpoly,
    gcd_monic,
    inverse_mod,
    irreducible_factors,
    is_prime,
    kernel,
    rank3,
    roots,
)
from .sections import SectionMatrix
from .zerotypes import ZeroSchemeType

# Chern data of T_P2 and its splitting type on a line
C1_TANGENT = 3
C2_TANGENT = 3
SPLITTING_ON_LINE = (1, 2)


def normalize_point(F, v) -> tuple:
    """Scale so the first nonzero coordinate is 1."""
    for c in v:
        if not F.is_zero(c):
            inv = F.inv(c)
            return tuple(F.mul(inv, x) for x in v)
    raise ValueError("zero vector is not a projective point")


def fmt_point(F, v) -> str:
    return "(" + ",".join(F.fmt(c) for c in v) + ")"


def fmt_line(F, coeffs) -> str:
    from .multipoly.homog import HomPoly

    return HomPoly(F, 1, tuple(coeffs)).fmt()


@dataclass
class GaloisOrbit:
    """Points defined over the root field of an irreducible factor of p.

    ``point`` gives coordinates as polynomials in a root ``t`` of
    ``minimal_polynomial``; ``conjugates`` lists the points explicitly over
    ``GF(p^e)`` when the base field is finite (computed on first access).
    """

    minimal_polynomial: UniPoly
    matrix: Matrix3

    @cached_property
    def point(self) -> tuple:
        """Three UniPoly coordinates, reduced mod the minimal polynomial."""
        return _eigenvector_mod(self.matrix, self.minimal_polynomial)

    @property
    def size(self) -> int:
        return self.minimal_polynomial.degree

    @property
    def conjugate_field(self):
        F = self.minimal_polynomial.field
        if F.is_finite and F.degree == 1:
            return build_ext_field(F.p, self.size)
        return None

    @cached_property
    def conjugates(self) -> list:
        E = self.conjugate_field
        if E is None:
            return []
        h_E = UniPoly(E, self.minimal_polynomial.coeffs)
        return [normalize_point(E, tuple(UniPoly(E, c.coeffs)(theta) for c in self.point))
                for theta in roots(h_E)]

    def to_dict(self) -> dict:
        out = {
            "minimal_polynomial": self.minimal_polynomial.fmt(),
            "point": "(" + ",".join(c.fmt() for c in self.point) + ")",
        }
        if self.conjugates:
            E = self.conjugate_field
            out["field"] = E.name
            out["conjugates"] = [fmt_point(E, v) for v in self.conjugates]
        return out


@dataclass
class ZeroSchemeReport:
    field: object
    type: ZeroSchemeType
    charpoly: UniPoly
    charpoly_pattern: list  # sorted (root multiplicity, degree of root field)
    rational_points: list  # (point, multiplicity)
    galois_orbits: list = field(default_factory=list)
    line: tuple | None = None  # normalized coefficients (a, b, c) of aX + bY + cZ
    embedded_point: tuple | None = None

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.rational_points) + sum(o.size for o in self.galois_orbits)

    def rational_count(self, q: int) -> int:
        """Points of the reduced zero locus over the base field of size q."""
        n = len(self.rational_points)
        if self.line is not None:
            n += q + 1
        return n

    def to_dict(self) -> dict:
        F = self.field
        return {
            "field": F.name,
            "type": self.type.letter,
            "description": self.type.description,
            "charpoly": self.charpoly.fmt(),
            "charpoly_pattern": [list(x) for x in self.charpoly_pattern],
            "points": [{"point": fmt_point(F, v), "multiplicity": m} for v, m in self.rational_points],
            "galois_orbits": [o.to_dict() for o in self.galois_orbits],
            "line": fmt_line(F, self.line) if self.line is not None else None,
            "embedded_point": fmt_point(F, self.embedded_point) if self.embedded_point is not None else None,
        }


def _check_characteristic(F):
    if F.characteristic in (2, 3):
        raise CharacteristicError(F.characteristic)


def _kernel_point(M: Matrix3):
    ker = kernel(M)
    if len(ker) != 1:
        raise AssertionError(f"expected a 1-dimensional kernel, got {len(ker)}")
    return normalize_point(M.field, ker[0])


def _eigenvector_mod(A: Matrix3, h: UniPoly) -> tuple:
    """Eigenvector over F[t]/(h) from a nonzero column of adj(tI - A)."""
    F = A.field
    t = UniPoly(F, (F.zero, F.one))
    const = lambda x: UniPoly(F, (x,))  # noqa: E731
    M = [[(t if i == j else UniPoly(F, ())) - const(A.rows[i][j]) for j in range(3)] for i in range(3)]

    def cof(i, j):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        d = M[r[0]][c[0]] * M[r[1]][c[1]] - M[r[0]][c[1]] * M[r[1]][c[0]]
        return d if (i + j) % 2 == 0 else -d

    # column j of the adjugate is the cofactor row j
    for j in range(3):
        col = [cof(j, i) % h for i in range(3)]
        lead = next((c for c in col if not c.is_zero()), None)
        if lead is not None:
            inv = inverse_mod(lead, h)
            return tuple((c * inv) % h for c in col)
    raise AssertionError("no eigenvector column")  # pragma: no cover - adj(tI - A) has rank 1 at a simple root


def classify_section(A: SectionMatrix) -> ZeroSchemeReport:
    """Zero-scheme type and witnesses of the section ``A``.

    Works on the trace-zero representative, so every field of the report
    (the characteristic polynomial included) depends only on the section.
    """
    if isinstance(A, Matrix3):
        A = SectionMatrix(A)
    A.require_nonzero()
    F = A.field
    _check_characteristic(F)
    M = A.trace_zero().matrix
    p = charpoly(M)
    g = gcd_monic(p, p.derivative())
    if g.degree == 0:
        pts, orbits, pattern = [], [], []
        for h in irreducible_factors(p):
            if h.degree == 1:
                lam = F.neg(h.coeffs[0])
                pts.append((_kernel_point(M.shift(F.neg(lam))), 1))
                pattern.append((1, 1))
            else:
                orbits.append(GaloisOrbit(h.monic(), M))
                pattern.extend([(1, h.degree)] * h.degree)
        pts.sort()
        return ZeroSchemeReport(F, ZeroSchemeType.A_ThreeDistinctPoints, p, sorted(pattern), pts, orbits)
    if g.degree == 1:
        lam = F.neg(g.coeffs[0])
        mu = F.sub(M.trace(), F.add(lam, lam))
        N = M.shift(F.neg(lam))
        simple = _kernel_point(M.shift(F.neg(mu)))
        pattern = [(1, 1), (2, 1)]
        if rank3(N) == 2:
            pts = [(_kernel_point(N), 2), (simple, 1)]
            return ZeroSchemeReport(F, ZeroSchemeType.B_TwoPointsOneDouble, p, pattern, pts)
        line = normalize_point(F, N.nonzero_row())
        return ZeroSchemeReport(F, ZeroSchemeType.D_LinePlusPoint, p, pattern, [(simple, 1)], line=line)
    if g.degree == 2:
        lam = F.div(M.trace(), F.from_int(3))
        N = M.shift(F.neg(lam))
        r = rank3(N)
        if r == 2:
            return ZeroSchemeReport(F, ZeroSchemeType.C_OneTriplePoint, p, [(3, 1)], [(_kernel_point(N), 3)])
        if r == 1:
            line = normalize_point(F, N.nonzero_row())
            emb = normalize_point(F, N.nonzero_column())
            return ZeroSchemeReport(F, ZeroSchemeType.E_LineEmbeddedPoint, p, [(3, 1)], [],
                                    line=line, embedded_point=emb)
    raise AssertionError(f"unreachable branch: deg gcd = {g.degree}")  # pragma: no cover


# -- surface-level verdict --------------------------------------------------


class Singularity(str, Enum):
    SMOOTH_DEL_PEZZO = "smooth_del_pezzo"
    ONE_POINT_MULT2 = "one_point_mult2"
    ONE_POINT_MULT3 = "one_point_mult3"


@dataclass
class Component:
    name: str
    description: str
    degree: int
    center: list = field(default_factory=list)
    center_length: int = 0

    def to_dict(self) -> dict:
        return {"name": self.name, "description": self.description, "degree": self.degree,
                "center": self.center, "center_length": self.center_length}


@dataclass
class HyperplaneVerdict:
    kind: str  # "irreducible" | "union_of_two_cubics"
    singularity: Singularity | None
    degree: int
    components: list
    sentence: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "singularity": self.singularity.value if self.singularity else None,
            "degree": self.degree,
            "components": [c.to_dict() for c in self.components],
            "sentence": self.sentence,
        }


_SENTENCES = {
    "a": "irreducible surface of degree six, a non-singular Del Pezzo surface",
    "b": "irreducible surface of degree six, singular at one point with multiplicity two",
    "c": "irreducible surface of degree six, singular at one point with multiplicity three",
    "d": "union of two degree three surfaces",
    "e": "union of two degree three surfaces",
}


def section_degree() -> int:
    """Degree of a hyperplane section: c1^2 - c2 of the tangent bundle."""
    return C1_TANGENT**2 - C2_TANGENT


def verdict(r: ZeroSchemeReport) -> HyperplaneVerdict:
    F = r.field
    total = section_degree()
    letter = r.type.letter
    if not r.type.has_line:
        center = [fmt_point(F, v) for v, _ in r.rational_points]
        center += [o.to_dict()["point"] + " over root of " + o.minimal_polynomial.fmt()
                   for o in r.galois_orbits]
        w0 = Component("W0", "blow-up of P^2 along the zero scheme", total, center, r.total_multiplicity)
        sing = {"a": Singularity.SMOOTH_DEL_PEZZO, "b": Singularity.ONE_POINT_MULT2,
                "c": Singularity.ONE_POINT_MULT3}[letter]
        return HyperplaneVerdict("irreducible", sing, total, [w0], _SENTENCES[letter])
    ruled = sum(SPLITTING_ON_LINE)
    pt = r.rational_points[0][0] if letter == "d" else r.embedded_point
    w0 = Component("W0", "blow-up of P^2 at the isolated point" if letter == "d"
                   else "blow-up of P^2 at the embedded point", total - ruled, [fmt_point(F, pt)], 1)
    w1 = Component("W1", f"P(T|line) over {fmt_line(F, r.line)} = 0, ruled by O(1)+O(2)", ruled)
    return HyperplaneVerdict("union_of_two_cubics", None, total, [w0, w1], _SENTENCES[letter])


def summary_sentence(r: ZeroSchemeReport) -> str:
    return f"type {r.type.letter}: {_SENTENCES[r.type.letter]}"


# -- invariance checks ------------------------------------------------------


def _apply(F, P: Matrix3, v):
    return normalize_point(F, P @ v)


def _apply_line(F, Pinv: Matrix3, row):
    return normalize_point(F, tuple(Pinv.transpose() @ row))


def conjugate_check(A: SectionMatrix, P: Matrix3) -> bool:
    """Type and witnesses of ``P A P^-1`` are those of ``A`` moved by ``P``."""
    if isinstance(A, Matrix3):
        A = SectionMatrix(A)
    F = A.field
    Pinv = P.inverse()  # raises on singular P
    B = SectionMatrix(P @ A.matrix @ Pinv)
    ra, rb = classify_section(A), classify_section(B)
    if ra.type != rb.type:
        return False
    moved = sorted((_apply(F, P, v), m) for v, m in ra.rational_points)
    if moved != sorted(rb.rational_points):
        return False
    if (ra.line is None) != (rb.line is None):
        return False
    if ra.line is not None and _apply_line(F, Pinv, ra.line) != rb.line:
        return False
    if ra.embedded_point is not None and _apply(F, P, ra.embedded_point) != rb.embedded_point:
        return False
    if sorted(o.minimal_polynomial.coeffs for o in ra.galois_orbits) != \
            sorted(o.minimal_polynomial.coeffs for o in rb.galois_orbits):
        return False
    for oa in ra.galois_orbits:
        if oa.conjugates:
            ob = next(o for o in rb.galois_orbits if o.minimal_polynomial.coeffs == oa.minimal_polynomial.coeffs)
            E = oa.conjugate_field
            PE = Matrix3(E, P.rows)
            if sorted(_apply(E, PE, v) for v in oa.conjugates) != sorted(ob.conjugates):
                return False
    return True


# -- reduction of rational sections -------------------------------------------


def discriminant(p: UniPoly):
    """Discriminant of a monic cubic t^3 + a t^2 + b t + c."""
    F = p.field
    c, b, a = p.coeffs[0], p.coeffs[1], p.coeffs[2]
    m, fi = F.mul, F.from_int
    terms = [
        m(m(a, a), m(b, b)),
        m(fi(-4), m(b, m(b, b))),
        m(fi(-4), m(m(a, a), m(a, c))),
        m(fi(-27), m(c, c)),
        m(fi(18), m(a, m(b, c))),
    ]
    acc = F.zero
    for t in terms:
        acc = F.add(acc, t)
    return acc


def _some_nonzero_2minor(M: Matrix3):
    F = M.field
    r = M.rows
    for i0, i1 in ((0, 1), (0, 2), (1, 2)):
        for j0, j1 in ((0, 1), (0, 2), (1, 2)):
            d = F.sub(F.mul(r[i0][j0], r[i1][j1]), F.mul(r[i0][j1], r[i1][j0]))
            if not F.is_zero(d):
                return d
    raise AssertionError("no nonzero 2x2 minor")


def reduction_invariants(A: SectionMatrix) -> list[Fraction]:
    """Nonzero rationals whose nonvanishing mod p keeps the type of ``A``."""
    if A.field != QQ:
        raise ValueError("reduction invariants are defined for rational sections")
    M = A.matrix
    p = charpoly(M)
    g = gcd_monic(p, p.derivative())
    out = [Fraction(lcm(*(Fraction(x).denominator for x in M.entries())))]
    if g.degree == 0:
        out.append(discriminant(p))
    elif g.degree == 1:
        lam = -g.coeffs[0]
        mu = M.trace() - 2 * lam
        out.append(lam - mu)
        N = M.shift(-lam)
        out.append(_some_nonzero_2minor(N) if rank3(N) == 2 else next(x for x in N.entries() if x))
    else:
        N = M.shift(-M.trace() / 3)
        out.append(_some_nonzero_2minor(N) if rank3(N) == 2 else next(x for x in N.entries() if x))
    return out


def good_primes(A: SectionMatrix, count: int = 3, start: int = 5) -> list[int]:
    """First ``count`` primes >= ``start`` (and >= 5) of good reduction for ``A``."""
    inv = reduction_invariants(A)
    out = []
    q = max(start, 5)
    while len(out) < count:
        if is_prime(q) and all(x.numerator % q and x.denominator % q for x in inv):
            out.append(q)
        q += 1
    return out
