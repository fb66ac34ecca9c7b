"""Dense univariate polynomials over a field handle (coefficients low-first)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .fields import Field, RationalField


@dataclass(frozen=True)
class UniPoly:
    field: Field
    coeffs: tuple  # low degree first; no trailing zeros

    def __post_init__(self):
        c = list(self.coeffs)
        while c and self.field.is_zero(c[-1]):
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_ints(cls, field, coeffs):
        return cls(field, tuple(field.from_fraction(c) for c in coeffs))

    @classmethod
    def monomial(cls, field, n, c=None):
        return cls(field, (field.zero,) * n + (field.one if c is None else c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1]

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (F.zero,) * (n - len(a))
        b = b + (F.zero,) * (n - len(b))
        return UniPoly(F, tuple(F.add(x, y) for x, y in zip(a, b)))

    def __neg__(self):
        return UniPoly(self.field, tuple(self.field.neg(x) for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        if isinstance(other, UniPoly):
            if self.is_zero() or other.is_zero():
                return UniPoly(F, ())
            out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, x in enumerate(self.coeffs):
                if F.is_zero(x):
                    continue
                for j, y in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
            return UniPoly(F, tuple(out))
        return UniPoly(F, tuple(F.mul(x, other) for x in self.coeffs))

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def divmod(self, other):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = F.inv(other.lead)
        quo = [F.zero] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if F.is_zero(c):
                continue
            c = F.mul(c, inv_lead)
            quo[i - dq] = c
            for j, y in enumerate(other.coeffs):
                rem[i - dq + j] = F.sub(rem[i - dq + j], F.mul(c, y))
        return UniPoly(F, tuple(quo)), UniPoly(F, tuple(rem[:dq]))

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def derivative(self):
        F = self.field
        return UniPoly(F, tuple(F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs) if i))

    def monic(self):
        if self.is_zero():
            return self
        return self * self.field.inv(self.lead)

    def powmod(self, n: int, modulus):
        result = UniPoly(self.field, (self.field.one,))
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def __str__(self):
        return self.fmt()

    def fmt(self, var="t") -> str:
        F = self.field
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if F.is_zero(c):
                continue
            s = F.fmt(c)
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono:
                if s == "1":
                    s = mono
                elif s == "-1":
                    s = "-" + mono
                else:
                    s = f"({s})*{mono}" if "+" in s[1:] or "/" in s else f"{s}*{mono}"
            parts.append(s)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def gcd_monic(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of zero polynomials")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


SMALL_FIELD = 64  # below this, evaluating everywhere beats gcd(f, t^q - t)


def roots(f: UniPoly) -> list:
    """Distinct roots of ``f`` in its coefficient field, sorted.

    Over QQ this is the rational root theorem.  A small finite field is
    searched exhaustively; otherwise the split part ``gcd(f, t^q - t)`` is
    separated by gcds with ``(t + c)^((q-1)/2) - 1`` for c = 0, 1, 2, ...
    """
    F = f.field
    if f.degree < 1:
        return []
    if isinstance(F, RationalField):
        return sorted(_rational_roots(f))
    if F.order <= SMALL_FIELD:
        return [x for x in F.elements() if F.is_zero(f(x))]
    t = UniPoly(F, (F.zero, F.one))
    split = gcd_monic(f, t.powmod(F.order, f) - t)
    out = _split_roots(split, F)
    return sorted(out)


def _split_roots(g: UniPoly, F) -> list:
    if g.degree <= 0:
        return []
    if g.degree == 1:
        return [F.neg(g.monic().coeffs[0])]
    if F.is_zero(g.coeffs[0]):
        # t divides g
        return [F.zero] + _split_roots(g // UniPoly(F, (F.zero, F.one)), F)
    one = UniPoly(F, (F.one,))
    for c in F.elements():
        h = UniPoly(F, (c, F.one)).powmod((F.order - 1) // 2, g) - one
        d = gcd_monic(g, h) if not h.is_zero() else g
        if 0 < d.degree < g.degree:
            return _split_roots(d, F) + _split_roots(g // d, F)
    raise AssertionError("root splitting failed")  # pragma: no cover


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(f: UniPoly) -> list[Fraction]:
    den = lcm(*(Fraction(c).denominator for c in f.coeffs))
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    found = []
    if ints[0] == 0:
        found.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return found
    for num in _divisors(ints[0]):
        for dd in _divisors(ints[-1]):
            for r in (Fraction(num, dd), Fraction(-num, dd)):
                if r not in found and f(r) == 0:
                    found.append(r)
    return found


def irreducible_factors(f: UniPoly) -> list[UniPoly]:
    """Monic irreducible factors of a squarefree polynomial of degree <= 3.

    Linear factors come from :func:`roots`; whatever remains has degree
    <= 2 with no root, hence is irreducible.
    """
    F = f.field
    if f.degree > 3:
        raise ValueError("only degree <= 3 is supported")
    out = []
    rest = f.monic()
    for r in roots(f):
        lin = UniPoly(F, (F.neg(r), F.one))
        out.append(lin)
        rest = rest // lin
    if rest.degree >= 1:
        out.append(rest)
    return out


def inverse_mod(a: UniPoly, h: UniPoly) -> UniPoly:
    """Inverse of ``a`` in F[t]/(h) by the extended Euclidean algorithm."""
    F = a.field
    r0, r1 = h, a % h
    s0, s1 = UniPoly(F, ()), UniPoly(F, (F.one,))
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("not invertible modulo h")
    return (s0 * F.inv(r0.lead)) % h
