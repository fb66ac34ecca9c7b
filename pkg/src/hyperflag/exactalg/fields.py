"""Exact fields: the rationals, prime fields and small extensions of them.

A field is a handle object; its elements are plain Python values owned by
that handle:

* ``QQ``               -- :class:`fractions.Fraction` (always in lowest terms)
* ``PrimeField(p)``    -- ``int`` in ``range(p)``
* ``ExtensionField``   -- ``int`` in ``range(p**k)`` encoding the residue
  ``c0 + c1*a + ... + c_{k-1}*a^{k-1}`` as ``c0 + c1*p + ...`` (base-p digits)

Keeping elements as bare values (rather than wrapper objects) keeps the
inner loops of the classifier and the Groebner engine cheap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class CharacteristicError(ValueError):
    """Raised for fields of characteristic 2 or 3."""

    def __init__(self, p):
        super().__init__(f"characteristic restriction: p = {p} (need p >= 5 or Q)")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """Common interface.  Subclasses implement the arithmetic on raw values."""

    characteristic: int
    order: int | None  # None for infinite fields
    name: str

    zero = 0
    one = 1

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, x) -> object:
        x = Fraction(x)
        if x.denominator == 1:
            return self.from_int(x.numerator)
        return self.div(self.from_int(x.numerator), self.from_int(x.denominator))

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def elements(self):
        raise TypeError(f"{self.name} is not finite")

    def fmt(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name


class RationalField(Field):
    characteristic = 0
    order = None
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a):
        return not a

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, x):
        return Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PrimeField(Field):
    """The field Z/pZ.  Only ``p >= 5`` is accepted."""

    order: int

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p < 5:
            raise CharacteristicError(p)
        self.p = self.characteristic = self.order = p
        self.name = f"GF({p})"
        self.degree = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, x):
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def elements(self):
        return range(self.p)

    def components(self, a) -> tuple[int, ...]:
        return (a,)

    def fmt(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and not isinstance(other, ExtensionField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _poly_has_root_mod_p(coeffs, p) -> bool:
    # coeffs low-first
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def is_irreducible_small(coeffs, p: int) -> bool:
    """Irreducibility over GF(p) of a monic polynomial of degree 1, 2 or 3."""
    deg = len(coeffs) - 1
    if deg < 1 or deg > 3:
        raise ValueError("only degrees 1..3 are supported")
    return deg == 1 or not _poly_has_root_mod_p(coeffs, p)


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lowest monic irreducible of degree ``k`` over GF(p).

    Candidates are ordered by the integer whose base-p digits are the
    non-leading coefficients (constant term least significant), so for
    ``(5, 2)`` the answer is ``t^2 + 2``.
    """
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        coeffs = tuple(low) + (1,)
        if is_irreducible_small(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class ExtensionField(PrimeField):
    """GF(p^k) = GF(p)[a]/(modulus) with k in {2, 3}.

    Multiplication goes through discrete log / antilog tables built once per
    field; addition is digit-wise.
    """

    def __init__(self, p: int, modulus: tuple[int, ...]):
        super().__init__(p)
        k = len(modulus) - 1
        if modulus[-1] != 1 or not is_irreducible_small(modulus, p):
            raise ValueError(f"modulus {modulus} is not monic irreducible over GF({p})")
        self.degree = k
        self.modulus = tuple(modulus)
        self.order = p**k
        self.name = f"GF({p}^{k})"
        q = self.order
        self._digits = [tuple((x // p**i) % p for i in range(k)) for x in range(q)]
        self._pw = [p**i for i in range(k)]
        self._exp, self._log = self._build_tables()
        self._add = None
        if q <= 512:
            self._add = [[self._encode(tuple((u + v) % p for u, v in zip(da, db)))
                          for db in self._digits] for da in self._digits]

    def _encode(self, digits) -> int:
        return sum(d * w for d, w in zip(digits, self._pw))

    def _mul_slow(self, a, b):
        p, k = self.p, self.degree
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * k - 1)
        for i, u in enumerate(da):
            if u:
                for j, v in enumerate(db):
                    prod[i + j] = (prod[i + j] + u * v) % p
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                for i in range(k):
                    prod[d - k + i] = (prod[d - k + i] - c * self.modulus[i]) % p
                prod[d] = 0
        return self._encode(prod[:k])

    def _build_tables(self):
        q = self.order
        targets = _prime_factors(q - 1)
        for g in range(2, q):
            if all(self._pow_slow(g, (q - 1) // r) != 1 for r in targets):
                break
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = exp[i + q - 1] = x
            log[x] = i
            x = self._mul_slow(x, g)
        self.generator = g
        return exp, log

    def _pow_slow(self, a, n):
        r = 1
        while n:
            if n & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            n >>= 1
        return r

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        p = self.p
        return self._encode(tuple((u + v) % p for u, v in zip(self._digits[a], self._digits[b])))

    def neg(self, a):
        p = self.p
        return self._encode(tuple(-u % p for u in self._digits[a]))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, x):
        return PrimeField.from_fraction(self, x)

    def elements(self):
        return range(self.order)

    def components(self, a) -> tuple[int, ...]:
        return self._digits[a]

    def from_components(self, digits) -> int:
        return self._encode(tuple(d % self.p for d in digits))

    def frobenius(self, a):
        return self.pow(a, self.p)

    def fmt(self, a):
        terms = []
        for i, c in enumerate(self._digits[a]):
            if c:
                mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
                if not mono:
                    terms.append(str(c))
                else:
                    terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(reversed(terms)) if terms else "0"

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and (other.p, other.modulus) == (self.p, self.modulus)

    def __hash__(self):
        return hash(("GF", self.p, self.modulus))


@lru_cache(maxsize=None)
def build_ext_field(p: int, k: int = 1) -> PrimeField:
    """Field handle for GF(p^k), ``p >= 5``, ``1 <= k <= 3``.

    ``k == 1`` gives the prime field itself; otherwise the modulus is
    :func:`first_irreducible` so results are reproducible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < 5:
        raise CharacteristicError(p)
    if not 1 <= k <= 3:
        raise ValueError(f"extension degree {k} not in 1..3")
    if k == 1:
        return PrimeField(p)
    return ExtensionField(p, first_irreducible(p, k))


def parse_field(text) -> Field:
    """``"Q"``/``"QQ"`` or a prime ``p >= 5``."""
    if isinstance(text, Field):
        return text
    s = str(text).strip()
    if s.upper() in ("Q", "QQ"):
        return QQ
    try:
        p = int(s)
    except ValueError:
        raise ValueError(f"unknown field {text!r}; use Q or a prime >= 5") from None
    return build_ext_field(p, 1)

