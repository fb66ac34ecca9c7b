"""Buchberger's algorithm for homogeneous ideals in X, Y, Z (grevlex).

Pairs are processed by increasing lcm degree, which for homogeneous input
means the basis is complete degree by degree.  Only the product criterion
is used; the ideals handled here have a handful of generators.

Internally a basis element is ``[degree, coeff list, leading monomial]``;
over a prime field the inner loops use plain ``%`` arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

from ..exactalg import PrimeField, row_echelon
from .homog import HomPoly, divides, monomial_index, monomials, n_monomials, shift_map

MAX_DEGREE = 8


class DegreeCapExceeded(RuntimeError):
    pass


def _lcm(m, n):
    return (max(m[0], n[0]), max(m[1], n[1]), max(m[2], n[2]))


def _quo(m, n):
    return (m[0] - n[0], m[1] - n[1], m[2] - n[2])


def _reducer(F):
    """Return ``reduce(d, coeffs, basis)`` specialised to the field."""
    if type(F) is PrimeField:
        p = F.p

        def reduce(d, coeffs, basis):
            mons = monomials(d)
            for i in range(len(coeffs)):
                c = coeffs[i]
                if not c:
                    continue
                t = mons[i]
                for gd, gc, lm in basis:
                    if lm[0] <= t[0] and lm[1] <= t[1] and lm[2] <= t[2] and gd <= d:
                        for j, x in zip(shift_map(gd, (t[0] - lm[0], t[1] - lm[1], t[2] - lm[2])), gc):
                            if x:
                                coeffs[j] = (coeffs[j] - c * x) % p
                        break
            return coeffs
    else:
        sub, mul = F.sub, F.mul

        def reduce(d, coeffs, basis):
            mons = monomials(d)
            for i in range(len(coeffs)):
                c = coeffs[i]
                if not c:
                    continue
                t = mons[i]
                for gd, gc, lm in basis:
                    if gd <= d and divides(lm, t):
                        for j, x in zip(shift_map(gd, _quo(t, lm)), gc):
                            if x:
                                coeffs[j] = sub(coeffs[j], mul(c, x))
                        break
            return coeffs

    return reduce


def _make_monic(F, d, coeffs):
    """``(d, monic coeffs, lm)`` or ``None`` for the zero form."""
    for i, c in enumerate(coeffs):
        if c:
            if c != F.one:
                inv = F.inv(c)
                coeffs = [F.mul(inv, x) if x else x for x in coeffs]
            return (d, coeffs, monomials(d)[i])
    return None


def _shifted(d, coeffs, mult, F):
    e = d + sum(mult)
    out = [F.zero] * n_monomials(e)
    for j, x in zip(shift_map(d, mult), coeffs):
        out[j] = x
    return e, out


def groebner(gens, max_degree: int = MAX_DEGREE) -> list[HomPoly]:
    """Reduced Groebner basis (monic, grevlex X > Y > Z) of homogeneous ``gens``.

    Elements are sorted by degree, then by leading monomial (largest first).
    Raises :class:`DegreeCapExceeded` if an S-polynomial would exceed
    ``max_degree``.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    F = gens[0].field
    if any(g.field != F for g in gens):
        raise ValueError("generators over different fields")
    reduce = _reducer(F)
    G = []
    for g in sorted(gens, key=lambda h: h.degree):
        r = _make_monic(F, g.degree, reduce(g.degree, list(g.coeffs), G))
        if r is not None:
            G.append(r)
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        best = min(range(len(pairs)),
                   key=lambda k: (sum(_lcm(G[pairs[k][0]][2], G[pairs[k][1]][2])), pairs[k][1], pairs[k][0]))
        i, j = pairs.pop(best)
        fd, fc, lf = G[i]
        gd, gc, lg = G[j]
        if lf[0] * lg[0] == 0 and lf[1] * lg[1] == 0 and lf[2] * lg[2] == 0:
            continue  # coprime leading monomials
        L = _lcm(lf, lg)
        deg = sum(L)
        if deg > max_degree:
            raise DegreeCapExceeded(f"S-polynomial of degree {deg} exceeds cap {max_degree}")
        _, a = _shifted(fd, fc, _quo(L, lf), F)
        _, b = _shifted(gd, gc, _quo(L, lg), F)
        s = [F.sub(x, y) for x, y in zip(a, b)]
        r = _make_monic(F, deg, reduce(deg, s, G))
        if r is not None:
            G.append(r)
            k = len(G) - 1
            pairs.extend((a_, k) for a_ in range(k))
    return _interreduce(F, G, reduce)


def _interreduce(F, G, reduce):
    keep = []
    for idx, (d, c, lm) in enumerate(G):
        dominated = any(
            divides(lm2, lm) and (lm2 != lm or j < idx)
            for j, (_, _, lm2) in enumerate(G) if j != idx
        )
        if not dominated:
            keep.append((d, c, lm))
    out = []
    for idx, (d, c, lm) in enumerate(keep):
        others = [h for j, h in enumerate(keep) if j != idx]
        out.append(_make_monic(F, d, reduce(d, list(c), others)))
    out.sort(key=lambda t: (t[0], monomial_index(t[0])[t[2]]))
    return [HomPoly(F, d, tuple(c)) for d, c, _ in out]


def normal_form(f: HomPoly, gb) -> HomPoly:
    F = f.field
    basis = [(g.degree, list(g.coeffs), g.lead_monomial()) for g in gb]
    return HomPoly(F, f.degree, tuple(_reducer(F)(f.degree, list(f.coeffs), basis)))


def in_ideal(f: HomPoly, gb) -> bool:
    return normal_form(f, gb).is_zero()


def hilbert_function(gb, d_max: int) -> list[int]:
    """dim (R/I)_d for d = 0..d_max, by counting standard monomials."""
    return list(_standard_monomial_counts(tuple(sorted(g.lead_monomial() for g in gb)), d_max))


@lru_cache(maxsize=4096)
def _standard_monomial_counts(leads, d_max):
    return tuple(sum(1 for m in monomials(d) if not any(divides(l, m) for l in leads))
                 for d in range(d_max + 1))


def ideal_dimension_in_degree(gens, d: int) -> int:
    """dim I_d from the rank of the degree-d Macaulay matrix (no Groebner basis)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return 0
    F = gens[0].field
    rows = []
    for g in gens:
        if g.degree > d:
            continue
        for m in monomials(d - g.degree):
            rows.append(_shifted(g.degree, g.coeffs, m, F)[1])
    return len(row_echelon(F, rows)[1]) if rows else 0
