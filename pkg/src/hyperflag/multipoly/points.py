"""Brute-force enumeration of projective points over GF(p^k).

Points are normalized so the first nonzero coordinate is 1 and listed in
lexicographic order of their coordinate codes.  Evaluation is vectorized
with numpy: an element of GF(p^k) is an int code, multiplication goes
through log/antilog tables and addition through base-p digits.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..exactalg import ExtensionField, build_ext_field
from ..exactalg.fields import _prime_factors
from .homog import monomials

MAX_POINTS = 5_000_000


class _ArrayOps:
    """numpy arithmetic on int codes of a finite field."""

    def __init__(self, F):
        self.F = F
        self.p = F.p
        self.k = F.degree
        self.q = F.order
        if isinstance(F, ExtensionField):
            self.exp = np.asarray(F._exp, dtype=np.int64)
            self.log = np.asarray(F._log, dtype=np.int64)
            self.digits = np.asarray(F._digits, dtype=np.int64)
            self.weights = self.p ** np.arange(self.k, dtype=np.int64)
        else:
            self.exp, self.log = _prime_log_tables(self.p)

    def mul(self, u, v):
        if self.k == 1:
            return (u * v) % self.p
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        u, v = np.broadcast_arrays(u, v)
        out = self.exp[self.log[u] + self.log[v]]
        return np.where((u == 0) | (v == 0), 0, out)

    def add(self, u, v):
        if self.k == 1:
            return (u + v) % self.p
        return ((self.digits[u] + self.digits[v]) % self.p) @ self.weights

    def neg(self, u):
        if self.k == 1:
            return (-u) % self.p
        return ((-self.digits[u]) % self.p) @ self.weights

    def sub(self, u, v):
        return self.add(u, self.neg(v))

    def inv(self, u):
        """Inverse where ``u != 0``; zero entries map to zero."""
        u = np.asarray(u, dtype=np.int64)
        out = self.exp[(self.q - 1 - self.log[u]) % (self.q - 1)]
        return np.where(u == 0, 0, out)

    def sqrt(self, u):
        """``(root, is_square)``; the root is meaningful where ``is_square``."""
        u = np.asarray(u, dtype=np.int64)
        lg = self.log[u]
        square = (u == 0) | (lg % 2 == 0)
        root = np.where(u == 0, 0, self.exp[lg // 2])
        return root, square

    def comps(self, u):
        u = np.asarray(u, dtype=np.int64)
        if self.k == 1:
            return u[..., None]
        return self.digits[u]

    def power(self, u, n):
        out = np.ones_like(u)
        for _ in range(n):
            out = self.mul(out, u)
        return out

    def frobenius(self, u):
        return self.power(u, self.p)


def _prime_log_tables(p):
    order = p - 1
    factors = _prime_factors(order)
    g = next(g for g in range(2, p) if all(pow(g, order // r, p) != 1 for r in factors))
    exp = np.zeros(2 * order, dtype=np.int64)
    log = np.zeros(p, dtype=np.int64)
    x = 1
    for i in range(order):
        exp[i] = exp[i + order] = x
        log[x] = i
        x = x * g % p
    return exp, log


@lru_cache(maxsize=None)
def _ops(F):
    return _ArrayOps(F)


@lru_cache(maxsize=16)
def point_array(F) -> np.ndarray:
    """All normalized points of P^2(F) as an (N, 3) array of codes, sorted."""
    q = F.order
    if q * q + q + 1 > MAX_POINTS:
        raise ValueError(f"P^2 over a field of size {q} is too large to enumerate")
    r = np.arange(q, dtype=np.int64)
    yy, zz = np.meshgrid(r, r, indexing="ij")
    chart0 = np.stack([np.ones(q * q, dtype=np.int64), yy.ravel(), zz.ravel()], axis=1)
    chart1 = np.stack([np.zeros(q, dtype=np.int64), np.ones(q, dtype=np.int64), r], axis=1)
    pts = np.concatenate([np.array([[0, 0, 1]], dtype=np.int64), chart1, chart0])
    pts.setflags(write=False)
    return pts


def monomial_values(F, pts, d: int) -> np.ndarray:
    """(N, n_monomials(d)) codes of every degree-d monomial at each point."""
    ops = _ops(F)
    powers = [[np.ones(len(pts), dtype=np.int64)] for _ in range(3)]
    for v in range(3):
        for _ in range(d):
            powers[v].append(ops.mul(powers[v][-1], pts[:, v]))
    cols = [ops.mul(ops.mul(powers[0][a], powers[1][b]), powers[2][c]) for a, b, c in monomials(d)]
    return np.stack(cols, axis=1)


def _check_fields(gens, F):
    for g in gens:
        G = g.field
        ok = G == F or (G.is_finite and G.degree == 1 and G.p == F.p)
        if not ok:
            raise ValueError(f"generator over {G} cannot be evaluated over {F}")


def vanishing_mask(gens, F, pts) -> np.ndarray:
    ops = _ops(F)
    mask = np.ones(len(pts), dtype=bool)
    by_degree = {}
    for g in gens:
        by_degree.setdefault(g.degree, []).append(g)
    for d, group in by_degree.items():
        mv = monomial_values(F, pts, d)
        for g in group:
            acc = np.zeros((len(pts), ops.k), dtype=np.int64)
            for m, c in enumerate(g.coeffs):
                if c:
                    acc += ops.comps(ops.mul(np.int64(c), mv[:, m]))
            mask &= ~(acc % ops.p).any(axis=1)
    return mask


def rational_points(gens, field) -> list[tuple]:
    """Common zeros of homogeneous ``gens`` in P^2(field), normalized and sorted."""
    if not field.is_finite:
        raise ValueError("enumeration requires finite field")
    gens = list(gens)
    _check_fields(gens, field)
    pts = point_array(field)
    mask = vanishing_mask(gens, field, pts)
    return [tuple(int(x) for x in row) for row in pts[mask]]


def count_points_over(gens, p: int, k: int) -> int:
    return len(rational_points(gens, build_ext_field(p, k)))


def count_conic_zeros(gens, F) -> int:
    """Common zeros in P^2(F) of quadrics, without enumerating the plane.

    On the chart X = 1 each form is a quadratic in z whose coefficients are
    polynomials in y; for every y at once the roots of the first nonzero
    one are found with the quadratic formula and tested in the others.  The
    line X = 0 is enumerated directly.  Work is O(|F|) array operations.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not F.is_finite:
        raise ValueError("enumeration requires finite field")
    if any(g.degree != 2 for g in gens):
        raise ValueError("only quadrics are supported")
    _check_fields(gens, F)
    ops = _ops(F)
    q = F.order
    at_infinity = np.concatenate([
        np.stack([np.zeros(q, dtype=np.int64), np.ones(q, dtype=np.int64), np.arange(q)], axis=1),
        np.array([[0, 0, 1]], dtype=np.int64),
    ])
    on_line = int(vanishing_mask(gens, F, at_infinity).sum())
    if not gens:
        return q * q + on_line
    y = np.arange(q, dtype=np.int64)
    yy = ops.mul(y, y)
    polys = []
    for g in gens:
        xx, xy, y2, xz, yz, zz = (np.full(q, int(c), dtype=np.int64) for c in g.coeffs)
        a = zz
        b = ops.add(xz, ops.mul(yz, y))
        c = ops.add(ops.add(xx, ops.mul(xy, y)), ops.mul(y2, yy))
        polys.append((a, b, c))
    nonzero = [(a != 0) | (b != 0) | (c != 0) for a, b, c in polys]
    all_zero = ~np.logical_or.reduce(nonzero)
    a = np.select(nonzero, [P[0] for P in polys], 0)
    b = np.select(nonzero, [P[1] for P in polys], 0)
    c = np.select(nonzero, [P[2] for P in polys], 0)
    two, four = ops.F.from_int(2), ops.F.from_int(4)
    quad = a != 0
    disc = ops.sub(ops.mul(b, b), ops.mul(four, ops.mul(a, c)))
    s, square = ops.sqrt(disc)
    inv2a = ops.inv(ops.mul(two, a))
    nb = ops.neg(b)
    r1 = np.where(quad, ops.mul(ops.add(nb, s), inv2a), ops.mul(ops.neg(c), ops.inv(b)))
    r2 = ops.mul(ops.sub(nb, s), inv2a)
    v1 = (quad & square) | (~quad & (b != 0))
    v2 = quad & square & (disc != 0)

    def vanishes_everywhere(r):
        rr = ops.mul(r, r)
        ok = np.ones(q, dtype=bool)
        for pa, pb, pc in polys:
            ok &= ops.add(ops.add(ops.mul(pa, rr), ops.mul(pb, r)), pc) == 0
        return ok

    per_y = (v1 & vanishes_everywhere(r1)).astype(np.int64) + (v2 & vanishes_everywhere(r2))
    per_y = np.where(all_zero, q, per_y)
    return int(per_y.sum()) + on_line


class OrbitCounter:
    """Counts zeros over GF(p^k), k = 1..max_k, of batches of forms over GF(p).

    A form with GF(p) coefficients vanishes on a whole Frobenius orbit or on
    none of it, so each orbit of exact degree ``e`` is tested once (through
    its ``e`` GF(p)-components) and contributes ``e`` points to every
    ``k`` divisible by ``e``.
    """

    def __init__(self, p: int, degree: int = 2, max_k: int = 3):
        self.p = p
        self.degree = degree
        self.max_k = max_k
        self.tables = {}  # exact degree e -> (n_orbits, e, n_monomials) int array
        self._scaled = {}  # e -> (n_monomials, e * n_orbits) float32, component-major
        for e in range(1, max_k + 1):
            W = self._orbit_table(e)
            self.tables[e] = W
            flat = np.transpose(W, (1, 0, 2)).reshape(-1, W.shape[2]).T
            self._scaled[e] = np.ascontiguousarray(flat / p, dtype=np.float32)

    def _orbit_table(self, e):
        F = build_ext_field(self.p, e)
        ops = _ops(F)
        pts = point_array(F)
        if e == 1:
            reps = pts
        else:
            q = F.order
            inside = (pts < self.p).all(axis=1)  # defined over GF(p)
            code = (pts[:, 0] * q + pts[:, 1]) * q + pts[:, 2]
            best = code.copy()
            cur = pts
            for _ in range(e - 1):
                cur = ops.frobenius(cur)
                best = np.minimum(best, (cur[:, 0] * q + cur[:, 1]) * q + cur[:, 2])
            # exact degree e (e prime here), one representative per orbit
            reps = pts[~inside & (best == code)]
        mv = monomial_values(F, reps, self.degree)
        comps = ops.comps(mv)  # (n, nmon, e)
        return np.ascontiguousarray(np.transpose(comps, (0, 2, 1)))

    def orbit_hits(self, coeffs: np.ndarray, e: int) -> np.ndarray:
        """(B,) number of exact-degree-``e`` orbits on which all forms vanish.

        ``coeffs`` has shape (B, g, n_monomials) with entries in [0, p).
        """
        p = self.p
        W = self.tables[e]
        Wscaled = self._scaled[e]
        B = coeffs.shape[0]
        n = W.shape[0]
        # Filter: the first nonzero form must vanish in every component.  The
        # float32 products are exact integers scaled by 1/p, so a multiple of
        # p lands within rounding error of an integer and anything else at
        # least 1/p away.  Survivors are confirmed exactly with every form.
        lead = coeffs[np.arange(B), np.argmax(coeffs.any(axis=2), axis=1)].astype(np.float32)
        tol = (0.5 / p) ** 2
        hits = np.zeros(B, dtype=np.int64)
        chunk = max(1, 262_144 // (n * e))  # keep the float block cache-sized
        for s in range(0, B, chunk):
            v = lead[s:s + chunk] @ Wscaled
            v -= np.rint(v)
            v *= v
            v = v.reshape(-1, e, n).sum(axis=1)
            bi, oi = np.nonzero(v < tol)
            if len(bi) == 0:
                continue
            full = (coeffs[s + bi][:, :, None, :] * W[oi][:, None, :, :]).sum(axis=3) % p
            ok = ~full.reshape(len(bi), -1).any(axis=1)
            hits[s:s + chunk] += np.bincount(bi[ok], minlength=min(chunk, B - s))
        return hits

    def counts(self, coeffs) -> np.ndarray:
        """(B, max_k) point counts over GF(p^1..max_k)."""
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.ndim == 2:
            coeffs = coeffs[None]
        hits = {e: self.orbit_hits(coeffs, e) for e in self.tables}
        out = np.zeros((coeffs.shape[0], self.max_k), dtype=np.int64)
        for k in range(1, self.max_k + 1):
            for e, h in hits.items():
                if k % e == 0:
                    out[:, k - 1] += e * h
        return out


@lru_cache(maxsize=8)
def orbit_counter(p: int) -> OrbitCounter:
    return OrbitCounter(p)


def coefficient_array(gens) -> np.ndarray:
    """(g, n_monomials) int array of prime-field generator coefficients."""
    return np.array([[int(c) for c in g.coeffs] for g in gens], dtype=np.int64)
