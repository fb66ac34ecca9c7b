"""P(T_P2) over GF(q) as the flag variety of incident (point, line) pairs.

A section ``A`` pairs with a flag ``(a, b)`` as ``b . (A a)``: the line
``b`` through ``a`` is the tangent direction ``A a`` mod ``a``.  The
identity pairs to ``b . a = 0``, so the value depends only on the section.
Over a point where the section does not vanish exactly one line qualifies;
over a zero every line through the point does, whence

    |H cap P(T)|(GF(q)) = q^2 + q + 1 + q * N,

with N the number of GF(q)-points of the reduced zero locus.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .classify import classify_section
from .exactalg import QQ, build_ext_field
from .multipoly import minors_ideal, rational_points
from .multipoly.oracle import INCONSISTENT, oracle_classify
from .multipoly.points import coefficient_array, orbit_counter, point_array
from .sections import HyperplaneP7, SectionMatrix, hyperplane_to_section
from .zerotypes import ZeroSchemeType

TYPE_LETTERS = tuple(t.letter for t in ZeroSchemeType)


@dataclass(frozen=True)
class FlagPoint:
    a: tuple  # point of P^2, normalized
    b: tuple  # line b1 X + b2 Y + b3 Z, normalized

    def is_incident(self, F) -> bool:
        acc = F.zero
        for x, y in zip(self.a, self.b):
            acc = F.add(acc, F.mul(x, y))
        return F.is_zero(acc)


def flag_points(q: int) -> list[FlagPoint]:
    """All incident pairs over GF(q), q prime."""
    arr = flag_array(q)
    return [FlagPoint(tuple(map(int, r[:3])), tuple(map(int, r[3:]))) for r in arr]


@lru_cache(maxsize=8)
def flag_array(q: int) -> np.ndarray:
    """(n_flags, 6) array: point coordinates then line coefficients."""
    F = build_ext_field(q, 1)
    pts = point_array(F)
    inc = (pts @ pts.T) % q == 0
    ai, bi = np.nonzero(inc)
    arr = np.concatenate([pts[ai], pts[bi]], axis=1)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=8)
def _pairing_matrix(q: int) -> np.ndarray:
    """(9, n_flags) with row 3i+j holding b_i * a_j mod q."""
    arr = flag_array(q)
    a, b = arr[:, :3], arr[:, 3:]
    return np.stack([(b[:, i] * a[:, j]) % q for i in range(3) for j in range(3)])


def evaluate_section_at_flag(A: SectionMatrix, f: FlagPoint):
    """``sum_ij A_ij b_i a_j``."""
    F = A.field
    if not f.is_incident(F):
        raise ValueError(f"flag {f} violates incidence")
    acc = F.zero
    for i in range(3):
        for j in range(3):
            acc = F.add(acc, F.mul(A.rows[i][j], F.mul(f.b[i], f.a[j])))
    return acc


def flag_zero_counts(entries: np.ndarray, q: int) -> np.ndarray:
    """Number of flags on each section; ``entries`` is (B, 9) row-major in [0, q)."""
    vals = (np.asarray(entries, dtype=np.int64) @ _pairing_matrix(q)) % q
    return (vals == 0).sum(axis=1)


def fiber_hits(A: SectionMatrix, q: int) -> dict:
    """Point of P^2 -> number of flags over it lying on the section."""
    arr = flag_array(q)
    entries = np.array([[int(x) for x in A.matrix.entries()]])
    on = ((entries @ _pairing_matrix(q)) % q == 0)[0]
    out = Counter()
    for row in arr[on]:
        out[tuple(int(x) for x in row[:3])] += 1
    return dict(out)


@dataclass
class CountReport:
    q: int
    total_flag: int
    section_count: int
    reduced_zero_count: int
    predicted: int
    match: bool

    def to_dict(self) -> dict:
        return {"q": self.q, "total_flag": self.total_flag, "section_count": self.section_count,
                "reduced_zero_count": self.reduced_zero_count, "predicted": self.predicted,
                "match": self.match}


def predicted_count(q: int, n: int) -> int:
    return q * q + q + 1 + q * n


def _to_prime_field(A: SectionMatrix, q: int) -> SectionMatrix:
    F = build_ext_field(q, 1)
    if A.field == QQ:
        return A.reduce_mod(F)
    if A.field != F:
        raise ValueError(f"section over {A.field} cannot be counted over GF({q})")
    return A


def count_hyperplane_section(A: SectionMatrix, q: int) -> CountReport:
    A = _to_prime_field(A, q).require_nonzero()
    F = A.field
    total = len(flag_array(q))
    count = int(flag_zero_counts(np.array([[int(x) for x in A.matrix.entries()]]), q)[0])
    n = len(rational_points(minors_ideal(A).as_list(), F))
    pred = predicted_count(q, n)
    return CountReport(q, total, count, n, pred, count == pred)


# -- sweeps -------------------------------------------------------------------


def _splitmix64(seed: int):
    mask = (1 << 64) - 1
    state = seed & mask
    while True:
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        yield z ^ (z >> 31)


def _uniform(rng, q):
    limit = (1 << 64) - ((1 << 64) % q)
    while True:
        x = next(rng)
        if x < limit:
            return x % q


def normalize_coords(v, q):
    for c in v:
        if c:
            inv = pow(c, -1, q)
            return tuple(x * inv % q for x in v)
    return None


def exhaustive_classes(q: int):
    """Every hyperplane of P^7(GF(q)) once, first nonzero coordinate 1."""
    for lead in range(8):
        for rest in product(range(q), repeat=7 - lead):
            yield (0,) * lead + (1,) + rest


def sampled_classes(q: int, n: int, seed: int):
    """``n`` distinct hyperplane classes drawn uniformly with splitmix64."""
    total = (q**8 - 1) // (q - 1)
    if n > total:
        raise ValueError(f"only {total} classes exist over GF({q})")
    rng = _splitmix64(seed)
    seen = set()
    while len(seen) < n:
        v = normalize_coords([_uniform(rng, q) for _ in range(8)], q)
        if v is None or v in seen:
            continue
        seen.add(v)
        yield v


@dataclass
class SweepSummary:
    q: int
    mode: str
    seed: int | None
    classes: int = 0
    tallies: dict = field(default_factory=lambda: {t: 0 for t in TYPE_LETTERS})
    oracle_agreements: int = 0
    count_matches: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures and all(self.tallies[t] >= 0 for t in TYPE_LETTERS)

    @property
    def all_types_seen(self) -> bool:
        return all(self.tallies[t] > 0 for t in TYPE_LETTERS)

    def to_dict(self) -> dict:
        return {"q": self.q, "mode": self.mode, "seed": self.seed, "classes": self.classes,
                "tallies": dict(self.tallies), "oracle_agreements": self.oracle_agreements,
                "count_matches": self.count_matches, "failures": len(self.failures),
                "failure_records": self.failures}


def sweep_sections(q: int, sections, mode: str = "list", seed=None, batch: int = 4096) -> SweepSummary:
    """Run classifier, oracle and flag count on each section; record disagreements."""
    summary = SweepSummary(q, mode, seed)
    t0 = time.perf_counter()
    F = build_ext_field(q, 1)
    counter = orbit_counter(q)
    buf = []

    def flush():
        if not buf:
            return
        minors = [minors_ideal(A) for A in buf]
        coeffs = np.stack([coefficient_array(m.as_list()) for m in minors])
        pcounts = counter.counts(coeffs)
        entries = np.array([[int(x) for x in A.matrix.entries()] for A in buf])
        fcounts = flag_zero_counts(entries, q)
        for A, m, pc, fc in zip(buf, minors, pcounts, fcounts):
            _check_one(summary, A, m, pc, int(fc), q)
        buf.clear()

    for A in sections:
        if A.field != F:
            A = _to_prime_field(A, q)
        buf.append(A)
        if len(buf) >= batch:
            flush()
    flush()
    summary.elapsed = time.perf_counter() - t0
    return summary


def _check_one(summary, A, m, pc, fc, q):
    summary.classes += 1
    rec = {"section": A.render()}
    try:
        rep = classify_section(A)
    except Exception as exc:  # noqa: BLE001 - every failure is recorded
        rec["reason"] = f"classifier error: {exc}"
        summary.failures.append(rec)
        return
    letter = rep.type.letter
    summary.tallies[letter] += 1
    counts = {k + 1: int(c) for k, c in enumerate(pc)}
    orc = oracle_classify(A, q, minors=m, point_counts=counts)
    reasons = []
    if orc.deduced_type == letter:
        summary.oracle_agreements += 1
    else:
        reasons.append(f"classifier {letter} vs oracle {orc.deduced_type}")
    n = counts[1]
    if fc == predicted_count(q, n):
        summary.count_matches += 1
    else:
        reasons.append(f"flag count {fc} != {predicted_count(q, n)}")
    if rep.rational_count(q) != n:
        reasons.append(f"classifier sees {rep.rational_count(q)} rational zeros, minors {n}")
    if orc.deduced_type == INCONSISTENT:
        reasons.append("oracle invariants inconsistent")
    if reasons:
        rec["reason"] = "; ".join(reasons)
        summary.failures.append(rec)


def sweep_verify(q: int, sample="exhaustive", seed: int = 42) -> SweepSummary:
    """Full check over GF(q): every class, or a seeded sample."""
    if q < 5:
        build_ext_field(q, 1)  # raises the characteristic error
    F = build_ext_field(q, 1)
    if sample == "exhaustive":
        coords, mode, seed = exhaustive_classes(q), "exhaustive", None
    else:
        coords, mode = sampled_classes(q, int(sample), seed), f"sample:{int(sample)}"
    sections = (hyperplane_to_section(HyperplaneP7(F, c)) for c in coords)
    return sweep_sections(q, sections, mode, seed)
