"""Zero-scheme type from ideal invariants alone.

Nothing here looks at eigenvalues: the type is read off the Hilbert
function of the minor ideal, a common linear factor of the minors, and how
many points the zero locus has over GF(p), GF(p^2), GF(p^3).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..exactalg import QQ, build_ext_field
from ..sections import SectionMatrix
from .groebner import groebner, hilbert_function
from .homog import HomPoly
from .minors import MinorTriple, common_linear_factor, minors_ideal
from .points import count_conic_zeros

HF_ZERO_DIM = [1, 3, 3, 3, 3, 3]
HF_LINE = [1, 3, 4, 5, 6, 7]
INCONSISTENT = "inconsistent"


@dataclass
class IdealOracleReport:
    p: int
    minors: MinorTriple
    gb: list[HomPoly]
    hf: list[int]
    line_factor: HomPoly | None
    point_counts: dict[int, int]
    deduced_type: str
    notes: list[str] = field(default_factory=list)

    @property
    def geometric_points(self) -> int:
        """Distinct points over the algebraic closure (0-dimensional case).

        Orbits of size 1, 2, 3 give N1 = a1, N2 = a1 + 2 a2, N3 = a1 + 3 a3,
        so a1 + 2 a2 + 3 a3 = N2 + N3 - N1.
        """
        c = self.point_counts
        return c[2] + c[3] - c[1]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "minors": [q.fmt() for q in self.minors.as_list()],
            "groebner_basis": [g.fmt() for g in self.gb],
            "hf": list(self.hf),
            "line_factor": self.line_factor.fmt() if self.line_factor is not None else None,
            "point_counts": {str(k): v for k, v in sorted(self.point_counts.items())},
            "deduced_type": self.deduced_type,
        }


def deduce_type(hf, line_factor, counts, q) -> str:
    """Five-way decision from the invariants; ``"inconsistent"`` flags a bug."""
    if hf[:len(HF_ZERO_DIM)] == HF_ZERO_DIM and line_factor is None:
        distinct = counts[2] + counts[3] - counts[1]
        return {3: "a", 2: "b", 1: "c"}.get(distinct, INCONSISTENT)
    if hf[:len(HF_LINE)] == HF_LINE and line_factor is not None:
        if all(counts[k] == q**k + 2 for k in counts):
            return "d"
        if all(counts[k] == q**k + 1 for k in counts):
            return "e"
    return INCONSISTENT


def oracle_classify(A: SectionMatrix, p: int, d_max: int = 5, *, minors: MinorTriple | None = None,
                    point_counts: dict[int, int] | None = None) -> IdealOracleReport:
    """Re-derive the zero-scheme type of ``A`` from its minor ideal over GF(p).

    A rational section is reduced mod ``p`` first (its denominators must be
    prime to ``p``).  Batch callers may pass the minors and the point counts
    they already computed.
    """
    Fp = build_ext_field(p, 1)
    if A.field == QQ:
        A = A.reduce_mod(Fp)
    elif A.field != Fp:
        raise ValueError(f"oracle needs a section over QQ or GF({p}), got {A.field}")
    if d_max < 5:
        raise ValueError("d_max must be at least 5")
    m = minors if minors is not None else minors_ideal(A)
    gb = groebner(m.nonzero())
    hf = hilbert_function(gb, d_max)
    line = common_linear_factor(m)
    if point_counts is None:
        point_counts = {k: count_conic_zeros(m.as_list(), build_ext_field(p, k)) for k in (1, 2, 3)}
    counts = dict(point_counts)
    return IdealOracleReport(p, m, gb, hf, line, counts, deduce_type(hf, line, counts, p))
