"""The five possible zero schemes of a nonzero vector field on P^2."""

from enum import Enum


class ZeroSchemeType(str, Enum):
    A_ThreeDistinctPoints = "a"
    B_TwoPointsOneDouble = "b"
    C_OneTriplePoint = "c"
    D_LinePlusPoint = "d"
    E_LineEmbeddedPoint = "e"

    @property
    def letter(self) -> str:
        return self.value

    @property
    def has_line(self) -> bool:
        return self.value in "de"

    @property
    def description(self) -> str:
        return _DESCRIPTIONS[self.value]

    def __str__(self):
        return self.value


_DESCRIPTIONS = {
    "a": "three distinct points",
    "b": "two points, one of multiplicity two",
    "c": "one point of multiplicity three",
    "d": "a line and a point off the line",
    "e": "a line with an embedded point",
}
