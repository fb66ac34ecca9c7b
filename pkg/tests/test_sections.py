from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F7, finite_sections, rational_sections, small_rationals
from hyperflag.exactalg import QQ
from hyperflag.sections import (
    BASIS_LABELS,
    HyperplaneP7,
    ParseError,
    SectionMatrix,
    ZeroSectionError,
    hyperplane_to_section,
    parse_hyperplane,
    parse_section,
    section_to_hyperplane,
)

any_section = st.one_of(rational_sections(), finite_sections(5), finite_sections(7))


def rows_of(A):
    return [list(r) for r in A.rows]


def test_parse_diagonal():
    assert rows_of(parse_section("X, 2Y, 3Z")) == [[1, 0, 0], [0, 2, 0], [0, 0, 3]]


def test_parse_sum_and_zero():
    assert rows_of(parse_section("Y, Z + X, 0")) == [[0, 1, 0], [1, 0, 1], [0, 0, 0]]


def test_parse_fractions_signs_and_star():
    A = parse_section("-1/2*X + Y, 3*Z - 2/3X, -Y")
    assert rows_of(A) == [[Fraction(-1, 2), 1, 0], [Fraction(-2, 3), 0, 3], [0, -1, 0]]


def test_parse_over_prime_field():
    assert rows_of(parse_section("1/2 X, -Y, 0", F7)) == [[4, 0, 0], [0, 6, 0], [0, 0, 0]]


@pytest.mark.parametrize("text,message", [
    ("X, Y", "expected 3 linear forms"),
    ("X, Y, Z, X", "expected 3 linear forms"),
    ("X^2, 0, 0", "nonlinear term"),
    ("X*Y, 0, 0", "nonlinear term"),
    ("2*3, 0, 0", "nonlinear term"),
    ("W, 0, 0", "unknown variable"),
    ("x, y, z", "unknown variable"),
    ("X + 1, 0, 0", "constant term"),
    ("1/0 X, 0, 0", "zero denominator"),
    ("X, Y, Z)", "unexpected"),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError, match=message) as info:
        parse_section(text)
    assert "at position" in str(info.value)


@given(any_section)
def test_render_parse_roundtrip(A):
    assert parse_section(A.render(), A.field).rows == A.rows


def test_render_examples():
    assert parse_section("X, 2Y, 3Z").render() == "X, 2*Y, 3*Z"
    assert parse_section("Y, Z + X, 0").render() == "Y, X+Z, 0"
    assert parse_section("-1*X, 0, 1/2 Z").render() == "-X, 0, 1/2*Z"


def test_identity_is_zero_section():
    A = SectionMatrix.from_rows([[3, 0, 0], [0, 3, 0], [0, 0, 3]])
    assert A.is_zero_section()
    with pytest.raises(ZeroSectionError):
        A.require_nonzero()
    with pytest.raises(ZeroSectionError):
        section_to_hyperplane(A)


@given(rational_sections(), small_rationals(), small_rationals().filter(lambda c: c != 0))
def test_same_section_up_to_shift(A, lam, c):
    assert A.shift(lam).same_section(A)
    assert A.scale(c).same_section(A) == A.scale(c - 1).is_zero_section()


# -- P^7 coordinates ---------------------------------------------------------------


def test_basis_labels():
    assert BASIS_LABELS == ("E11-E33", "E22-E33", "E12", "E13", "E21", "E23", "E31", "E32")


def test_unit_hyperplane():
    h = section_to_hyperplane(parse_section("Y, 0, 0"))
    assert h.coords == (0, 0, 1, 0, 0, 0, 0, 0)


def test_diagonal_hyperplane_raw_and_normalized():
    h = section_to_hyperplane(parse_section("X, 2Y, 3Z"))
    assert h.coords == (-1, 0, 0, 0, 0, 0, 0, 0)
    assert h.normalized().coords == (1, 0, 0, 0, 0, 0, 0, 0)
    assert h.normalized().fmt() == "(1,0,0,0,0,0,0,0)"


def test_hyperplane_to_section_trace_zero():
    A = hyperplane_to_section(HyperplaneP7.from_values([1, 2, 0, 0, 0, 0, 0, 5]))
    assert rows_of(A) == [[1, 0, 0], [0, 2, 0], [0, 5, -3]]


@given(any_section)
def test_section_hyperplane_roundtrip(A):
    h = section_to_hyperplane(A)
    back = hyperplane_to_section(h)
    assert back.same_section(A)
    assert back.matrix.trace() == A.field.zero
    assert section_to_hyperplane(back) == h


@given(st.lists(st.integers(-5, 5), min_size=8, max_size=8).filter(any))
def test_hyperplane_section_roundtrip(vals):
    h = HyperplaneP7.from_values(vals)
    assert section_to_hyperplane(hyperplane_to_section(h)) == h


def test_hyperplane_validation():
    with pytest.raises(ValueError, match="8 coordinates"):
        HyperplaneP7.from_values([1, 2, 3])
    with pytest.raises(ValueError, match="all-zero"):
        HyperplaneP7.from_values([0] * 8)


def test_parse_hyperplane():
    h = parse_hyperplane("(1, 0, 1/2, 0, 0, 0, 0, -3)")
    assert h.coords == (1, 0, Fraction(1, 2), 0, 0, 0, 0, -3)
    assert parse_hyperplane("1,0,0,0,0,0,0,0", F7).field == F7
    with pytest.raises(ValueError):
        parse_hyperplane("1, a, 0, 0, 0, 0, 0, 0")


def test_same_point_projective():
    h = HyperplaneP7.from_values([2, 0, 4, 0, 0, 0, 0, 0])
    g = HyperplaneP7.from_values([-1, 0, -2, 0, 0, 0, 0, 0])
    assert h.same_point(g)


def test_reduce_mod():
    A = parse_section("1/2 X, Y, 0")
    assert rows_of(A.reduce_mod(F7)) == [[4, 0, 0], [0, 1, 0], [0, 0, 0]]
    with pytest.raises(ValueError):
        parse_section("X, 0, 0", F7).reduce_mod(QQ)
