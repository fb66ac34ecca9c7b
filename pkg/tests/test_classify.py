import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F5, F7, WITNESSES, finite_sections, rational_sections, small_rationals, structured_sections, witness
from hyperflag.classify import (
    Singularity,
    classify_section,
    conjugate_check,
    discriminant,
    good_primes,
    section_degree,
    summary_sentence,
    verdict,
)
from hyperflag.exactalg import QQ, Matrix3, UniPoly, build_ext_field
from hyperflag.multipoly import common_linear_factor, minors_ideal, oracle_classify
from hyperflag.sections import ZeroSectionError, parse_section
from hyperflag.zerotypes import ZeroSchemeType

any_section = st.one_of(rational_sections(), finite_sections(5), finite_sections(7))


def dot(F, u, v):
    acc = F.zero
    for x, y in zip(u, v):
        acc = F.add(acc, F.mul(x, y))
    return acc


def is_eigenvector(A, v):
    F = A.field
    w = A.matrix @ v
    cross = (F.sub(F.mul(w[1], v[2]), F.mul(w[2], v[1])),
             F.sub(F.mul(w[2], v[0]), F.mul(w[0], v[2])),
             F.sub(F.mul(w[0], v[1]), F.mul(w[1], v[0])))
    return all(F.is_zero(c) for c in cross)


# -- witnesses -------------------------------------------------------------------


def test_diagonal_three_points():
    r = classify_section(witness("a"))
    assert r.type is ZeroSchemeType.A_ThreeDistinctPoints
    assert r.rational_points == [((0, 0, 1), 1), ((0, 1, 0), 1), ((1, 0, 0), 1)]


def test_line_plus_point():
    r = classify_section(witness("d"))
    assert r.type.letter == "d"
    assert r.line == (0, 1, 0)
    assert r.rational_points == [((0, 1, 0), 1)]
    assert r.to_dict()["line"] == "Y"


def test_line_with_embedded_point():
    r = classify_section(witness("e", F7))
    d = r.to_dict()
    assert (d["type"], d["line"], d["embedded_point"]) == ("e", "Y", "(1,0,0)")


def test_double_point():
    r = classify_section(witness("b"))
    assert r.type.letter == "b"
    assert r.rational_points == [((1, 0, 0), 2), ((0, 0, 1), 1)]


@pytest.mark.parametrize("text,point", [("Y, Z, 0", (1, 0, 0)), ("Z, Z + X, 0", (0, 1, 0))])
def test_triple_point_examples(text, point):
    r = classify_section(parse_section(text))
    assert r.type.letter == "c"
    assert r.rational_points == [(point, 3)]


def test_irrational_points_over_q_and_gf7():
    r = classify_section(parse_section("Y, -X, 0"))
    assert r.type.letter == "a"
    assert r.rational_points == [((0, 0, 1), 1)]
    (orb,) = r.galois_orbits
    assert orb.to_dict() == {"minimal_polynomial": "t^2 + 1", "point": "(1,t,0)"}
    orb7 = classify_section(parse_section("Y, -X, 0", F7)).galois_orbits[0]
    assert orb7.to_dict()["conjugates"] == ["(1,a,0)", "(1,6*a,0)"]


def test_cubic_orbit_conjugates_are_eigenvectors():
    # companion matrix of t^3 - 2; 2 is not a cube mod 7
    A = parse_section("2Z, X, Y", F7)
    r = classify_section(A)
    (orb,) = r.galois_orbits
    assert orb.size == 3
    E = orb.conjugate_field
    AE = Matrix3(E, A.rows)
    for v in orb.conjugates:
        w = AE @ v
        lam = next(E.div(w[i], v[i]) for i in range(3) if not E.is_zero(v[i]))
        assert all(E.is_zero(E.sub(w[i], E.mul(lam, v[i]))) for i in range(3))


def test_zero_section_rejected():
    with pytest.raises(ZeroSectionError):
        classify_section(parse_section("2X, 2Y, 2Z"))


# -- invariants --------------------------------------------------------------------


@given(any_section)
def test_partition_and_witness_consistency(A):
    r = classify_section(A)
    F = A.field
    assert r.type in set(ZeroSchemeType)
    for v, _ in r.rational_points:
        assert is_eigenvector(A, v)
    if r.type.letter in "abc":
        assert r.total_multiplicity == 3
        assert r.line is None
    else:
        L = common_linear_factor(minors_ideal(A))
        assert L is not None and tuple(L.coeffs) == r.line
    if r.type.letter == "d":
        assert not F.is_zero(dot(F, r.line, r.rational_points[0][0]))
    if r.type.letter == "e":
        assert F.is_zero(dot(F, r.line, r.embedded_point))
        assert is_eigenvector(A, r.embedded_point)


@given(rational_sections(), small_rationals())
def test_shift_invariance(A, lam):
    assert classify_section(A.shift(lam)).to_dict() == classify_section(A).to_dict()


@given(rational_sections(), small_rationals().filter(lambda c: c != 0))
def test_scale_invariance(A, c):
    r, s = classify_section(A), classify_section(A.scale(c))
    assert r.type == s.type
    assert r.line == s.line and r.embedded_point == s.embedded_point
    assert [v for v, _ in r.rational_points] == [v for v, _ in s.rational_points]


@given(structured_sections(7))
def test_conjugated_normal_forms_keep_type(pair):
    letter, A = pair
    assert classify_section(A).type.letter == letter


@given(st.one_of(finite_sections(7), finite_sections(5)), st.lists(st.integers(0, 4), min_size=9, max_size=9))
def test_conjugation_equivariance(A, vals):
    P = Matrix3.from_rows(A.field, [vals[0:3], vals[3:6], vals[6:9]])
    if A.field.is_zero(P.det()):
        return
    assert conjugate_check(A, P)


def test_conjugation_equivariance_rational():
    P = Matrix3.from_rows(QQ, [[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    for letter in WITNESSES:
        assert conjugate_check(witness(letter), P)


# -- oracle agreement ------------------------------------------------------------------


@given(finite_sections(7))
def test_oracle_agrees_mod_7(A):
    assert oracle_classify(A, 7).deduced_type == classify_section(A).type.letter


@given(structured_sections(5))
def test_oracle_agrees_on_rare_types(pair):
    _, A = pair
    assert oracle_classify(A, 5).deduced_type == classify_section(A).type.letter


@given(rational_sections(bound=3))
def test_oracle_agrees_at_good_primes(A):
    letter = classify_section(A).type.letter
    for p in good_primes(A):
        assert oracle_classify(A, p).deduced_type == letter


def test_good_primes_skip_bad_reduction():
    assert good_primes(witness("a")) == [5, 7, 11]
    # eigenvalues 0, 5, 7: the discriminant vanishes mod 5 and 7
    assert good_primes(parse_section("0, 5Y, 7Z")) == [11, 13, 17]
    # a denominator of 11
    assert 11 not in good_primes(parse_section("1/11 X, 2Y, 3Z"))


def test_discriminant():
    F = QQ
    assert discriminant(UniPoly.from_ints(F, [-6, 11, -6, 1])) == 4
    assert discriminant(UniPoly.from_ints(F, [0, 0, 0, 1])) == 0
    assert discriminant(UniPoly.from_ints(F, [-1, -1, 0, 1])) == -23


# -- verdicts ----------------------------------------------------------------------


def test_section_degree_is_six():
    assert section_degree() == 6


@pytest.mark.parametrize("letter", sorted(WITNESSES))
def test_verdict_degree_bookkeeping(letter):
    v = verdict(classify_section(witness(letter)))
    assert v.degree == 6
    if letter in "abc":
        assert v.kind == "irreducible"
        assert [c.degree for c in v.components] == [6]
    else:
        assert v.kind == "union_of_two_cubics"
        assert [c.degree for c in v.components] == [3, 3]


def test_verdict_sentences():
    assert "non-singular Del Pezzo surface" in summary_sentence(classify_section(witness("a")))
    assert verdict(classify_section(witness("a"))).singularity is Singularity.SMOOTH_DEL_PEZZO
    assert verdict(classify_section(witness("b"))).singularity is Singularity.ONE_POINT_MULT2
    assert verdict(classify_section(witness("c"))).singularity is Singularity.ONE_POINT_MULT3
    assert "union of two degree three surfaces" in summary_sentence(classify_section(witness("d")))


def test_verdict_centers():
    v = verdict(classify_section(witness("d")))
    assert v.components[0].center == ["(0,1,0)"]
    assert "Y = 0" in v.components[1].description
    v = verdict(classify_section(witness("e", F5)))
    assert v.components[0].center == ["(1,0,0)"]
    v = verdict(classify_section(witness("a")))
    assert v.components[0].center_length == 3


def test_irrational_verdict_center_mentions_root():
    v = verdict(classify_section(parse_section("Y, -X, 0")))
    assert any("t^2 + 1" in c for c in v.components[0].center)


def test_extension_field_sections():
    E = build_ext_field(5, 2)
    A = parse_section("Y, 2X, 0", E)  # 2 is a non-square mod 5 but a square in GF(25)
    r = classify_section(A)
    assert r.type.letter == "a" and len(r.rational_points) == 3
    with pytest.raises(ValueError):
        oracle_classify(A, 5)
