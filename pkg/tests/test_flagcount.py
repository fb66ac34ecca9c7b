import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F5, F7, WITNESSES, class_counts_by_type, finite_sections, structured_sections, witness
from hyperflag import flagcount
from hyperflag.classify import classify_section
from hyperflag.exactalg import Matrix3, build_ext_field
from hyperflag.flagcount import (
    FlagPoint,
    count_hyperplane_section,
    evaluate_section_at_flag,
    exhaustive_classes,
    fiber_hits,
    flag_array,
    flag_points,
    flag_zero_counts,
    predicted_count,
    sampled_classes,
    sweep_sections,
    sweep_verify,
)
from hyperflag.multipoly import minors_ideal, rational_points
from hyperflag.sections import SectionMatrix, parse_section


@pytest.mark.parametrize("q", [5, 7, 11])
def test_flag_variety_size(q):
    flags = flag_points(q)
    assert len(flags) == (q * q + q + 1) * (q + 1)
    F = build_ext_field(q)
    assert all(f.is_incident(F) for f in flags)
    assert len(set(flags)) == len(flags)


def test_incidence_violation_raises():
    with pytest.raises(ValueError, match="incidence"):
        evaluate_section_at_flag(witness("a", F7), FlagPoint((1, 0, 0), (1, 0, 0)))


def test_identity_vanishes_on_every_flag():
    I = SectionMatrix(Matrix3.identity(F5))
    assert all(evaluate_section_at_flag(I, f) == 0 for f in flag_points(5))


@given(finite_sections(5), st.integers(0, 4))
def test_evaluation_well_defined(A, lam):
    B = A.shift(lam)
    for f in flag_points(5):
        assert evaluate_section_at_flag(A, f) == evaluate_section_at_flag(B, f)


@given(finite_sections(7))
def test_vectorized_count_matches_pointwise(A):
    direct = sum(1 for f in flag_points(7) if evaluate_section_at_flag(A, f) == 0)
    entries = np.array([[int(x) for x in A.matrix.entries()]])
    assert int(flag_zero_counts(entries, 7)[0]) == direct


def test_unit_pairing_value():
    # b . (E12 a) = b1 * a2
    E12 = SectionMatrix(Matrix3.unit(F7, 1, 2))
    assert evaluate_section_at_flag(E12, FlagPoint((0, 1, 0), (1, 0, 0))) == 1
    assert evaluate_section_at_flag(E12, FlagPoint((1, 0, 0), (0, 1, 0))) == 0


# -- counts -------------------------------------------------------------------------


@pytest.mark.parametrize("text,expected", [("X, 2Y, 3Z", 78), ("X, 0, Z", 120), ("Y, 0, 0", 113)])
def test_worked_counts_q7(text, expected):
    rep = count_hyperplane_section(parse_section(text), 7)
    assert rep.total_flag == 456
    assert rep.section_count == rep.predicted == expected
    assert rep.match


@pytest.mark.parametrize("q", [5, 7, 11, 13])
def test_closed_forms(q):
    assert count_hyperplane_section(witness("a"), q).section_count == q * q + 4 * q + 1
    assert count_hyperplane_section(witness("d"), q).section_count == (q + 1) * (2 * q + 1)
    assert count_hyperplane_section(witness("e"), q).section_count == q * q + q + 1 + q * (q + 1)


def test_count_rejects_foreign_field():
    with pytest.raises(ValueError):
        count_hyperplane_section(witness("a", F5), 7)


@given(st.one_of(finite_sections(5), finite_sections(7)))
def test_count_identity(A):
    q = A.field.p
    rep = count_hyperplane_section(A, q)
    assert rep.match
    assert rep.reduced_zero_count == classify_section(A).rational_count(q)


@given(st.one_of(finite_sections(7), structured_sections(7).map(lambda t: t[1])))
def test_fiber_dichotomy(A):
    """Over a zero of the section every flag lies on it, elsewhere exactly one."""
    zeros = set(rational_points(minors_ideal(A).as_list(), F7))
    hits = fiber_hits(A, 7)
    assert len(hits) == 57
    assert {pt for pt, n in hits.items() if n == 8} == zeros
    assert all(n in (1, 8) for n in hits.values())


def test_transposed_pairing_moves_the_fibers():
    # with a . (A b) the full fibers sit over the zeros of the transpose
    A = witness("d", F7)
    T = SectionMatrix(A.matrix.transpose())
    assert set(p for p, n in fiber_hits(T, 7).items() if n == 8) == \
        set(rational_points(minors_ideal(T).as_list(), F7))
    assert count_hyperplane_section(A, 7).section_count == count_hyperplane_section(T, 7).section_count


# -- sweeps -------------------------------------------------------------------------


def test_class_enumeration_sizes():
    assert sum(1 for _ in exhaustive_classes(5)) == (5**8 - 1) // 4
    first = next(exhaustive_classes(5))
    assert first == (1, 0, 0, 0, 0, 0, 0, 0)


def test_sampling_is_deterministic_and_distinct():
    a = list(sampled_classes(7, 500, 42))
    assert a == list(sampled_classes(7, 500, 42))
    assert len(set(a)) == 500
    assert all(next(c for c in v if c) == 1 for v in a)
    assert a != list(sampled_classes(7, 500, 43))


def test_sampling_too_many():
    with pytest.raises(ValueError):
        list(sampled_classes(5, 10**6, 1))


def test_small_sweep_clean():
    s = sweep_verify(7, 300, seed=5)
    assert s.classes == 300 and not s.failures
    assert s.oracle_agreements == s.count_matches == 300
    assert sum(s.tallies.values()) == 300


def test_witness_sweep_hits_every_type():
    s = sweep_sections(5, [witness(k, F5) for k in sorted(WITNESSES)])
    assert s.tallies == {k: 1 for k in "abcde"}
    assert s.all_types_seen and s.ok


def test_class_count_formula_is_a_partition():
    for q in (5, 7, 11, 13):
        assert sum(class_counts_by_type(q).values()) == (q**8 - 1) // (q - 1)


def test_failures_are_recorded(monkeypatch):
    real = flagcount.classify_section

    def wrong(A):
        r = real(A)
        if r.type.letter == "b":
            r.type = type(r.type)("a")
        return r

    monkeypatch.setattr(flagcount, "classify_section", wrong)
    s = sweep_sections(5, [witness(k, F5) for k in sorted(WITNESSES)])
    assert len(s.failures) == 1
    rec = s.failures[0]
    assert rec["section"] == witness("b", F5).render()
    assert "classifier a vs oracle b" in rec["reason"]


def test_predicted_count():
    assert predicted_count(7, 3) == 78


def test_flag_array_read_only():
    arr = flag_array(5)
    with pytest.raises(ValueError):
        arr[0, 0] = 9
