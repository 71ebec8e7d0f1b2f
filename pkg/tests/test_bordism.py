# cohomotopy\tests\test_bordism.py

import pytest

from cohomotopy.algebra import GroupInvariants, Verdict
from cohomotopy.bordism import (
    CoefficientTable, EulerData, SectionVerdict, g_to_h_ses, parse_sphere_dimension, section_existence,
    wedge_oracle,
)
from cohomotopy.cochain import DatumBuilder
from cohomotopy.errors import InconsistentInputError, RangeError, TagError


def test_string_three_dimensional_bordism(corpus):
    report = g_to_h_ses(corpus("snxt3"), 3)
    branch = report.single

    assert branch.left.invariants == GroupInvariants(0, (24,))
    assert branch.right.invariants == GroupInvariants(1, (2, 2, 2, 2, 2, 2))
    assert report.checks == {"omegaHZero": True, "degreeHypothesis": True}
    assert report.exact()


def test_string_bordism_branches_with_theta(s4xs3xs1):
    report = g_to_h_ses(s4xs3xs1(), 3)

    assert [p.name for p in report.parameters] == ["eps_theta"]
    assert len(report.branches) == 2
    assert report.as_parametric().value(eps_theta=1).invariants == GroupInvariants(1, (24,))


@pytest.mark.parametrize("name, expected", [
    ("snxt3", GroupInvariants(3, (2,))),
    ("t2xsn", GroupInvariants(2, (2,))),
    ("s2xsn", GroupInvariants(0, (2,))),
])
def test_spin_one_dimensional_bordism(corpus, name, expected):
    assert g_to_h_ses(corpus(name), 1).middle.invariants == expected


def test_spin_two_dimensional_bordism(corpus):
    report = g_to_h_ses(corpus("snxt3"), 2)

    assert report.single.left.invariants == GroupInvariants(0, (2, 2, 2, 2))
    assert report.middle.invariants == GroupInvariants(3, (2, 2, 2, 2))
    assert report.checks["degreeHypothesis"] is False
    assert any("spin bordism formula" in note for note in report.notes)
    assert report.verdict is Verdict.SPLIT


def test_fivebrane_report_is_left_open(corpus):
    report = g_to_h_ses(corpus("snxt3"), 7)

    assert report.branches == []
    assert report.notes


def test_structure_tags_are_checked(corpus):
    with pytest.raises(TagError):
        g_to_h_ses(corpus("dold-m1"), 1)
    with pytest.raises(TagError):
        g_to_h_ses(corpus("s2xsn"), 3)
    with pytest.raises(RangeError):
        g_to_h_ses(corpus("snxt3"), 5)


def test_string_bordism_reads_codimension_three():
    datum = (DatumBuilder.create("string-codim2", 7, 2, "String")
             .with_integral(7, free=1)
             .with_mod2(7, 1)
             .with_map("rho2", 7, [[1]])
             .build())

    with pytest.raises(RangeError):
        g_to_h_ses(datum, 3)


def test_coefficient_table():
    assert CoefficientTable.lookup("fr", 3) == GroupInvariants(0, (24,))
    assert CoefficientTable.lookup("String", 7).free_rank == 0
    assert CoefficientTable.coherence() == {"framedEqualsSpin": True, "framedEqualsString": True}
    with pytest.raises(RangeError):
        CoefficientTable.lookup("Spin", 4)
    with pytest.raises(ValueError):
        CoefficientTable.lookup("U", 1)


@pytest.mark.parametrize("euler, verdict, failing", [
    (EulerData(1, kappa_zero=True, e_h_zero=True), SectionVerdict.EXISTS, None),
    (EulerData(3, e_g_zero=False), SectionVerdict.NOT_EXISTS, "eG"),
    (EulerData(2, kappa_zero=True, e_h_zero=True, defect_zero=False), SectionVerdict.NOT_EXISTS, "defectDelta"),
    (EulerData(1, kappa_zero=False), SectionVerdict.NOT_EXISTS, "divisorKappa"),
])
def test_section_existence(euler, verdict, failing):
    decision = section_existence(euler)

    assert decision.verdict is verdict
    assert decision.failing == failing


def test_section_existence_with_missing_data():
    decision = section_existence(EulerData(2, kappa_zero=True, e_h_zero=True))

    assert decision.verdict is SectionVerdict.INSUFFICIENT
    assert decision.missing == ["eG", "defectDelta"]


def test_section_existence_rejects_contradictions():
    with pytest.raises(InconsistentInputError):
        section_existence(EulerData(1, e_g_zero=True, kappa_zero=False))
    with pytest.raises(InconsistentInputError):
        EulerData(3, defect_zero=False)
    with pytest.raises(RangeError):
        EulerData(4)


def test_wedge_oracle():
    assert wedge_oracle([5, 8], 5).invariants == GroupInvariants(1, (24,))
    assert wedge_oracle([12], 5).invariants == GroupInvariants(0, (240,))
    assert wedge_oracle([4, 9, 10], 5).is_trivial()
    with pytest.raises(RangeError):
        wedge_oracle([5], 4)
    with pytest.raises(RangeError):
        wedge_oracle([13], 5)


@pytest.mark.parametrize("token, value", [("n", 6), ("n+3", 9), ("n - 1", 5), ("11", 11)])
def test_parse_sphere_dimension(token, value):
    assert parse_sphere_dimension(token, 6) == value


def test_parse_sphere_dimension_rejects_garbage():
    with pytest.raises(ValueError):
        parse_sphere_dimension("m+1", 6)
