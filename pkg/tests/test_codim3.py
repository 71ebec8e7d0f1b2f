# cohomotopy\tests\test_codim3.py

import pytest

from cohomotopy.algebra import GroupInvariants, PresentedAbelianGroup, Subgroup, Verdict
from cohomotopy.cochain import DatumBuilder
from cohomotopy.engines import (
    EngineBuilder, EngineFactory, Provenance, assemble_codim3, compute_g1, compute_g2, dispatch_case, eps_sq4z,
    ker_alpha3, ker_alpha3_shifted, ker_sq2_bar, q2_group, spin3_bordism, string_fast_path,
    theta_quotient_n2, three_primary_criterion, three_primary_parameter, tower_groups,
)
from cohomotopy.errors import TagError


def _parameter(reports, name):
    return next(p for p in reports[0].parameters if p.name == name)


@pytest.mark.parametrize("name, case", [
    ("string-sphere", 1),
    ("dold-m0", 2),
    ("dold-m1", 3),
    ("dold-m3", 4),
])
def test_case_dispatch(corpus, name, case):
    assert dispatch_case(corpus(name)) == case


def test_string_sphere_is_the_third_stem(corpus):
    datum = corpus("string-sphere")
    group, reports = assemble_codim3(datum)

    assert group.group.invariants == GroupInvariants(0, (24,))
    assert reports[0].checks == {"case": 1, "stringCoherence": True}
    assert compute_g1(datum).invariants == GroupInvariants(0, (2,))
    assert spin3_bordism(datum).middle.is_trivial()


def test_string_product_with_torus(corpus):
    datum = corpus("snxt3")
    group, reports = assemble_codim3(datum)

    assert group.group.invariants == GroupInvariants(1, (2, 2, 2, 2, 2, 2, 24))
    assert spin3_bordism(datum).middle.invariants == GroupInvariants(1, (2, 2, 2, 2, 2, 2))
    spin = next(r for r in reports if r.name.startswith("Omega_3^Spin"))
    assert spin.middle.isomorphic(spin3_bordism(datum).middle)


def test_case_two_branches_on_phi(corpus):
    group, reports = assemble_codim3(corpus("dold-m0"))

    assert _parameter(reports, "eps_phi").provenance is Provenance.UNKNOWN
    assert _parameter(reports, "eps3").provenance is Provenance.FORCED
    assert group.value(eps_phi=0).isomorphic(PresentedAbelianGroup.cyclic(12))
    assert group.value(eps_phi=1).isomorphic(PresentedAbelianGroup.cyclic(6))


def test_assuming_phi_trivial_determines_the_group(corpus):
    group, _ = EngineBuilder.create(corpus("dold-m0")).assume_phi_trivial().run("codim3")

    assert group.is_determined
    assert group.group.isomorphic(PresentedAbelianGroup.cyclic(12))


def test_case_three(corpus):
    datum = corpus("dold-m1")
    group, reports = assemble_codim3(datum)

    assert eps_sq4z(datum) == 0
    eps3 = _parameter(reports, "eps3")
    assert eps3.value == 0 and eps3.provenance is Provenance.COMPUTED
    assert group.group.invariants == GroupInvariants(0, (12,))
    assert reports[0].verdict is Verdict.SPLIT


def test_case_four_keeps_the_three_primary_branch(corpus):
    datum = corpus("dold-m3")
    group, reports = assemble_codim3(datum)

    assert ker_alpha3(datum).group.invariants == GroupInvariants(1, (2,))
    assert _parameter(reports, "eps_theta").provenance is Provenance.FORCED
    assert _parameter(reports, "eps3").provenance is Provenance.UNKNOWN
    assert group.value(eps3=0).invariants == GroupInvariants(1, (6,))
    assert group.value(eps3=1).invariants == GroupInvariants(1, (2,))


def test_assuming_eps3_zero(corpus):
    group, _ = EngineBuilder.create(corpus("dold-m3")).assume_eps3_zero().run("codim3")

    assert group.group.invariants == GroupInvariants(1, (6,))


def test_reports_are_exact(corpus):
    for name in ("string-sphere", "snxt3", "dold-m0", "dold-m1", "dold-m3"):
        _, reports = assemble_codim3(corpus(name))
        assert all(r.exact() for r in reports), name


def _string_inner():
    return (DatumBuilder.create("string-inner", 11, 3, "String")
            .with_mod2(7, 1)
            .with_integral(8, torsion=[2])
            .with_mod2(8, 1)
            .with_integral(9, free=1)
            .with_mod2(9, 1)
            .with_integral(11, free=1)
            .with_mod2(11, 1)
            .with_map("bockstein", 7, [[1]])
            .with_map("bockstein", 8, [[0]])
            .with_map("rho2", 8, [[1]])
            .with_map("rho2", 9, [[1]])
            .with_map("rho2", 11, [[1]])
            .with_map("sq1", 7, [[1]])
            .with_map("sq2", 7, [[1]])
            .with_map("sq4", 7, [[0]])
            .with_characteristic(w2=[], w3=[])
            .build())


def test_torsion_class_with_nonzero_classifier_fuses():
    datum = _string_inner()
    result = ker_sq2_bar(datum)

    assert result.group.invariants == GroupInvariants(0, (4,))
    assert result.branches[0].status is Verdict.NON_SPLIT


def test_string_fast_path_reports_unequal_images():
    outer, inner = string_fast_path(_string_inner())

    assert inner.checks["imagesEqual"] is False
    assert outer.middle.invariants == GroupInvariants(0, (4, 24))


def test_string_fast_path_needs_the_string_tag(corpus):
    with pytest.raises(TagError):
        string_fast_path(corpus("dold-m1"))


def test_codim3_needs_a_manifold(corpus):
    with pytest.raises(TagError):
        assemble_codim3(corpus("cw-corrupt-sq4"))


def test_q2_assembly():
    two = PresentedAbelianGroup.cyclic(2)

    group, verdict = q2_group(two, two)
    assert group.invariants == GroupInvariants(0, (4,)) and verdict is Verdict.NON_SPLIT
    group, verdict = q2_group(two, PresentedAbelianGroup.zero())
    assert group.invariants == GroupInvariants(0, (2,)) and verdict is Verdict.SPLIT


def test_tower_groups(corpus):
    tower = tower_groups(corpus("string-sphere"))

    assert tower.g1.invariants == GroupInvariants(0, (2,))
    assert tower.eps_sq4z == 0
    assert tower.ker_alpha3.group.invariants == GroupInvariants(0, (2,))
    assert tower.to_dict()["epsSq4Z"] == 0


def test_shifted_kernel_stage_on_a_sphere(corpus):
    datum = corpus("string-sphere")
    report = ker_alpha3_shifted(datum)

    assert report.name == f"ker(alpha3:{datum.n - 1})(string-sphere)"
    assert report.middle.is_trivial()
    assert report.verdict is Verdict.SPLIT


def _mod3_complex(p1_rows):
    return (DatumBuilder.create("mod3-complex", 11, 3, "CWOnly")
            .with_integral(8, torsion=[3])
            .with_mod3(7, 1)
            .with_mod3(11, 1)
            .with_map("bockstein3", 7, [[1]])
            .with_map("p1Cup3", 7, p1_rows)
            .build())


def test_three_primary_criterion_fails_on_nonzero_p1():
    datum = _mod3_complex([[1]])
    whole = Subgroup.whole(datum.integral_group(8))

    assert three_primary_criterion(datum, whole) is False
    assert three_primary_parameter(datum, datum.overrides).provenance is Provenance.UNKNOWN


def test_three_primary_criterion_holds_when_p1_vanishes():
    datum = _mod3_complex([[0]])
    whole = Subgroup.whole(datum.integral_group(8))

    assert three_primary_criterion(datum, whole) is True
    eps3 = three_primary_parameter(datum, datum.overrides)
    assert eps3.value == 0 and eps3.provenance is Provenance.COMPUTED


def test_three_primary_criterion_needs_mod3_data(corpus):
    datum = corpus("string-sphere")

    assert three_primary_criterion(datum, Subgroup.whole(datum.integral_group(datum.n))) is None


def test_engine_factory():
    assert "codim3" in EngineFactory.get_supported_types()
    assert EngineFactory.for_codimension(2) == "codim2"
    with pytest.raises(ValueError, match="Unsupported engine"):
        EngineFactory.create_engine("codim4")
    with pytest.raises(ValueError):
        EngineFactory.for_codimension(4)


def test_higher_quotients_on_a_sphere(corpus):
    datum = corpus("string-sphere")
    g2 = compute_g2(datum)
    theta = theta_quotient_n2(datum)

    assert g2.is_determined
    assert g2.group.isomorphic(PresentedAbelianGroup.cyclic(2))
    assert theta.group.is_trivial()
    assert theta.parameters[0].provenance is Provenance.FORCED


def test_g2_branches_on_phi(corpus):
    g2 = compute_g2(corpus("dold-m0"))

    assert not g2.is_determined
    assert g2.parameters[0].provenance is Provenance.UNKNOWN
    assert len(g2.value(eps_phi=0).invariant_factors) == len(g2.value(eps_phi=1).invariant_factors) + 1


def test_theta_stays_open_below_the_middle_degree_of_a_string_manifold(s4xs3xs1):
    datum = s4xs3xs1()
    theta = theta_quotient_n2(datum)

    assert not theta.is_determined
    assert theta.parameters[0].provenance is Provenance.UNKNOWN
    assert theta.value(eps_theta=0).isomorphic(PresentedAbelianGroup.cyclic(2))
    assert theta.value(eps_theta=1).is_trivial()

    spin = spin3_bordism(datum)
    assert len(spin.branches) == 2
    assert all(b.verdict is Verdict.SPLIT for b in spin.branches)

    group, reports = assemble_codim3(datum)
    assert not group.is_determined
    assert group.value(eps_theta=0).invariants == GroupInvariants(1, (2, 24))
    assert group.value(eps_theta=1).invariants == GroupInvariants(1, (24,))
    assert reports[0].checks["stringCoherence"] is True


def test_declared_theta_image_gives_the_full_quotient(s4xs3xs1):
    datum = s4xs3xs1(thetaImage={"7": []})
    spin = spin3_bordism(datum)

    assert spin.parameters[0].provenance is Provenance.OVERRIDE
    assert spin.single.left.isomorphic(PresentedAbelianGroup.cyclic(2))
    assert spin.middle.invariants == GroupInvariants(1, (2,))


def test_computed_eps3_splits_without_a_mod3_bockstein():
    datum = (DatumBuilder.create("three-torsion", 11, 3, "Oriented")
             .with_integral(8, torsion=[3])
             .with_mod2(8, 0)
             .with_integral(11, free=1)
             .with_mod2(11, 1)
             .with_mod3(7, 1)
             .with_mod3(11, 1)
             .with_map("rho2", 11, [[1]])
             .with_map("p1Cup3", 7, [[0]])
             .with_characteristic(w2=[], w3=[])
             .build())
    group, reports = assemble_codim3(datum)

    assert _parameter(reports, "eps3").provenance is Provenance.COMPUTED
    assert three_primary_criterion(datum, Subgroup.whole(datum.integral_group(8))) is None
    assert reports[0].verdict is Verdict.SPLIT
    assert group.group.invariants == GroupInvariants(0, (3, 24))
