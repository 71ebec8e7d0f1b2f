# cohomotopy\tests\test_codim2.py

import random
from dataclasses import replace

import pytest

from cohomotopy.algebra import GroupInvariants, IntegerMatrix, PresentedAbelianGroup, Verdict
from cohomotopy.bordism import wedge_oracle
from cohomotopy.cochain import MAP_TYPES, DatumBuilder
from cohomotopy.engines import (
    EngineBuilder, Provenance, codim2_bordism_dual, codim2_classifier, codim2_group, framed_spin_bordism2,
)
from cohomotopy.errors import HypothesisError, TagError


def test_sphere_is_the_second_stem(corpus):
    result = EngineBuilder.create(corpus("sphere-n2")).run("codim2")

    assert result.middle.invariants == GroupInvariants(0, (2,))
    assert result.framed_summand is True
    eps = result.report.parameters[0]
    assert eps.value == 0 and eps.provenance is Provenance.FORCED
    assert result.dual_agrees is True


@pytest.mark.parametrize("name, expected", [
    ("s2xsn", GroupInvariants(1, (2,))),
    ("t2xsn", GroupInvariants(1, (2, 2, 2))),
])
def test_spin_products(corpus, name, expected):
    result = codim2_group(corpus(name))

    assert result.middle.invariants == expected
    assert result.verdict is Verdict.SPLIT
    assert result.report.checks["dualAgrees"] is True
    assert result.report.exact()


def test_nonspin_manifold_loses_the_framed_summand(corpus):
    result = codim2_group(corpus("cp2xs"))

    assert result.middle.invariants == GroupInvariants(1, ())
    eps = result.report.parameters[0]
    assert eps.value == 1 and eps.provenance is Provenance.COMPUTED
    assert result.framed_summand is False


def test_framed_spin_bordism(corpus):
    report = framed_spin_bordism2(corpus("cp2xs"))

    assert report.middle.invariants == GroupInvariants(1, (2,))
    assert report.checks["differsByEps"] is True
    assert report.checks["spinEqualsFramed"] is False


def test_nonsplit_complex(corpus):
    result = codim2_group(corpus("cw-nonsplit"))

    assert result.middle.invariants == GroupInvariants(1, (4,))
    assert result.verdict is Verdict.NON_SPLIT
    assert result.report.checks["classifierZero"] is False
    assert result.report.checks["splitIffClassifierZero"] is True
    assert result.report.parameters[0].value == 1


def _bare_complex():
    return (DatumBuilder.create("bare", 7, 2, "CWOnly")
            .with_integral(7, free=1)
            .with_mod2(7, 1)
            .with_map("rho2", 7, [[1]]))


def test_complex_with_trivial_sq2_branches_on_theta():
    result = codim2_group(_bare_complex().build())
    group = result.report.as_parametric()

    assert not group.is_determined
    assert group.value(eps_theta=0).invariants == GroupInvariants(0, (2,))
    assert group.value(eps_theta=1).is_trivial()
    assert result.framed_summand is None


def test_declared_theta_resolves_the_branch():
    result = codim2_group(_bare_complex().with_overrides(thetaTrivial=True).build())

    assert result.middle.invariants == GroupInvariants(0, (2,))
    assert result.framed_summand is True


def test_complex_needs_a_single_top_class():
    datum = (DatumBuilder.create("two-tops", 7, 2, "CWOnly")
             .with_integral(7, free=2)
             .with_mod2(7, 2)
             .build())

    with pytest.raises(HypothesisError):
        codim2_group(datum)


def test_dual_needs_a_manifold():
    datum = _bare_complex().with_homology({}).build()

    with pytest.raises(TagError):
        codim2_bordism_dual(datum)


@pytest.mark.parametrize("name, zero", [("s2xsn", True), ("cw-nonsplit", False)])
def test_classifier(corpus, name, zero):
    assert codim2_classifier(corpus(name)).is_zero() is zero


@pytest.mark.parametrize("name, spheres", [
    ("sphere-n2", [7]),
    ("s2xsn", [2, 5, 7]),
    ("t2xsn", [1, 1, 2, 5, 6, 6, 7]),
])
def test_products_of_spheres_match_the_wedge_oracle(corpus, name, spheres):
    datum = corpus(name)

    assert codim2_group(datum).middle.isomorphic(wedge_oracle(spheres, datum.n))


def _permutation(size: int, rng: random.Random) -> IntegerMatrix:
    order = list(range(size))
    rng.shuffle(order)
    return IntegerMatrix.from_rows([[1 if j == order[i] else 0 for j in range(size)] for i in range(size)], size)


def _reordered(datum, rng: random.Random):
    """The same datum with the generators of H^{n-1}, Hⁿ and H^{n+1} listed in another order."""
    moves = {}
    integral = dict(datum.integral)
    for degree in range(datum.n - 1, datum.n + 2):
        group = integral[degree]
        moves[("integral", degree)] = p = _permutation(group.num_generators, rng)
        integral[degree] = PresentedAbelianGroup(group.generator_names, p @ group.relations)
        moves[("mod2", degree)] = _permutation(datum.mod2_rank(degree), rng)

    def move(kind, degree, size):
        return moves.get((kind, degree), IntegerMatrix.identity(size))

    maps = {}
    for (name, degree), matrix in datum.maps.items():
        source, target, shift = MAP_TYPES[name]
        maps[(name, degree)] = (move(target, degree + shift, matrix.rows) @ matrix
                                @ move(source, degree, matrix.cols).transpose())
    return replace(datum, integral=integral, maps=maps, _spaces={})


@pytest.mark.parametrize("name", ["s2xsn", "t2xsn", "cp2xs", "cw-nonsplit"])
def test_middle_group_ignores_generator_order(corpus, name):
    datum = corpus(name)
    expected = codim2_group(datum).middle.invariants
    rng = random.Random(name)

    for _ in range(5):
        assert codim2_group(_reordered(datum, rng)).middle.invariants == expected
