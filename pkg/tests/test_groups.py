# cohomotopy\tests\test_groups.py

import pytest

from cohomotopy.algebra import (
    AbHom, GroupInvariants, IntegerMatrix, PresentedAbelianGroup, Subgroup, direct_sum, group_invariants, hom_cokernel,
    hom_kernel,
    image_subgroup, kernel_subgroup, lift, p_torsion, preimage, subquotient, subquotient_coordinates,
    torsion_subgroup, two_torsion,
)
from cohomotopy.errors import ContainmentError, DataError


def _invariants(g: PresentedAbelianGroup):
    return g.free_rank, g.invariant_factors


def test_presented_group_reduces_to_invariants():
    g = PresentedAbelianGroup(["a", "b"], IntegerMatrix.from_rows([[2, 0], [4, 6]]))

    assert _invariants(g) == (0, (2, 6))
    assert g.order == 12
    assert g.render() == "ℤ/2 ⊕ ℤ/6"


def test_from_invariants_round_trips():
    g = PresentedAbelianGroup.from_invariants(2, [2, 4])

    assert g.invariants == GroupInvariants(2, (2, 4))
    assert g.order is None
    assert g.invariants.minimal_generators == 4
    assert PresentedAbelianGroup.zero().is_trivial()
    assert PresentedAbelianGroup.zero().render() == "0"


def test_element_arithmetic():
    g = PresentedAbelianGroup.from_invariants(1, [4])

    assert g.element_order((0, 2)) == 2
    assert g.element_order((0, 1)) == 4
    assert g.element_order((1, 0)) is None
    assert g.is_zero((0, 4))
    assert g.equal((3, 5), (3, 1))


def test_direct_sum_collects_factors():
    s = direct_sum(PresentedAbelianGroup.cyclic(2), PresentedAbelianGroup.cyclic(4),
                   PresentedAbelianGroup.cyclic(2), PresentedAbelianGroup.free(1))

    assert _invariants(s) == (1, (2, 2, 4))


def test_cyclic_factors_combine_when_coprime():
    s = direct_sum(PresentedAbelianGroup.cyclic(4), PresentedAbelianGroup.cyclic(3))

    assert s.isomorphic(PresentedAbelianGroup.cyclic(12))


def test_quotient_and_subgroup_membership():
    z = PresentedAbelianGroup.free(1)
    generators = IntegerMatrix.from_rows([[4]])

    assert _invariants(z.quotient(generators)) == (0, (4,))
    assert z.in_subgroup(generators, (8,))
    assert not z.in_subgroup(generators, (2,))


def test_subquotient():
    z2 = PresentedAbelianGroup.free(2)
    numerator = IntegerMatrix.from_rows([[2, 0], [0, 1]])
    denominator = IntegerMatrix.from_rows([[4], [0]])

    q = subquotient(z2, numerator, denominator)

    assert _invariants(q) == (1, (2,))
    assert subquotient_coordinates(z2, numerator, (6, 3)) == (3, 3)


def test_subquotient_requires_containment():
    z2 = PresentedAbelianGroup.free(2)

    with pytest.raises(ContainmentError):
        subquotient(z2, IntegerMatrix.from_rows([[2], [0]]), IntegerMatrix.from_rows([[1], [0]]))


def test_kernel_image_cokernel_of_reduction():
    z = PresentedAbelianGroup.free(1)
    f2 = PresentedAbelianGroup.elementary(1)
    reduction = AbHom(z, f2, IntegerMatrix.from_rows([[1]]))

    kernel, inclusion = kernel_subgroup(reduction).as_group()
    cokernel, _ = hom_cokernel(AbHom(z, z, IntegerMatrix.from_rows([[2]])))

    assert _invariants(kernel) == (1, ())
    assert inclusion.matrix.apply((1,)) in ((2,), (-2,))
    assert _invariants(cokernel) == (0, (2,))
    assert image_subgroup(reduction).same_as(Subgroup.whole(f2))


def test_homomorphism_must_respect_relations():
    with pytest.raises(DataError):
        AbHom(PresentedAbelianGroup.cyclic(2), PresentedAbelianGroup.free(1), IntegerMatrix.from_rows([[1]]))


def test_lift():
    z = PresentedAbelianGroup.free(1)
    z4 = PresentedAbelianGroup.cyclic(4)
    doubling = AbHom(z, z4, IntegerMatrix.from_rows([[2]]))

    x = lift(doubling, (2,))
    assert x is not None and z4.equal(doubling(x), (2,))
    assert lift(doubling, (1,)) is None


def test_p_torsion():
    g = PresentedAbelianGroup.from_invariants(1, [4, 3])

    two, inclusion = p_torsion(g, 2)
    three, _ = p_torsion(g, 3)

    assert _invariants(two) == (0, (2,))
    assert _invariants(three) == (0, (3,))
    tau = inclusion.matrix.column(0)
    assert g.element_order(tau) == 2


def test_torsion_subgroup_witness():
    g = PresentedAbelianGroup.from_invariants(0, [2, 4])
    torsion = torsion_subgroup(g, 2)

    assert torsion.witness_outside(Subgroup.whole(g)) is None
    assert Subgroup.whole(g).witness_outside(torsion) is not None
    assert not torsion.is_trivial()


def test_preimage():
    z2 = PresentedAbelianGroup.free(2)
    f2 = PresentedAbelianGroup.elementary(1)
    f = AbHom(z2, f2, IntegerMatrix.from_rows([[1, 1]]))

    sub = preimage(f, Subgroup.trivial(f2))

    assert sub.same_as(kernel_subgroup(f))
    assert sub.contains((1, 1))
    assert not sub.contains((1, 0))


def test_group_invariants_and_two_torsion():
    g = PresentedAbelianGroup.from_invariants(1, [4, 3])

    assert group_invariants(g) == (1, (12,))
    two, _ = two_torsion(g)
    assert _invariants(two) == (0, (2,))


def test_hom_kernel_of_doubling():
    z4 = PresentedAbelianGroup.cyclic(4)
    kernel, inclusion = hom_kernel(AbHom(z4, z4, IntegerMatrix.from_rows([[2]])))

    assert _invariants(kernel) == (0, (2,))
    assert z4.element_order(inclusion.matrix.column(0)) == 2
