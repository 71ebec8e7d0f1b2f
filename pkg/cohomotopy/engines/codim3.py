# cohomotopy\cohomotopy\engines\codim3.py

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra import (
    AbHom, IntegerMatrix, ModPMap, PresentedAbelianGroup, Subgroup, Verdict, build_extension, direct_sum,
    enumerate_extensions, kernel_subgroup, lift, maximal_fusion, p_torsion, span_contains, subquotient,
    subquotient_coordinates,
)
from ..algebra.matrix import Vector
from ..cochain import CohomologyDatum, OperationOverrides, StructureTag, op_kernel, operation_hom
from ..errors import (
    ContainmentError, DataError, DegreeError, DispatchError, HypothesisError, MissingDataError, TagError,
)
from ..utils.config import EngineConstants
from .types import Assignment, Parameter, ParametricBranch, ParametricGroup, SESBranch, SESReport

logger = logging.getLogger(__name__)

STRING_LEFT = PresentedAbelianGroup.cyclic(24, "nu")


def _assignments(parameters: Sequence[Parameter]) -> Iterator[Assignment]:
    unknown = [p for p in parameters if not p.known]
    for values in itertools.product((0, 1), repeat=len(unknown)):
        yield {p.name: v for p, v in zip(unknown, values)}


def _value(parameter: Parameter, assignment: Assignment) -> int:
    return parameter.value if parameter.known else assignment[parameter.name]


def _mod2(vector: Sequence[int]) -> Vector:
    return tuple(x % 2 for x in vector)


def _elementary_rank(group: PresentedAbelianGroup) -> int:
    return len(group.invariant_factors)


# Single operations

def _sq2z_kernel(datum: CohomologyDatum, degree: int) -> Subgroup:
    return op_kernel(datum, "Sq2Z", degree)


def eps_sq4z(datum: CohomologyDatum) -> int:
    """1 iff Sq⁴_ℤ is nonzero on ker(Sq²_ℤ:n−1)."""
    n = datum.n
    kernel = _sq2z_kernel(datum, n - 1)
    images = operation_hom(datum, "Sq4Z", n - 1).matrix @ kernel.generators
    return 0 if images.reduce(2).is_zero() else 1


def compute_g1(datum: CohomologyDatum) -> PresentedAbelianGroup:
    """G₁ = H^{n+3}(F₂)/Sq⁴_ℤ(ker(Sq²_ℤ:n−1))."""
    n = datum.n
    kernel = _sq2z_kernel(datum, n - 1)
    images = operation_hom(datum, "Sq4Z", n - 1).matrix @ kernel.generators
    return datum.mod2_space(n + 3).quotient(images)


def joint_kernel(datum: CohomologyDatum) -> Subgroup:
    """ker(Sq²_ℤ ∩ Sq⁴_ℤ : n−1), the domain of Θ, Φ and 𝕋."""
    n = datum.n
    stacked = IntegerMatrix.vstack(
        datum.integral_group(n - 1).num_generators,
        operation_hom(datum, "Sq2Z", n - 1).matrix,
        operation_hom(datum, "Sq4Z", n - 1).matrix,
    )
    target = direct_sum(datum.mod2_space(n + 1), datum.mod2_space(n + 3))
    return kernel_subgroup(AbHom(datum.integral_group(n - 1), target, stacked, check=False))


def _joint_kernel_trivial(datum: CohomologyDatum) -> bool:
    return joint_kernel(datum).is_trivial()


# The α³ stage

@dataclass
class Alpha3Data:
    """Classifier data of 0 → L ⊕ G₁ → ker(α³:m) → ker(Θ:m) → 0 in degree m."""
    degree: int
    right: PresentedAbelianGroup
    right_certain: bool
    joint: PresentedAbelianGroup
    first: PresentedAbelianGroup
    joint_images: List[Vector]
    first_images: List[Vector]
    sq2_criterion: bool
    sq4_criterion: bool
    theta: Parameter


def _theta_kernel(datum: CohomologyDatum, degree: int,
                  overrides: OperationOverrides) -> Tuple[Subgroup, Parameter]:
    """ker(Θ:degree) with how it was decided; K = ker(Sq²_ℤ) is an upper bound."""
    kernel = _sq2z_kernel(datum, degree)
    if degree == datum.n:
        if datum.structure.is_manifold:
            return kernel, Parameter.forced("theta_n", 0, "Θ is trivial on Hⁿ of a closed oriented manifold")
        if overrides.theta_kernel_n is not None:
            group = datum.integral_group(degree)
            columns = [tuple(v) for v in overrides.theta_kernel_n]
            sub = Subgroup(group, IntegerMatrix.from_columns(columns, group.num_generators))
            if not sub.is_subgroup_of(kernel):
                raise ContainmentError("Declared ker(Θ:n) is not inside ker(Sq2Z:n)")
            return sub, Parameter.override("theta_n", 0 if sub.same_as(kernel) else 1)
        if overrides.theta_trivial_n is not None:
            if overrides.theta_trivial_n:
                return kernel, Parameter.override("theta_n", 0)
        return kernel, Parameter.unknown("theta_n", "ker(Θ:n) bounded above by ker(Sq2Z:n)")
    if kernel.is_trivial():
        return kernel, Parameter.forced("theta_n", 0, f"ker(Sq2Z:{degree}) is zero")
    return kernel, Parameter.unknown("theta_n", f"ker(Θ:{degree}) bounded above by ker(Sq2Z:{degree})")


def alpha3_data(datum: CohomologyDatum, degree: int, overrides: OperationOverrides = None) -> Alpha3Data:
    overrides = overrides or datum.overrides
    m = degree
    f1 = datum.mod2_space(m + 1)
    f3 = datum.mod2_space(m + 3)
    ker_sq2 = kernel_subgroup(datum.hom("sq2", m + 1)).generators
    sq2z = operation_hom(datum, "Sq2Z", m - 1).matrix
    sq4z = operation_hom(datum, "Sq4Z", m - 1).matrix

    ambient = direct_sum(f1, f3)
    numerator = IntegerMatrix.block_diagonal(ker_sq2, IntegerMatrix.identity(f3.num_generators))
    denominator = IntegerMatrix.vstack(sq2z.cols, sq2z, sq4z)
    try:
        joint = subquotient(ambient, numerator, denominator)
        first = subquotient(f1, ker_sq2, sq2z)
    except ContainmentError as e:
        raise DataError(f"{datum.name}: Sq2Z(H^{m - 1}) is not inside ker Sq2: {e}") from None

    delta = datum.hom("bockstein", m - 1)
    sq2 = datum.matrix("sq2", m - 1)
    sq4 = datum.matrix("sq4", m - 1)

    def pair(x: Sequence[int]) -> Vector:
        return _mod2(sq2.apply(x)) + _mod2(sq4.apply(x))

    for z in kernel_subgroup(delta).generators.columns():
        if not joint.is_zero(subquotient_coordinates(ambient, numerator, pair(z))):
            raise DataError(f"{datum.name}: (Sq2, Sq4) of the Bockstein kernel element {list(z)} is not "
                            f"in the indeterminacy; the classifier is not well defined")

    right_sub, theta = _theta_kernel(datum, m, overrides)
    right, inclusion = right_sub.as_group()
    torsion, t_inclusion = p_torsion(right, 2)
    taus = (inclusion.matrix @ t_inclusion.matrix).columns()

    joint_images, first_images = [], []
    sq2_criterion = sq4_criterion = True
    for tau in taus:
        x = lift(delta, tau)
        if x is None:
            raise DataError(f"{datum.name}: 2-torsion class {list(tau)} of H^{m} has no Bockstein preimage")
        a = _mod2(sq2.apply(x))
        b = _mod2(sq4.apply(x))
        try:
            joint_images.append(subquotient_coordinates(ambient, numerator, a + b))
            first_images.append(subquotient_coordinates(f1, ker_sq2, a))
        except ContainmentError:
            raise DataError(f"{datum.name}: Sq2 of the Bockstein lift of {list(tau)} is not in ker Sq2") from None
        sq2_criterion &= f1.in_subgroup(sq2z, a)
        sq4_criterion &= f3.in_subgroup(sq4z, b)

    return Alpha3Data(m, right, theta.known, joint, first, [_mod2(v) for v in joint_images],
                      [_mod2(v) for v in first_images], sq2_criterion, sq4_criterion, theta)


def _extension_report(name: str, left: PresentedAbelianGroup, right: PresentedAbelianGroup,
                      images: List[Vector], certain: bool, parameter: Parameter,
                      checks: Dict[str, Optional[bool]]) -> SESReport:
    extension = build_extension(right, left, images)
    classifier = IntegerMatrix.from_columns(images, left.num_generators)
    if certain:
        branch = SESBranch({}, left, extension.middle, right, extension.verdict)
        notes = []
    else:
        split = direct_sum(left, right)
        bounds = (split,) if extension.middle.isomorphic(split) else (split, extension.middle)
        branch = SESBranch({}, left, None, right, Verdict.UNDETERMINED, bounds=bounds,
                           note="right term is an upper bound for ker(Θ:n)")
        notes = ["ker(Θ:n) unknown; undetermined until thetaTrivialN or thetaKernelN is declared"]
    return SESReport(name, [parameter], [branch], classifier=classifier, checks=checks, notes=notes)


def ker_alpha3_report(datum: CohomologyDatum, overrides: OperationOverrides = None,
                      degree: int = None) -> SESReport:
    data = alpha3_data(datum, datum.n if degree is None else degree, overrides)
    nonzero_components = (not data.sq2_criterion) + (not data.sq4_criterion)
    checks = {
        "sq2Criterion": data.sq2_criterion,
        "sq4Criterion": data.sq4_criterion,
        "middleCertified": nonzero_components != 1,
    }
    report = _extension_report(f"ker(alpha3:{data.degree})({datum.name})", data.joint, data.right,
                               data.joint_images, data.right_certain, data.theta, checks)
    if nonzero_components == 1:
        report.notes.append("exactly one split-off criterion fails; the middle group comes from the joint "
                            "classifier and is not certified beyond that")
    return report


def ker_alpha3(datum: CohomologyDatum, overrides: OperationOverrides = None) -> ParametricGroup:
    """ker(α³∗:n) as an extension of ker(Θ:n) by ker(Sq²:n+1)/Sq²_ℤ(H^{n−1}) ⊕ G₁."""
    return ker_alpha3_report(datum, overrides).as_parametric()


def ker_alpha3_shifted(datum: CohomologyDatum, overrides: OperationOverrides = None) -> SESReport:
    """The same assembly one degree down, reading H^{n−2}."""
    return ker_alpha3_report(datum, overrides, degree=datum.n - 1)


def ker_sq2_bar_report(datum: CohomologyDatum, overrides: OperationOverrides = None) -> SESReport:
    data = alpha3_data(datum, datum.n, overrides)
    return _extension_report(f"ker(Sq2bar:{data.degree})({datum.name})", data.first, data.right,
                             data.first_images, data.right_certain, data.theta,
                             {"sq2Criterion": data.sq2_criterion})


def ker_sq2_bar(datum: CohomologyDatum, overrides: OperationOverrides = None) -> ParametricGroup:
    """ker(S̄q²∗:n) = ker(α³∗:n)/ℤ2^{1−ε(Sq⁴_ℤ)}: the extension by the first classifier component."""
    return ker_sq2_bar_report(datum, overrides).as_parametric()


# Quotients by higher operations

def theta_quotient_n2(datum: CohomologyDatum, overrides: OperationOverrides = None) -> ParametricGroup:
    """QH^{n+2}(M;Sq²)/Θ(ker(Sq²_ℤ∩Sq⁴_ℤ:n−1))."""
    overrides = overrides or datum.overrides
    n = datum.n
    base = datum.mod2_space(n + 2).quotient(datum.matrix("sq2", n))
    declared = overrides.theta_image.get(n + 2)
    if declared is not None:
        columns = [tuple(v) for v in declared]
        quotient = base.quotient(IntegerMatrix.from_columns(columns, base.num_generators))
        value = 0 if quotient.isomorphic(base) else 1
        return ParametricGroup.fixed(quotient, parameters=[Parameter.override("eps_theta", value)])

    domain = joint_kernel(datum)
    if domain.is_trivial():
        parameter = Parameter.forced("eps_theta", 0, "ker(Sq2Z ∩ Sq4Z : n-1) is zero")
    elif base.is_trivial():
        parameter = Parameter.forced("eps_theta", 0, "QH^{n+2}(M;Sq2) is zero")
    else:
        parameter = Parameter.unknown("eps_theta", "Θ image not declared")
    if parameter.known:
        return ParametricGroup.fixed(base, parameters=[parameter])

    domain_group, _ = domain.as_group()
    drop = min(domain_group.invariants.minimal_generators, _elementary_rank(base))
    reduced = PresentedAbelianGroup.elementary(_elementary_rank(base) - drop)
    return ParametricGroup([parameter], [
        ParametricBranch({"eps_theta": 0}, base, Verdict.SPLIT),
        ParametricBranch({"eps_theta": 1}, reduced, Verdict.SPLIT),
    ])


def phi_parameter(datum: CohomologyDatum, overrides: OperationOverrides,
                  base: PresentedAbelianGroup) -> Parameter:
    if overrides.phi_trivial is not None:
        return Parameter.override("eps_phi", 0 if overrides.phi_trivial else 1)
    if overrides.phi_image is not None:
        columns = [tuple(v) for v in overrides.phi_image]
        reduced = base.quotient(IntegerMatrix.from_columns(columns, base.num_generators))
        return Parameter.override("eps_phi", 0 if reduced.isomorphic(base) else 1)
    if datum.structure is StructureTag.STRING:
        return Parameter.forced("eps_phi", 0, "Φ acts trivially on string manifolds")
    if _joint_kernel_trivial(datum):
        return Parameter.forced("eps_phi", 0, "ker(Sq2Z ∩ Sq4Z : n-1) is zero")
    if base.is_trivial():
        return Parameter.forced("eps_phi", 0, "target quotient is zero")
    return Parameter.unknown("eps_phi", "Φ image not declared")


def t_parameter(datum: CohomologyDatum, overrides: OperationOverrides) -> Parameter:
    if overrides.t_trivial is not None:
        return Parameter.override("eps_t", 0 if overrides.t_trivial else 1)
    if datum.structure is StructureTag.STRING:
        return Parameter.forced("eps_t", 0, "𝕋 acts trivially on string manifolds")
    if _joint_kernel_trivial(datum):
        return Parameter.forced("eps_t", 0, "ker(Sq2Z ∩ Sq4Z : n-1) is zero")
    return Parameter.unknown("eps_t", "𝕋 image not declared")


def compute_g2(datum: CohomologyDatum, overrides: OperationOverrides = None) -> ParametricGroup:
    """G₂ = H^{n+3}(F₂)/(Sq²Sq¹(ker(Sq²:n)) + Φ(ker(Θ∩Sq⁴_ℤ:n−1)))."""
    overrides = overrides or datum.overrides
    n = datum.n
    if not datum.modp_map("sq1", n + 2).is_zero():
        raise HypothesisError(f"{datum.name}: Sq1 acts nontrivially on H^{n + 2}(F2)")
    kernel = kernel_subgroup(datum.hom("sq2", n)).generators
    images = operation_hom(datum, "Sq2Sq1", n).matrix @ kernel
    base = datum.mod2_space(n + 3).quotient(images)

    parameter = phi_parameter(datum, overrides, base)
    if overrides.phi_image is not None:
        columns = [tuple(v) for v in overrides.phi_image]
        return ParametricGroup.fixed(base.quotient(IntegerMatrix.from_columns(columns, base.num_generators)),
                                     parameters=[parameter])
    if parameter.known:
        if parameter.value == 0:
            return ParametricGroup.fixed(base, parameters=[parameter])
        reduced = PresentedAbelianGroup.elementary(max(_elementary_rank(base) - 1, 0))
        return ParametricGroup.fixed(reduced, parameters=[parameter])
    return ParametricGroup([parameter], [
        ParametricBranch({"eps_phi": 0}, base, Verdict.SPLIT),
        ParametricBranch({"eps_phi": 1}, PresentedAbelianGroup.elementary(_elementary_rank(base) - 1),
                         Verdict.SPLIT),
    ])


def q2_group(g1: PresentedAbelianGroup, g2: PresentedAbelianGroup) -> Tuple[PresentedAbelianGroup, Verdict]:
    """Q₂-stage assembly of G₁ and G₂: ℤ/4 when both are ℤ/2, the direct sum otherwise."""
    two = PresentedAbelianGroup.cyclic(2)
    if g1.isomorphic(two) and g2.isomorphic(two):
        return build_extension(two, PresentedAbelianGroup.elementary(1), [(1,)]).middle, Verdict.NON_SPLIT
    return direct_sum(g1, g2), Verdict.SPLIT


@dataclass
class TowerGroups:
    g1: PresentedAbelianGroup
    g2: ParametricGroup
    ker_alpha3: ParametricGroup
    ker_sq2_bar: ParametricGroup
    theta_quotient: ParametricGroup
    eps_sq4z: int

    def to_dict(self) -> dict:
        return {
            "g1": self.g1.invariants.to_dict(),
            "g2": self.g2.to_dict(),
            "kerAlpha3": self.ker_alpha3.to_dict(),
            "kerSq2Bar": self.ker_sq2_bar.to_dict(),
            "thetaQuotient": self.theta_quotient.to_dict(),
            "epsSq4Z": self.eps_sq4z,
        }


def tower_groups(datum: CohomologyDatum, overrides: OperationOverrides = None) -> TowerGroups:
    overrides = overrides or datum.overrides
    return TowerGroups(
        g1=compute_g1(datum),
        g2=compute_g2(datum, overrides),
        ker_alpha3=ker_alpha3(datum, overrides),
        ker_sq2_bar=ker_sq2_bar(datum, overrides),
        theta_quotient=theta_quotient_n2(datum, overrides),
        eps_sq4z=eps_sq4z(datum),
    )


# Case dispatch

def _is_zero_map(datum: CohomologyDatum, candidates: Sequence[Tuple[str, int]]) -> Optional[bool]:
    for name, degree in candidates:
        try:
            if name in ("Sq2Sq1",):
                return operation_hom(datum, name, degree).matrix.reduce(2).is_zero()
            return datum.modp_map(name, degree).is_zero()
        except MissingDataError:
            continue
    return None


def _cup_kernel_map(datum: CohomologyDatum, candidates: Sequence[Tuple[str, int]]):
    for name, degree in candidates:
        try:
            if name == "Sq2Sq1":
                return ModPMap.from_integer_matrix(2, operation_hom(datum, name, degree).matrix)
            return datum.modp_map(name, degree)
        except MissingDataError:
            continue
    return None


def dispatch_case(datum: CohomologyDatum) -> int:
    """Which of the four manifold cases applies: w₂ = 0; w₃ = 0; ker(w₂⌣:n) ⊆ ker(w₃⌣:n); otherwise."""
    n = datum.n
    w2_zero = datum.w2_is_zero()
    if w2_zero is None:
        w2_zero = _is_zero_map(datum, [("sq2", n + 1), ("cupW2", n + 1)])
    if w2_zero is None:
        raise DispatchError(f"{datum.name}: cannot decide whether w2 vanishes")
    if w2_zero:
        return 1
    w3_zero = datum.w3_is_zero()
    if w3_zero is None:
        w3_zero = _is_zero_map(datum, [("cupW3", n), ("Sq2Sq1", n)])
    if w3_zero is None:
        raise DispatchError(f"{datum.name}: cannot decide whether w3 vanishes")
    if w3_zero:
        return 2
    cup_w2 = _cup_kernel_map(datum, [("cupW2", n), ("sq2", n)])
    cup_w3 = _cup_kernel_map(datum, [("cupW3", n), ("Sq2Sq1", n)])
    if cup_w2 is None or cup_w3 is None:
        raise DispatchError(f"{datum.name}: cup with w2 or w3 on H^{n}(F2) is missing")
    contained = all(not any(cup_w3.apply(v)) for v in cup_w2.kernel_basis().T.tolist())
    return 3 if contained else 4


# 3-primary part

def three_primary_parameter(datum: CohomologyDatum, overrides: OperationOverrides) -> Parameter:
    n = datum.n
    if overrides.three_primary_epsilon is not None:
        return Parameter.override("eps3", overrides.three_primary_epsilon)
    if datum.structure is StructureTag.STRING:
        return Parameter.forced("eps3", 0, "p1 = 0 on a string manifold")
    if datum.p1_mod3_trivial:
        return Parameter.forced("eps3", 0, "p1 ≡ 0 mod 3")
    if datum.has_mod3(n - 1) and datum.mod3_rank(n - 1) == 0:
        return Parameter.computed("eps3", 0, f"H^{n - 1}(F3) = 0")
    if datum.has_map("p1Cup3", n - 1) and datum.modp_map("p1Cup3", n - 1).is_zero():
        return Parameter.computed("eps3", 0, f"P1 acts trivially on H^{n - 1}(F3)")
    return Parameter.unknown("eps3", "3-primary operation not determined by the data")


def three_primary_criterion(datum: CohomologyDatum, right_kernel: Subgroup) -> Optional[bool]:
    """P¹₃(δ₃⁻¹(₃ker Θ)) ⊆ P¹_ℤ(H^{n−1}(ℤ)); None when the mod-3 data is missing."""
    n = datum.n
    try:
        delta = datum.hom("bockstein3", n - 1)
        p1 = datum.matrix("p1Cup3", n - 1)
        span = ModPMap.from_integer_matrix(3, operation_hom(datum, "P1Z", n - 1).matrix).array
    except (MissingDataError, DegreeError):
        return None
    group, inclusion = right_kernel.as_group()
    torsion, t_inclusion = p_torsion(group, 3)
    for tau in (inclusion.matrix @ t_inclusion.matrix).columns():
        x = lift(delta, tau)
        if x is None:
            raise DataError(f"{datum.name}: 3-torsion class {list(tau)} has no mod 3 Bockstein preimage")
        if not span_contains(span, p1.apply(x), 3):
            return False
    return True


# Assembly

CASE_NAMES = {
    1: "w2 = 0",
    2: "w2 != 0, w3 = 0",
    3: "ker(w2 cup : n) in ker(w3 cup : n)",
    4: "ker(w2 cup : n) not in ker(w3 cup : n)",
}


def _matching_branch(branches: Sequence[SESBranch], assumptions: Assignment) -> Optional[SESBranch]:
    return next((b for b in branches if all(b.assumptions.get(k) == v for k, v in assumptions.items())), None)


def _two_power(datum_case: int, eps_sq4: int, eps_phi: int, eps_t: int) -> Optional[int]:
    if datum_case == 1:
        return 3 - eps_sq4 - eps_phi - eps_t
    if datum_case == 2:
        return 2 - eps_sq4 - eps_phi
    if datum_case == 3:
        return 2 - eps_sq4
    return None


def assemble_codim3(datum: CohomologyDatum, overrides: OperationOverrides = None,
                    enumerate_candidates: bool = False) -> Tuple[ParametricGroup, List[SESReport]]:
    """πⁿ(M) for a closed (n+3)-manifold, with every intermediate sequence."""
    overrides = overrides or datum.overrides
    if not datum.structure.is_manifold:
        raise TagError(f"{datum.name}: codimension 3 assembly needs a manifold tag")
    n = datum.n
    case = dispatch_case(datum)
    logger.info(f"[CODIM3] {datum.name}: case {case} ({CASE_NAMES[case]})")

    eps_sq4 = Parameter.computed("eps_sq4z", eps_sq4z(datum), f"Sq4Z on ker(Sq2Z:{n - 1})")
    theta = theta_quotient_n2(datum, overrides)
    parameters = [eps_sq4]
    if case in (1, 2):
        g2 = compute_g2(datum, overrides)
        parameters.append(g2.parameters[0])
    if case == 1:
        parameters.append(t_parameter(datum, overrides))
    parameters.extend(theta.parameters)
    eps3 = three_primary_parameter(datum, overrides)
    parameters.append(eps3)
    by_name = {p.name: p for p in parameters}

    alpha3 = ker_alpha3_report(datum, overrides)
    sq2_bar = ker_sq2_bar_report(datum, overrides)
    inner = alpha3 if case == 4 else sq2_bar
    reports = [alpha3, sq2_bar]
    try:
        reports.append(ker_alpha3_shifted(datum, overrides))
    except (MissingDataError, DataError) as e:
        logger.debug(f"[CODIM3] {datum.name}: shifted ker(alpha3) skipped: {e}")
    inner_middle = inner.single.middle
    if inner_middle is None:
        raise DispatchError(f"{datum.name}: ker(Θ:n) is undetermined")

    right_kernel = _sq2z_kernel(datum, n)
    branches: List[SESBranch] = []
    notes: List[str] = []
    for assignment in _assignments(parameters):
        k = _two_power(case, eps_sq4.value,
                       _value(by_name["eps_phi"], assignment) if "eps_phi" in by_name else 0,
                       _value(by_name["eps_t"], assignment) if "eps_t" in by_name else 0)
        if k is not None and k < 0:
            notes.append(f"branch {assignment} dropped: negative 2-primary exponent")
            continue
        e3 = _value(eps3, assignment)
        two_part = PresentedAbelianGroup.cyclic(2 ** k, "two") if k else PresentedAbelianGroup.zero()
        three_part = PresentedAbelianGroup.cyclic(3, "three") if e3 == 0 else PresentedAbelianGroup.zero()
        left = direct_sum(two_part, three_part)
        right = direct_sum(inner_middle, theta.value(**assignment))
        split = direct_sum(left, right)
        if e3 == 1:
            branches.append(SESBranch(assignment, left, split, right, Verdict.SPLIT))
            continue
        if eps3.known:
            # P¹₃ vanishes on H^{n-1}(F₃), so its image lies in P¹_ℤ(H^{n-1})
            branches.append(SESBranch(assignment, left, split, right, Verdict.SPLIT))
            continue
        if not p_torsion(right, 3)[0].num_generators:
            branches.append(SESBranch(assignment, left, split, right, Verdict.SPLIT,
                                      note="no 3-torsion on the right"))
            continue
        criterion = three_primary_criterion(datum, right_kernel)
        if criterion:
            branches.append(SESBranch(assignment, left, split, right, Verdict.SPLIT))
            continue
        fused = direct_sum(two_part, maximal_fusion(right, 3))
        candidates = None
        if enumerate_candidates and right.order is not None and right.order <= EngineConstants.ENUMERATION_ORDER_LIMIT:
            found = enumerate_extensions(right, PresentedAbelianGroup.elementary(1, 3), prime=3)
            candidates = sorted((direct_sum(two_part, PresentedAbelianGroup.from_invariants(
                inv.free_rank, inv.invariant_factors)).invariants for inv in found),
                key=lambda g: (g.free_rank, g.invariant_factors))
        verdict = Verdict.NON_SPLIT if criterion is False else Verdict.UNDETERMINED
        branches.append(SESBranch(assignment, left, None, right, verdict, bounds=(split, fused),
                                  candidates=candidates))

    checks = {"case": case}
    if datum.structure is StructureTag.STRING:
        outer, _ = string_fast_path(datum, overrides)
        coherent = True
        for fast in outer.branches:
            match = _matching_branch(branches, fast.assumptions)
            coherent &= match is not None and match.middle is not None and match.middle.isomorphic(fast.middle)
        checks["stringCoherence"] = coherent
        reports.append(outer)
    if datum.structure.is_spin:
        reports.append(spin3_bordism(datum, overrides))

    report = SESReport(f"pi^{n}({datum.name})", parameters, branches, checks=checks, notes=notes)
    reports.insert(0, report)
    result = report.as_parametric()
    logger.info(f"[CODIM3] {datum.name}: pi^{n} = {result.render()}")
    return result, reports


def string_fast_path(datum: CohomologyDatum, overrides: OperationOverrides = None) -> Tuple[SESReport, SESReport]:
    """0 → ℤ/24 → πⁿ(M) → ker(S̄q²∗:n) ⊕ QH^{n+2}(M;Θ) → 0 for string manifolds, with its inner sequence."""
    if datum.structure is not StructureTag.STRING:
        raise TagError(f"{datum.name}: the string formula needs the String tag, got {datum.structure.value}")
    overrides = overrides or datum.overrides
    n = datum.n
    inner = ker_sq2_bar_report(datum, overrides)
    sq2z = operation_hom(datum, "Sq2Z", n - 1).matrix
    sq2 = datum.matrix("sq2", n - 1)
    target = datum.mod2_space(n + 1)
    images_equal = Subgroup(target, sq2).same_as(Subgroup(target, sq2z))
    inner.checks["imagesEqual"] = images_equal
    if images_equal:
        branch = inner.single
        inner.branches = [SESBranch({}, branch.left, branch.middle, branch.right, Verdict.SPLIT)]

    theta = theta_quotient_n2(datum, overrides)
    branches = []
    for branch in theta.branches:
        right = direct_sum(inner.middle, branch.group)
        branches.append(SESBranch(dict(branch.assumptions), STRING_LEFT, direct_sum(STRING_LEFT, right), right,
                                  Verdict.SPLIT))
    outer = SESReport(name=f"pi^{n}({datum.name}) string", parameters=list(theta.parameters), branches=branches)
    return outer, inner


def spin3_bordism(datum: CohomologyDatum, overrides: OperationOverrides = None) -> SESReport:
    """Ω₃^Spin(M) ≅ [M, P₂Sⁿ]: split extension of ker(S̄q²∗:n) by QH^{n+2}(M;Sq²)/Θ(…)."""
    if not datum.structure.is_spin:
        raise TagError(f"{datum.name}: spin bordism needs a Spin or String tag, got {datum.structure.value}")
    overrides = overrides or datum.overrides
    theta = theta_quotient_n2(datum, overrides)
    inner = ker_sq2_bar_report(datum, overrides)
    right = inner.middle
    branches = [SESBranch(dict(b.assumptions), b.group, direct_sum(b.group, right), right, Verdict.SPLIT)
                for b in theta.branches]
    return SESReport(name=f"Omega_3^Spin({datum.name})", parameters=list(theta.parameters), branches=branches)
