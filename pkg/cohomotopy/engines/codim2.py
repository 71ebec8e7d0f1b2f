# cohomotopy\cohomotopy\engines\codim2.py

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..algebra import (
    AbHom, IntegerMatrix, PresentedAbelianGroup, Verdict, build_extension, direct_sum, hom_cokernel,
    kernel_subgroup, lift, p_torsion,
)
from ..algebra.matrix import Vector
from ..cochain import CohomologyDatum, OperationOverrides, op_kernel, operation_hom
from ..errors import DataError, HypothesisError, MissingDataError, TagError
from .types import Parameter, SESBranch, SESReport

logger = logging.getLogger(__name__)

FRAMED_2 = PresentedAbelianGroup.cyclic(2, "eta2")


@dataclass
class Codim2Result:
    """πⁿ of an (n+2)-dimensional space as an extension of ker(Sq²_ℤ:n) by QH^{n+1} ⊕ ℤ/2^{1−ε}."""
    kernel_term: PresentedAbelianGroup
    quotient_term: PresentedAbelianGroup
    framed_summand: Optional[bool]
    classifier: AbHom
    report: SESReport
    dual: Optional['Codim2Result'] = None
    dual_agrees: Optional[bool] = None

    @property
    def middle(self) -> PresentedAbelianGroup:
        return self.report.middle

    @property
    def verdict(self) -> Verdict:
        return self.report.verdict

    def to_dict(self) -> dict:
        result = {
            "kernelTerm": self.kernel_term.invariants.to_dict(),
            "quotientTerm": self.quotient_term.invariants.to_dict(),
            "framedSummand": self.framed_summand,
            "report": self.report.to_dict(),
        }
        if self.dual is not None:
            result["dual"] = self.dual.report.to_dict()
            result["dualAgrees"] = self.dual_agrees
        return result


def _torsion_in_ambient(group: PresentedAbelianGroup, inclusion: IntegerMatrix) -> Tuple[PresentedAbelianGroup,
                                                                                       List[Vector]]:
    """₂G and its generators written in the ambient coordinates of G's inclusion."""
    torsion, t_inclusion = p_torsion(group, 2)
    return torsion, (inclusion @ t_inclusion.matrix).columns()


def _pad(images: List[Vector], extra: int) -> List[Vector]:
    return [tuple(v) + (0,) * extra for v in images]


def epsilon_parameter(datum: CohomologyDatum) -> Parameter:
    """ε = 0 exactly when Sq² vanishes on Hⁿ(M;F₂), i.e. when w₂ = 0 (Wu in degree D−2)."""
    if datum.structure.is_spin:
        return Parameter.forced("eps", 0, f"w2 = 0 on a {datum.structure.value} manifold")
    w2_zero = datum.w2_is_zero()
    try:
        sq2 = datum.modp_map("sq2", datum.n)
    except MissingDataError:
        if w2_zero is None:
            raise MissingDataError(f"Neither Sq2 on H^{datum.n} nor w2 is known for {datum.name}") from None
        return Parameter.computed("eps", 0 if w2_zero else 1, "from w2")
    value = 0 if sq2.is_zero() else 1
    if w2_zero is not None and value != (0 if w2_zero else 1):
        logger.warning(f"[CODIM2] {datum.name}: Sq2 on H^{datum.n} and w2 disagree; using Sq2")
    return Parameter.computed("eps", value, f"Sq2 on H^{datum.n}(F2)")


def codim2_classifier(datum: CohomologyDatum) -> AbHom:
    """φ: ₂ker(Sq²_ℤ:n) → QH^{n+1}(X;Sq²_ℤ), x ↦ [Sq²x′] with δx′ = x."""
    n = datum.n
    kernel_group, inclusion = op_kernel(datum, "Sq2Z", n).as_group()
    quotient, _ = hom_cokernel(operation_hom(datum, "Sq2Z", n - 1))
    torsion, taus = _torsion_in_ambient(kernel_group, inclusion.matrix)

    delta = datum.hom("bockstein", n - 1)
    sq2 = datum.matrix("sq2", n - 1)
    for z in kernel_subgroup(delta).generators.columns():
        if not quotient.is_zero(sq2.apply(z)):
            raise DataError(f"{datum.name}: Sq2 of the Bockstein kernel element {list(z)} is not in im Sq2Z; "
                            f"the classifier is not well defined")

    images = []
    for tau in taus:
        x = lift(delta, tau)
        if x is None:
            raise DataError(f"{datum.name}: 2-torsion class {list(tau)} of H^{n} has no Bockstein preimage")
        images.append(tuple(v % 2 for v in sq2.apply(x)))
    return AbHom(torsion, quotient, IntegerMatrix.from_columns(images, quotient.num_generators))


def _kernel_and_quotient(datum: CohomologyDatum) -> Tuple[PresentedAbelianGroup, PresentedAbelianGroup]:
    kernel_group, _ = op_kernel(datum, "Sq2Z", datum.n).as_group()
    quotient, _ = hom_cokernel(operation_hom(datum, "Sq2Z", datum.n - 1))
    return kernel_group, quotient


def codim2_group(datum: CohomologyDatum, overrides: OperationOverrides = None) -> Codim2Result:
    """πⁿ(X) for a space of dimension n+2."""
    overrides = overrides or datum.overrides
    n = datum.n
    kernel_group, quotient = _kernel_and_quotient(datum)
    phi = codim2_classifier(datum)
    images = phi.matrix.columns()
    phi_zero = phi.is_zero()
    notes: List[str] = []

    if datum.structure.is_manifold:
        eps = epsilon_parameter(datum)
        framed = eps.value == 0
        left = direct_sum(quotient, FRAMED_2) if framed else quotient
        extension = build_extension(kernel_group, left, _pad(images, 1 if framed else 0))
        branches = [SESBranch({}, left, extension.middle, kernel_group, extension.verdict)]
        parameters = [eps]
    else:
        if datum.mod2_rank(n + 2) != 1:
            raise HypothesisError(f"{datum.name}: top mod 2 cohomology H^{n + 2} must be F2")
        if not datum.modp_map("sq2", n).is_zero():
            framed = False
            extension = build_extension(kernel_group, quotient, images)
            branches = [SESBranch({}, quotient, extension.middle, kernel_group, extension.verdict)]
            parameters = [Parameter.computed("eps", 1, f"Sq2 nontrivial on H^{n}(F2)")]
        else:
            framed, branches, parameters = _cw_split(datum, overrides, kernel_group, quotient)
            if not phi_zero:
                note = (f"Sq2 acts trivially on H^{n}(F2): the sequence is reported split as stated for "
                        f"CW complexes although the classifier is nonzero")
                notes.append(note)
                logger.warning(f"[CODIM2] {datum.name}: {note}")

    report = SESReport(
        name=f"pi^{n}({datum.name})",
        parameters=parameters,
        branches=branches,
        classifier=phi.matrix,
        checks={"classifierZero": phi_zero,
                "splitIffClassifierZero": all((b.verdict is Verdict.SPLIT) == phi_zero for b in branches)},
        notes=notes,
    )
    result = Codim2Result(kernel_group, quotient, framed, phi, report)

    if datum.structure.is_manifold and datum.homology is not None:
        result.dual = codim2_bordism_dual(datum)
        result.dual_agrees = result.dual.middle.isomorphic(result.middle)
        report.checks["dualAgrees"] = result.dual_agrees
        if not result.dual_agrees:
            logger.warning(f"[CODIM2] {datum.name}: homological middle {result.dual.middle.render()} differs "
                           f"from {result.middle.render()}")
    logger.info(f"[CODIM2] {datum.name}: pi^{n} = {report.as_parametric().render()}")
    return result


def _cw_split(datum: CohomologyDatum, overrides: OperationOverrides, kernel_group: PresentedAbelianGroup,
              quotient: PresentedAbelianGroup):
    """Split sequence K ⊕ QH ⊕ ℤ/2^{1−ε(Θ)} for a CW complex with Sq² trivial on Hⁿ."""
    if overrides.theta_trivial is None:
        theta = Parameter.unknown("eps_theta", "Θ on Hⁿ is not computed for CW complexes")
    else:
        theta = Parameter.override("eps_theta", 0 if overrides.theta_trivial else 1)
    branches = []
    for value in theta.values():
        left = direct_sum(quotient, FRAMED_2) if value == 0 else quotient
        middle = direct_sum(kernel_group, left)
        assumptions = {} if theta.known else {"eps_theta": value}
        branches.append(SESBranch(assumptions, left, middle, kernel_group, Verdict.SPLIT))
    framed = (theta.value == 0) if theta.known else None
    return framed, branches, [Parameter.computed("eps", 0, f"Sq2 trivial on H^{datum.n}(F2)"), theta]


# Homological side

def _dual_pieces(datum: CohomologyDatum):
    """(ker⟨w₂,−⟩_ℤ, H₁(F₂)/w₂⌢_ℤH₃, classifier images) from the homology block."""
    if datum.homology is None:
        raise MissingDataError(f"{datum.name} has no homology block")
    if not datum.structure.is_manifold:
        raise TagError(f"{datum.name}: the bordism dual needs a manifold tag, got {datum.structure.value}")
    h = datum.homology
    pairing = AbHom(h.h2, PresentedAbelianGroup.elementary(1), h.pairing_w2)
    right, inclusion = kernel_subgroup(pairing).as_group()

    h1_mod2 = h.h1_mod2_space()
    cap = AbHom(h.h3, h1_mod2, h.cap_w2)
    base = h1_mod2.quotient(cap.matrix)

    h3_mod2 = h.h3_mod2_space()
    bockstein = AbHom(h3_mod2, h.h2, h.bockstein)
    for z in kernel_subgroup(bockstein).generators.columns():
        if not base.is_zero(h.cap_w2_mod2.apply(z)):
            raise DataError(f"{datum.name}: w2 cap of the Bockstein kernel element {list(z)} is not integral")

    _, taus = _torsion_in_ambient(right, inclusion.matrix)
    images = []
    for tau in taus:
        x = lift(bockstein, tau)
        if x is None:
            raise DataError(f"{datum.name}: 2-torsion class {list(tau)} of H_2 has no Bockstein preimage")
        images.append(tuple(v % 2 for v in h.cap_w2_mod2.apply(x)))
    return right, base, images


def codim2_bordism_dual(datum: CohomologyDatum) -> Codim2Result:
    """Ω₂^fr(M) from homology: extension of ker⟨w₂,−⟩_ℤ by Ω₂^fr[1−ε] ⊕ H₁(M;F₂)/w₂⌢_ℤH₃."""
    right, base, images = _dual_pieces(datum)
    eps = epsilon_parameter(datum)
    framed = eps.value == 0
    left = direct_sum(base, FRAMED_2) if framed else base
    extension = build_extension(right, left, _pad(images, 1 if framed else 0))
    torsion, _ = p_torsion(right, 2)
    classifier = AbHom(torsion, base, IntegerMatrix.from_columns(images, base.num_generators))
    report = SESReport(
        name=f"Omega_2^fr({datum.name})",
        parameters=[eps],
        branches=[SESBranch({}, left, extension.middle, right, extension.verdict)],
        classifier=classifier.matrix,
        checks={"classifierZero": classifier.is_zero()},
    )
    logger.info(f"[CODIM2] {datum.name}: Omega_2^fr = {extension.middle.render()}")
    return Codim2Result(right, base, framed, classifier, report)


def framed_spin_bordism2(datum: CohomologyDatum) -> SESReport:
    """Ω₂^{fr,Spin}(M): extension of ker⟨w₂,−⟩_ℤ by Ω₂^Spin ⊕ H₁(M;F₂)/w₂⌢_ℤH₃."""
    right, base, images = _dual_pieces(datum)
    left = direct_sum(base, FRAMED_2)
    extension = build_extension(right, left, _pad(images, 1))

    framed = codim2_bordism_dual(datum)
    eps = framed.report.parameters[0]
    expected = direct_sum(framed.middle, FRAMED_2) if eps.value == 1 else framed.middle
    differs_by_eps = expected.isomorphic(extension.middle)
    if not differs_by_eps:
        logger.warning(f"[CODIM2] {datum.name}: Omega_2^fr,Spin = {extension.middle.render()} is not "
                       f"Omega_2^fr ⊕ Z/2^eps = {expected.render()}")
    return SESReport(
        name=f"Omega_2^fr,Spin({datum.name})",
        parameters=[eps],
        branches=[SESBranch({}, left, extension.middle, right, extension.verdict)],
        classifier=framed.classifier.matrix,
        checks={"classifierZero": framed.classifier.is_zero(), "differsByEps": differs_by_eps,
                "spinEqualsFramed": framed.middle.isomorphic(extension.middle)},
        notes=[f"Omega_2^fr({datum.name}) = {framed.middle.render()}"],
    )
