# cohomotopy\cohomotopy\bordism\g_to_h.py

import logging
from typing import Dict, Tuple

from ..algebra import PresentedAbelianGroup, Verdict, direct_sum
from ..cochain import CohomologyDatum, StructureTag
from ..engines import SESBranch, SESReport, spin3_bordism
from ..errors import RangeError, TagError
from .tables import ZERO, CoefficientTable

logger = logging.getLogger(__name__)

# k -> (G, H, d_G)
STRUCTURE_GROUPS: Dict[int, Tuple[str, str, int]] = {
    1: ("Spin", "SO", 2),
    2: ("Spin", "SO", 2),
    3: ("String", "Spin", 4),
    7: ("Fivebrane", "String", 8),
}


def _h1(datum: CohomologyDatum) -> PresentedAbelianGroup:
    """H₁(M;ℤ), from the homology block or as H^{D−1}(M;ℤ)."""
    if datum.homology is not None:
        return datum.homology.h1
    return datum.integral_group(datum.dimension - 1)


def _h2(datum: CohomologyDatum) -> PresentedAbelianGroup:
    if datum.homology is not None:
        return datum.homology.h2
    return datum.integral_group(datum.dimension - 2)


def _h1_mod2(datum: CohomologyDatum) -> PresentedAbelianGroup:
    if datum.homology is not None:
        return datum.homology.h1_mod2_space()
    return PresentedAbelianGroup.elementary(datum.mod2_rank(datum.dimension - 1), prefix="h")


def _check_tag(datum: CohomologyDatum, k: int, group: str):
    ok = datum.structure is StructureTag.STRING if group in ("String", "Fivebrane") else datum.structure.is_spin
    if not ok:
        raise TagError(f"{datum.name}: Omega_{k}^{group}(M) needs a {group} manifold, "
                       f"got {datum.structure.value}")


def g_to_h_ses(datum: CohomologyDatum, k: int) -> SESReport:
    """0 → Ω_k^G → Ω_k^G(M) → Ω_k^H(M) → 0, split by the constant map."""
    if k not in STRUCTURE_GROUPS:
        raise RangeError(f"No structure-group pair for k = {k}. Available: {sorted(STRUCTURE_GROUPS)}")
    group, lower, d_g = STRUCTURE_GROUPS[k]
    _check_tag(datum, k, "String" if group == "Fivebrane" else group)
    name = f"Omega_{k}^{group}({datum.name})"

    if k == 7:
        logger.warning(f"[BORDISM] {datum.name}: Omega_7^Fivebrane is not tabulated; report left open")
        return SESReport(name, [], [], notes=["Omega_7^Fivebrane is not tabulated; left term unknown"])

    checks = {"omegaHZero": CoefficientTable.lookup(lower, k) == ZERO}
    notes = []
    parameters = []
    if k == 1:
        left = CoefficientTable.group(group, k)
        rights = [({}, _h1(datum))]
    elif k == 2:
        # d_Spin = 2 = k, so H₁(M;ℤ/2) enters the left term
        left = direct_sum(CoefficientTable.group(group, k), _h1_mod2(datum))
        rights = [({}, _h2(datum))]
        notes.append("left term Omega_2^Spin ⊕ H_1(M;Z/2)")
        notes.append("degree hypothesis d_G = k + 1 fails; the split comes from the two-dimensional spin "
                     "bordism formula instead")
    else:
        if datum.codimension != 3:
            raise RangeError(f"{datum.name}: Omega_3^String(M) is read from codimension 3 data")
        left = CoefficientTable.group(group, k)
        spin = spin3_bordism(datum)
        parameters = list(spin.parameters)
        rights = [(dict(b.assumptions), b.middle) for b in spin.branches]
    checks["degreeHypothesis"] = d_g == k + 1

    branches = [SESBranch(assumptions, left, direct_sum(left, right), right, Verdict.SPLIT)
                for assumptions, right in rights]
    report = SESReport(name, parameters, branches, checks=checks, notes=notes)
    logger.info(f"[BORDISM] {name} = {report.as_parametric().render()}")
    return report
