# cohomotopy\cohomotopy\bordism\section.py

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from ..errors import InconsistentInputError, RangeError

logger = logging.getLogger(__name__)

TriState = Optional[bool]

STRUCTURE_GROUP_OF_K = {1: "Spin", 2: "Spin", 3: "String"}


class SectionVerdict(Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    INSUFFICIENT = "Insufficient"


@dataclass
class EulerData:
    """Vanishing verdicts for the obstructions of a rank-n G-bundle over an (n+k)-manifold.

    Each field is True (vanishes), False (does not vanish) or None (unknown).
    The defect class lives in H₁(M;ℤ/2) and is zero by definition for k = 1 and 3.
    """
    k: int
    e_g_zero: TriState = None
    kappa_zero: TriState = None
    e_h_zero: TriState = None
    defect_zero: TriState = None

    def __post_init__(self):
        if self.k not in STRUCTURE_GROUP_OF_K:
            raise RangeError(f"Section criterion is stated for k in {sorted(STRUCTURE_GROUP_OF_K)}, got {self.k}")
        if self.k in (1, 3):
            if self.defect_zero is False:
                raise InconsistentInputError(f"The defect class is zero for k = {self.k}")
            self.defect_zero = True

    @property
    def structure_group(self) -> str:
        return STRUCTURE_GROUP_OF_K[self.k]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "structureGroup": self.structure_group,
            "eGZero": self.e_g_zero,
            "divisorKappaZero": self.kappa_zero,
            "eHZero": self.e_h_zero,
            "defectDeltaZero": self.defect_zero,
        }


@dataclass
class SectionDecision:
    verdict: SectionVerdict
    failing: Optional[str] = None
    missing: List[str] = None

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "failing": self.failing, "missing": list(self.missing or [])}


def _all_of(values: List[TriState]) -> TriState:
    if any(v is False for v in values):
        return False
    if all(v is True for v in values):
        return True
    return None


def section_existence(euler: EulerData) -> SectionDecision:
    """Decide a nowhere-vanishing section: e_G = 0 ⟺ (κ_G = 0 ∧ e_H = 0 ∧ δ_G = 0)."""
    conditions = [("divisorKappa", euler.kappa_zero), ("eH", euler.e_h_zero), ("defectDelta", euler.defect_zero)]
    combined = _all_of([v for _, v in conditions])
    if euler.e_g_zero is not None and combined is not None and euler.e_g_zero != combined:
        raise InconsistentInputError(
            f"eG {'vanishes' if euler.e_g_zero else 'does not vanish'} but the divisor, H-Euler and defect "
            f"conditions {'all vanish' if combined else 'do not all vanish'}")

    value = euler.e_g_zero if euler.e_g_zero is not None else combined
    if value is True:
        decision = SectionDecision(SectionVerdict.EXISTS)
    elif value is False:
        failing = "eG" if euler.e_g_zero is False else next(name for name, v in conditions if v is False)
        decision = SectionDecision(SectionVerdict.NOT_EXISTS, failing=failing)
    else:
        missing = ["eG"] + [name for name, v in conditions if v is None]
        decision = SectionDecision(SectionVerdict.INSUFFICIENT, missing=missing)
    logger.info(f"[BORDISM] k={euler.k} ({euler.structure_group}): {decision.verdict.value}")
    return decision
