# cohomotopy\cohomotopy\cochain\wu.py

import logging
from typing import Dict, Optional, Tuple

from ..algebra import IntegerMatrix
from ..errors import MissingDataError
from .datum import CohomologyDatum

logger = logging.getLogger(__name__)


def _cup_matrix(datum: CohomologyDatum, name: str, degree: int, zero_class: bool) -> Optional[IntegerMatrix]:
    if datum.has_map(name, degree):
        return datum.maps[(name, degree)]
    rows, cols = datum.map_shape(name, degree)
    if zero_class or rows == 0 or cols == 0:
        return IntegerMatrix.zeros(rows, cols)
    return None


def derive_wu_actions(datum: CohomologyDatum, strict: bool = True) -> CohomologyDatum:
    """Fill squares forced by the Wu formula on a closed oriented manifold.

    On H^{D-2} and H^{D-3}, Sq² is cup with w₂; on H^{D-3}, Sq²Sq¹ is cup with w₃.
    Stored maps are never replaced, so applying this twice changes nothing.
    """
    if not datum.structure.is_manifold:
        return datum
    top = datum.dimension
    updates: Dict[Tuple[str, int], IntegerMatrix] = {}

    w2_zero = datum.w2_is_zero() is True
    w3_zero = datum.structure.is_spin or datum.w3_is_zero() is True
    for degree in (top - 3, top - 2):
        if datum.has_map("sq2", degree) or degree not in datum.mod2:
            continue
        cup = _cup_matrix(datum, "cupW2", degree, w2_zero)
        if cup is None:
            if strict:
                raise MissingDataError(f"Cannot derive Sq² on degree {degree}: no cup-w₂ map")
            continue
        updates[("sq2", degree)] = cup
        logger.debug(f"[INGEST] Sq² on H^{degree} derived from w₂ for {datum.name}")

    degree = top - 3
    if not datum.has_map("sq2sq1", degree) and degree in datum.mod2:
        cup = _cup_matrix(datum, "cupW3", degree, w3_zero)
        if cup is not None:
            updates[("sq2sq1", degree)] = cup
        elif strict:
            raise MissingDataError(f"Cannot derive Sq²Sq¹ on degree {degree}: no cup-w₃ map")

    degree = datum.n - 1
    if datum.p1_mod3_trivial is True and not datum.has_map("p1Cup3", degree) \
            and degree in datum.mod3 and degree + 4 in datum.mod3:
        updates[("p1Cup3", degree)] = IntegerMatrix.zeros(datum.mod3[degree + 4], datum.mod3[degree])

    return datum.with_maps(updates) if updates else datum
