# cohomotopy\cohomotopy\bordism\oracle.py

import re
from typing import Sequence

from ..algebra import PresentedAbelianGroup, direct_sum
from ..errors import RangeError
from ..utils.config import EngineConstants
from .tables import CoefficientTable

_DIMENSION = re.compile(r"^\s*n\s*(?:([+-])\s*(\d+))?\s*$")


def parse_sphere_dimension(token: str, n: int) -> int:
    """'n', 'n+3', 'n-1' or a plain integer."""
    token = token.strip()
    if token.lstrip("-").isdigit():
        return int(token)
    match = _DIMENSION.match(token)
    if not match:
        raise ValueError(f"Cannot read sphere dimension '{token}'; use n, n+k, n-k or an integer")
    sign, offset = match.groups()
    if sign is None:
        return n
    return n + int(offset) if sign == "+" else n - int(offset)


def wedge_oracle(sphere_dims: Sequence[int], n: int) -> PresentedAbelianGroup:
    """πⁿ of a wedge of spheres: ⊕_d π_{d−n}^S from the framed table."""
    if n < EngineConstants.MIN_STABLE_N:
        raise RangeError(f"Target dimension n = {n} is below {EngineConstants.MIN_STABLE_N}")
    summands = []
    for d in sphere_dims:
        stem = d - n
        if stem < 0:
            continue
        if stem > EngineConstants.ORACLE_STEM_LIMIT:
            raise RangeError(f"Stem {stem} of S^{d} is beyond the table (at most {EngineConstants.ORACLE_STEM_LIMIT})")
        summands.append(CoefficientTable.group("fr", stem, name=f"s{d}_"))
    return direct_sum(*summands) if summands else PresentedAbelianGroup.zero()
