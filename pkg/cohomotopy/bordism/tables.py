# cohomotopy\cohomotopy\bordism\tables.py

from typing import Dict, Tuple

from ..algebra import GroupInvariants, PresentedAbelianGroup
from ..errors import RangeError

Z = GroupInvariants(1, ())
ZERO = GroupInvariants(0, ())


def _cyclic(order: int) -> GroupInvariants:
    return GroupInvariants(0, (order,))


class CoefficientTable:
    """Bordism groups of a point, Ω_k^G, for the structure groups the reports use."""

    FRAMED: Tuple[GroupInvariants, ...] = (Z, _cyclic(2), _cyclic(2), _cyclic(24), ZERO, ZERO, _cyclic(2),
                                           _cyclic(240))
    SPIN: Tuple[GroupInvariants, ...] = (Z, _cyclic(2), _cyclic(2), ZERO)
    SO: Tuple[GroupInvariants, ...] = (Z, ZERO, ZERO, ZERO)
    # agrees with the framed table below dimension 7
    STRING: Tuple[GroupInvariants, ...] = FRAMED[:7] + (ZERO,)

    THEORIES: Dict[str, Tuple[GroupInvariants, ...]] = {
        "fr": FRAMED,
        "Spin": SPIN,
        "SO": SO,
        "String": STRING,
    }

    @classmethod
    def lookup(cls, theory: str, k: int) -> GroupInvariants:
        if theory not in cls.THEORIES:
            raise ValueError(f"Unsupported bordism theory: {theory}. Available: {list(cls.THEORIES.keys())}")
        table = cls.THEORIES[theory]
        if not 0 <= k < len(table):
            raise RangeError(f"Omega_{k}^{theory} is outside the table (0 <= k <= {len(table) - 1})")
        return table[k]

    @classmethod
    def group(cls, theory: str, k: int, name: str = "w") -> PresentedAbelianGroup:
        entry = cls.lookup(theory, k)
        return PresentedAbelianGroup.from_invariants(entry.free_rank, entry.invariant_factors, prefix=name)

    @classmethod
    def coherence(cls) -> Dict[str, bool]:
        """Framed and spin agree through dimension 2; framed and string through dimension 6."""
        return {
            "framedEqualsSpin": all(cls.FRAMED[k] == cls.SPIN[k] for k in range(3)),
            "framedEqualsString": all(cls.FRAMED[k] == cls.STRING[k] for k in range(7)),
        }

    @classmethod
    def to_dict(cls) -> dict:
        return {name: [g.render() for g in table] for name, table in cls.THEORIES.items()}
