# cohomotopy\cohomotopy\cochain\datum.py

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ..algebra import AbHom, IntegerMatrix, ModPMap, PresentedAbelianGroup
from ..errors import DegreeError, MissingDataError

Vector = Tuple[int, ...]
TriState = Optional[bool]


class StructureTag(Enum):
    ORIENTED = "Oriented"
    SPIN = "Spin"
    STRING = "String"
    CW_ONLY = "CWOnly"

    @property
    def is_manifold(self) -> bool:
        return self is not StructureTag.CW_ONLY

    @property
    def is_spin(self) -> bool:
        return self in (StructureTag.SPIN, StructureTag.STRING)

    @classmethod
    def parse(cls, value: str) -> 'StructureTag':
        for tag in cls:
            if tag.value.lower() == str(value).lower():
                return tag
        raise ValueError(f"Unsupported structure tag: {value}. Available: {[t.value for t in cls]}")


# name -> (domain kind, codomain kind, degree shift)
MAP_TYPES: Dict[str, Tuple[str, str, int]] = {
    "rho2": ("integral", "mod2", 0),
    "bockstein": ("mod2", "integral", 1),
    "sq1": ("mod2", "mod2", 1),
    "sq2": ("mod2", "mod2", 2),
    "sq4": ("mod2", "mod2", 4),
    "sq2sq1": ("mod2", "mod2", 3),
    "cupW2": ("mod2", "mod2", 2),
    "cupW3": ("mod2", "mod2", 3),
    "rho3": ("integral", "mod3", 0),
    "bockstein3": ("mod3", "integral", 1),
    "p1Cup3": ("mod3", "mod3", 4),
}

PRIMES = {"mod2": 2, "mod3": 3}


@dataclass
class OperationOverrides:
    """User-declared data for Θ, Φ, 𝕋 and the 3-primary parameter; None means unknown."""
    theta_image: Dict[int, List[Vector]] = None
    theta_trivial: TriState = None
    theta_trivial_n: TriState = None
    theta_kernel_n: Optional[List[Vector]] = None
    phi_trivial: TriState = None
    phi_image: Optional[List[Vector]] = None
    t_trivial: TriState = None
    three_primary_epsilon: Optional[int] = None

    def __post_init__(self):
        if self.theta_image is None:
            self.theta_image = {}

    def merged(self, **updates) -> 'OperationOverrides':
        """Copy with every non-None update applied."""
        return replace(self, **{k: v for k, v in updates.items() if v is not None})

    def to_dict(self) -> dict:
        return {
            "thetaImage": {str(k): [list(v) for v in vs] for k, vs in sorted(self.theta_image.items())},
            "thetaTrivial": self.theta_trivial,
            "thetaTrivialN": self.theta_trivial_n,
            "thetaKernelN": None if self.theta_kernel_n is None else [list(v) for v in self.theta_kernel_n],
            "phiTrivial": self.phi_trivial,
            "phiImage": None if self.phi_image is None else [list(v) for v in self.phi_image],
            "tTrivial": self.t_trivial,
            "threePrimaryEpsilon": self.three_primary_epsilon,
        }


@dataclass
class HomologyData:
    """H_1, H_2, H_3 with the w₂ cap/pairing maps and the homology Bockstein H₃(F₂) → H₂(ℤ)."""
    h1: PresentedAbelianGroup
    h2: PresentedAbelianGroup
    h3: PresentedAbelianGroup
    h1_mod2: int
    h3_mod2: int
    cap_w2: IntegerMatrix
    cap_w2_mod2: IntegerMatrix
    pairing_w2: IntegerMatrix
    bockstein: IntegerMatrix

    def h1_mod2_space(self) -> PresentedAbelianGroup:
        return PresentedAbelianGroup.elementary(self.h1_mod2, prefix="h")

    def h3_mod2_space(self) -> PresentedAbelianGroup:
        return PresentedAbelianGroup.elementary(self.h3_mod2, prefix="k")


@dataclass
class CohomologyDatum:
    """Cohomology of a space on the degree window of its codimension, with structure maps."""
    name: str
    dimension: int
    codimension: int
    structure: StructureTag
    integral: Dict[int, PresentedAbelianGroup]
    mod2: Dict[int, int]
    mod3: Dict[int, int] = field(default_factory=dict)
    maps: Dict[Tuple[str, int], IntegerMatrix] = field(default_factory=dict)
    w2: Optional[Vector] = None
    w3: Optional[Vector] = None
    p1_mod3_trivial: TriState = None
    homology: Optional[HomologyData] = None
    overrides: OperationOverrides = field(default_factory=OperationOverrides)
    basis: Dict[int, List[str]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    _spaces: Dict[Tuple[str, int], PresentedAbelianGroup] = field(default_factory=dict, repr=False, compare=False)

    # Degrees

    @property
    def n(self) -> int:
        return self.dimension - self.codimension

    @property
    def window(self) -> range:
        start = self.n - 1 if self.codimension == 2 else self.n - 2
        return range(start, self.dimension + 1)

    def in_window(self, degree: int) -> bool:
        return degree in self.window

    def check_degree(self, degree: int):
        if degree not in self.window:
            raise DegreeError(f"Degree {degree} is outside the window "
                              f"[{self.window.start}, {self.window.stop - 1}] of {self.name}")

    # Groups

    def integral_group(self, degree: int) -> PresentedAbelianGroup:
        self.check_degree(degree)
        if degree not in self.integral:
            raise MissingDataError(f"No integral cohomology in degree {degree} for {self.name}")
        return self.integral[degree]

    def mod2_rank(self, degree: int) -> int:
        return self._rank("mod2", degree)

    def mod3_rank(self, degree: int) -> int:
        return self._rank("mod3", degree)

    def has_mod3(self, degree: int) -> bool:
        return degree in self.mod3

    def _rank(self, kind: str, degree: int) -> int:
        ranks = self.mod2 if kind == "mod2" else self.mod3
        if degree in ranks:
            return ranks[degree]
        if degree in self.window:
            raise MissingDataError(f"No {kind} rank in degree {degree} for {self.name}")
        raise DegreeError(f"Degree {degree} is outside the window of {self.name} and carries no {kind} data")

    def space(self, kind: str, degree: int) -> PresentedAbelianGroup:
        """The group H^degree with the given coefficients; F_p spaces are cached so maps share them."""
        if kind == "integral":
            return self.integral_group(degree)
        key = (kind, degree)
        if key not in self._spaces:
            prefix = "x" if kind == "mod2" else "y"
            self._spaces[key] = PresentedAbelianGroup.elementary(self._rank(kind, degree), PRIMES[kind],
                                                                 prefix=f"{prefix}{degree}_")
        return self._spaces[key]

    def mod2_space(self, degree: int) -> PresentedAbelianGroup:
        return self.space("mod2", degree)

    def _size(self, kind: str, degree: int) -> int:
        if kind == "integral":
            return self.integral_group(degree).num_generators
        return self._rank(kind, degree)

    # Maps

    def map_shape(self, name: str, degree: int) -> Tuple[int, int]:
        """(rows, cols) of the named map starting in `degree`."""
        if name not in MAP_TYPES:
            raise ValueError(f"Unsupported map: {name}. Available: {list(MAP_TYPES)}")
        source, target, shift = MAP_TYPES[name]
        return self._size(target, degree + shift), self._size(source, degree)

    def has_map(self, name: str, degree: int) -> bool:
        return (name, degree) in self.maps

    def matrix(self, name: str, degree: int) -> IntegerMatrix:
        """The stored matrix, or the zero matrix when one side is the zero group."""
        rows, cols = self.map_shape(name, degree)
        stored = self.maps.get((name, degree))
        if stored is not None:
            return stored
        if rows == 0 or cols == 0:
            return IntegerMatrix.zeros(rows, cols)
        raise MissingDataError(f"Map {name} in degree {degree} is missing for {self.name}")

    def modp_map(self, name: str, degree: int) -> ModPMap:
        source, target, _ = MAP_TYPES[name]
        prime = PRIMES.get(target, PRIMES.get(source))
        return ModPMap.from_integer_matrix(prime, self.matrix(name, degree))

    def hom(self, name: str, degree: int, check: bool = True) -> AbHom:
        source, target, shift = MAP_TYPES[name]
        return AbHom(self.space(source, degree), self.space(target, degree + shift),
                     self.matrix(name, degree), check=check)

    def with_maps(self, updates: Dict[Tuple[str, int], IntegerMatrix]) -> 'CohomologyDatum':
        maps = dict(self.maps)
        maps.update(updates)
        return replace(self, maps=maps, _spaces={})

    # Characteristic classes

    def w2_is_zero(self) -> Optional[bool]:
        if self.structure.is_spin:
            return True
        if self.w2 is None:
            return None
        return not any(x % 2 for x in self.w2)

    def w3_is_zero(self) -> Optional[bool]:
        if self.w3 is None:
            return None
        return not any(x % 2 for x in self.w3)

    def summary(self) -> dict:
        return {
            "name": self.name,
            "dimension": self.dimension,
            "codimension": self.codimension,
            "n": self.n,
            "structure": self.structure.value,
            "window": [self.window.start, self.window.stop - 1],
            "integral": {str(i): self.integral[i].invariants.to_dict() for i in sorted(self.integral)},
            "mod2": {str(i): self.mod2[i] for i in sorted(self.mod2)},
            "mod3": {str(i): self.mod3[i] for i in sorted(self.mod3)},
        }
