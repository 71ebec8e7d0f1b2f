# cohomotopy\cohomotopy\cochain\operations.py

from typing import Dict, List, Tuple

from ..algebra import AbHom, PresentedAbelianGroup, Subgroup, hom_cokernel, image_subgroup, kernel_subgroup
from .datum import MAP_TYPES, PRIMES, CohomologyDatum


class OperationFactory:
    """Cohomology operations as chains of stored structure maps."""

    # name -> (maps applied left to right, stored shortcut for the whole chain)
    _OPERATIONS: Dict[str, Tuple[Tuple[str, ...], str]] = {
        "Sq2Z": (("rho2", "sq2"), None),
        "Sq4Z": (("rho2", "sq4"), None),
        "Sq1": (("sq1",), None),
        "Sq2": (("sq2",), None),
        "Sq4": (("sq4",), None),
        "Sq2Sq1": (("sq1", "sq2"), "sq2sq1"),
        "P1Z": (("rho3", "p1Cup3"), None),
        "P1": (("p1Cup3",), None),
    }

    @classmethod
    def get_supported_types(cls) -> List[str]:
        return list(cls._OPERATIONS.keys())

    @classmethod
    def shift(cls, name: str) -> int:
        chain, _ = cls._chain(name)
        return sum(MAP_TYPES[step][2] for step in chain)

    @classmethod
    def _chain(cls, name: str) -> Tuple[Tuple[str, ...], str]:
        if name not in cls._OPERATIONS:
            raise ValueError(f"Unsupported operation: {name}. Available: {cls.get_supported_types()}")
        return cls._OPERATIONS[name]

    @classmethod
    def create(cls, datum: CohomologyDatum, name: str, degree: int) -> AbHom:
        chain, shortcut = cls._chain(name)
        if shortcut is not None and datum.has_map(shortcut, degree):
            return datum.hom(shortcut, degree)

        result = None
        current = degree
        for step in chain:
            hom = datum.hom(step, current)
            current += MAP_TYPES[step][2]
            if result is None:
                result = hom
                continue
            prime = PRIMES[MAP_TYPES[step][1]]
            result = AbHom(result.domain, hom.codomain, (hom.matrix @ result.matrix).reduce(prime), check=False)
        return result


def operation_hom(datum: CohomologyDatum, name: str, degree: int) -> AbHom:
    """The operation `name` as a homomorphism out of degree `degree`."""
    return OperationFactory.create(datum, name, degree)


def op_kernel(datum: CohomologyDatum, name: str, degree: int) -> Subgroup:
    return kernel_subgroup(operation_hom(datum, name, degree))


def op_image(datum: CohomologyDatum, name: str, degree: int) -> Subgroup:
    return image_subgroup(operation_hom(datum, name, degree))


def op_quotient(datum: CohomologyDatum, name: str, degree: int) -> PresentedAbelianGroup:
    """Target of the operation modulo its image."""
    return hom_cokernel(operation_hom(datum, name, degree))[0]
