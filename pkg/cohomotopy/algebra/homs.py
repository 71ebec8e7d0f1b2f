# cohomotopy\cohomotopy\algebra\homs.py

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..errors import DataError
from .groups import PresentedAbelianGroup
from .matrix import IntegerMatrix, Vector
from .snf import integer_kernel, solve


class AbHom:
    """Homomorphism of presented groups; column j is the image of domain generator j."""

    __slots__ = ("domain", "codomain", "matrix")

    def __init__(self, domain: PresentedAbelianGroup, codomain: PresentedAbelianGroup,
                 matrix: IntegerMatrix, check: bool = True):
        if matrix.shape != (codomain.num_generators, domain.num_generators):
            raise ValueError(f"Matrix shape {matrix.shape} does not fit "
                             f"{domain.num_generators} -> {codomain.num_generators} generators")
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        if check:
            images = matrix @ domain.relations
            for j, column in enumerate(images.columns()):
                if not codomain.is_zero(column):
                    raise DataError(f"Homomorphism is not well defined: relation {j} maps to {column}")

    @classmethod
    def zero(cls, domain: PresentedAbelianGroup, codomain: PresentedAbelianGroup) -> 'AbHom':
        return cls(domain, codomain, IntegerMatrix.zeros(codomain.num_generators, domain.num_generators),
                   check=False)

    @classmethod
    def identity(cls, group: PresentedAbelianGroup) -> 'AbHom':
        return cls(group, group, IntegerMatrix.identity(group.num_generators), check=False)

    def __call__(self, x: Sequence[int]) -> Vector:
        return self.matrix.apply(x)

    def compose(self, inner: 'AbHom') -> 'AbHom':
        """self ∘ inner."""
        return AbHom(inner.domain, self.codomain, self.matrix @ inner.matrix, check=False)

    def restrict(self, generators: IntegerMatrix) -> IntegerMatrix:
        """Images of the given domain elements, as columns."""
        return self.matrix @ generators

    def is_zero(self) -> bool:
        return all(self.codomain.is_zero(c) for c in self.matrix.columns())

    def __repr__(self) -> str:
        return f"AbHom({self.domain.render()} -> {self.codomain.render()}, {self.matrix.to_lists()})"


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of `ambient` generated by the columns of `generators`."""
    ambient: PresentedAbelianGroup
    generators: IntegerMatrix

    @classmethod
    def whole(cls, group: PresentedAbelianGroup) -> 'Subgroup':
        return cls(group, IntegerMatrix.identity(group.num_generators))

    @classmethod
    def trivial(cls, group: PresentedAbelianGroup) -> 'Subgroup':
        return cls(group, IntegerMatrix.zeros(group.num_generators, 0))

    def contains(self, x: Sequence[int]) -> bool:
        return self.ambient.in_subgroup(self.generators, x)

    def is_subgroup_of(self, other: 'Subgroup') -> bool:
        return all(other.contains(c) for c in self.generators.columns())

    def same_as(self, other: 'Subgroup') -> bool:
        return self.is_subgroup_of(other) and other.is_subgroup_of(self)

    def witness_outside(self, other: 'Subgroup') -> Optional[Vector]:
        """A generator of self not contained in other, if any."""
        for column in self.generators.columns():
            if not other.contains(column):
                return column
        return None

    def is_trivial(self) -> bool:
        return all(self.ambient.is_zero(c) for c in self.generators.columns())

    def as_group(self) -> Tuple[PresentedAbelianGroup, AbHom]:
        """The subgroup as a presented group, with its inclusion."""
        n = self.ambient.num_generators
        k = self.generators.cols
        kernel = integer_kernel(IntegerMatrix.hstack(n, self.generators, -self.ambient.relations))
        group = PresentedAbelianGroup([f"s{i}" for i in range(k)], kernel.select_rows(range(k)))
        return group, AbHom(group, self.ambient, self.generators, check=False)


def lift(f: AbHom, y: Sequence[int]) -> Optional[Vector]:
    """Some x with f(x) = y in the codomain, or None."""
    n = f.domain.num_generators
    solution = solve(IntegerMatrix.hstack(f.codomain.num_generators, f.matrix, f.codomain.relations), y)
    if solution is None:
        return None
    return solution[:n]


def hom_kernel(f: AbHom) -> Tuple[PresentedAbelianGroup, AbHom]:
    return kernel_subgroup(f).as_group()


def kernel_subgroup(f: AbHom) -> Subgroup:
    n = f.domain.num_generators
    stacked = IntegerMatrix.hstack(f.codomain.num_generators, f.matrix, -f.codomain.relations)
    return Subgroup(f.domain, integer_kernel(stacked).select_rows(range(n)))


def image_subgroup(f: AbHom) -> Subgroup:
    return Subgroup(f.codomain, f.matrix)


def hom_image(f: AbHom) -> Tuple[PresentedAbelianGroup, AbHom]:
    return image_subgroup(f).as_group()


def hom_cokernel(f: AbHom) -> Tuple[PresentedAbelianGroup, AbHom]:
    group = f.codomain.quotient(f.matrix)
    return group, AbHom(f.codomain, group, IntegerMatrix.identity(f.codomain.num_generators), check=False)


def torsion_subgroup(g: PresentedAbelianGroup, prime: int) -> Subgroup:
    """Elements of order dividing p, generated by (d_i/p)·(Smith generator i) for p | d_i."""
    columns: List[Vector] = []
    for _, vector, modulus in g.smith_basis():
        if modulus and modulus % prime == 0:
            columns.append(tuple((modulus // prime) * x for x in vector))
    return Subgroup(g, IntegerMatrix.from_columns(columns, g.num_generators))


def two_torsion(g: PresentedAbelianGroup) -> Tuple[PresentedAbelianGroup, AbHom]:
    return p_torsion(g, 2)


def p_torsion(g: PresentedAbelianGroup, prime: int) -> Tuple[PresentedAbelianGroup, AbHom]:
    """ₚG as an elementary group, generators in Smith-basis order."""
    sub = torsion_subgroup(g, prime)
    group = PresentedAbelianGroup.elementary(sub.generators.cols, prime, prefix="t")
    return group, AbHom(group, g, sub.generators, check=False)


def preimage(f: AbHom, target: Subgroup) -> Subgroup:
    """Largest subgroup of the domain mapped into `target`."""
    n = f.domain.num_generators
    m = f.codomain.num_generators
    stacked = IntegerMatrix.hstack(m, f.matrix, -target.generators, -f.codomain.relations)
    return Subgroup(f.domain, integer_kernel(stacked).select_rows(range(n)))
