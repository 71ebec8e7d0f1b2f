# cohomotopy\cohomotopy\algebra\groups.py

from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

from ..errors import ContainmentError
from .matrix import IntegerMatrix, Vector
from .snf import integer_kernel, smith_form, solve


@dataclass(frozen=True)
class GroupInvariants:
    """ℤ^free_rank ⊕ ⊕ ℤ/d_i with d_1 | d_2 | ..."""
    free_rank: int
    invariant_factors: Tuple[int, ...]

    @property
    def order(self) -> Optional[int]:
        if self.free_rank:
            return None
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    @property
    def minimal_generators(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    def render(self) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"ℤ^{self.free_rank}")
        parts.extend(f"ℤ/{d}" for d in self.invariant_factors)
        return " ⊕ ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {
            "freeRank": self.free_rank,
            "invariantFactors": list(self.invariant_factors),
            "display": self.render(),
        }


class PresentedAbelianGroup:
    """coker(relations): generators are rows, each relation is a column."""

    __slots__ = ("generator_names", "relations", "_form", "_moduli", "_invariants")

    def __init__(self, generator_names: Sequence[str], relations: IntegerMatrix = None):
        names = tuple(generator_names)
        if relations is None:
            relations = IntegerMatrix.zeros(len(names), 0)
        if relations.rows != len(names):
            raise ValueError(f"Relation matrix has {relations.rows} rows for {len(names)} generators")
        self.generator_names = names
        self.relations = relations
        self._form = smith_form(relations)
        diagonal = self._form.diagonal
        self._moduli = tuple(diagonal[i] if i < len(diagonal) else 0 for i in range(len(names)))
        self._invariants = GroupInvariants(
            free_rank=len(names) - self._form.rank,
            invariant_factors=self._form.invariant_factors,
        )

    # Constructors

    @classmethod
    def from_relations(cls, relations: IntegerMatrix, prefix: str = "g") -> 'PresentedAbelianGroup':
        return cls([f"{prefix}{i}" for i in range(relations.rows)], relations)

    @classmethod
    def zero(cls) -> 'PresentedAbelianGroup':
        return cls([])

    @classmethod
    def free(cls, rank: int, prefix: str = "z") -> 'PresentedAbelianGroup':
        return cls([f"{prefix}{i}" for i in range(rank)])

    @classmethod
    def cyclic(cls, order: int, name: str = "c") -> 'PresentedAbelianGroup':
        return cls([name], IntegerMatrix(1, 1, [[order]]))

    @classmethod
    def elementary(cls, rank: int, prime: int = 2, prefix: str = "e") -> 'PresentedAbelianGroup':
        """(ℤ/p)^rank, the additive group of an F_p vector space."""
        return cls([f"{prefix}{i}" for i in range(rank)], IntegerMatrix.diagonal([prime] * rank))

    @classmethod
    def from_invariants(cls, free_rank: int, factors: Sequence[int] = (),
                        prefix: str = "g") -> 'PresentedAbelianGroup':
        factors = [f for f in factors if f != 1]
        size = free_rank + len(factors)
        relations = IntegerMatrix.from_columns(
            [tuple(factors[k] if i == free_rank + k else 0 for i in range(size)) for k in range(len(factors))],
            size,
        )
        return cls([f"{prefix}{i}" for i in range(size)], relations)

    # Structure

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    @property
    def invariants(self) -> GroupInvariants:
        return self._invariants

    @property
    def free_rank(self) -> int:
        return self._invariants.free_rank

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self._invariants.invariant_factors

    @property
    def order(self) -> Optional[int]:
        return self._invariants.order

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def is_elementary(self, prime: int = 2) -> bool:
        return self.free_rank == 0 and all(d == prime for d in self.invariant_factors)

    def isomorphic(self, other: 'PresentedAbelianGroup') -> bool:
        return self._invariants == other.invariants

    def smith_basis(self) -> List[Tuple[int, Vector, int]]:
        """(coordinate, generator vector, modulus) for each nontrivial Smith summand; modulus 0 is free."""
        basis = []
        for i, modulus in enumerate(self._moduli):
            if modulus != 1:
                basis.append((i, self._form.u_inv.column(i), modulus))
        return basis

    # Elements

    def _check(self, x: Sequence[int]):
        if len(x) != self.num_generators:
            raise ValueError(f"Element of length {len(x)} in a group on {self.num_generators} generators")

    def coordinates(self, x: Sequence[int]) -> Vector:
        """Normal form of x in Smith coordinates."""
        self._check(x)
        y = self._form.u.apply(x)
        return tuple(yi % m if m else yi for yi, m in zip(y, self._moduli))

    def is_zero(self, x: Sequence[int]) -> bool:
        return all(c == 0 for c in self.coordinates(x))

    def equal(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return self.is_zero(tuple(a - b for a, b in zip(x, y)))

    def element_order(self, x: Sequence[int]) -> Optional[int]:
        """Order of x, or None when x has infinite order."""
        result = 1
        for c, m in zip(self.coordinates(x), self._moduli):
            if c == 0:
                continue
            if m == 0:
                return None
            k = m // gcd(m, c)
            result = result * k // gcd(result, k)
        return result

    def in_subgroup(self, generators: IntegerMatrix, x: Sequence[int]) -> bool:
        """Whether x lies in the subgroup generated by the given columns."""
        self._check(x)
        return solve(IntegerMatrix.hstack(self.num_generators, generators, self.relations), x) is not None

    def quotient(self, generators: IntegerMatrix) -> 'PresentedAbelianGroup':
        """This group modulo the subgroup generated by the given columns."""
        return PresentedAbelianGroup(
            self.generator_names,
            IntegerMatrix.hstack(self.num_generators, self.relations, generators),
        )

    def render(self) -> str:
        return self._invariants.render()

    def __repr__(self) -> str:
        return f"PresentedAbelianGroup({self.render()})"


def group_invariants(g: PresentedAbelianGroup) -> Tuple[int, Tuple[int, ...]]:
    return g.free_rank, g.invariant_factors


def direct_sum(*groups: PresentedAbelianGroup) -> PresentedAbelianGroup:
    names = [f"{name}_{k}" for k, g in enumerate(groups) for name in g.generator_names]
    return PresentedAbelianGroup(names, IntegerMatrix.block_diagonal(*(g.relations for g in groups)))


def subquotient(g: PresentedAbelianGroup, numerator: IntegerMatrix,
                denominator: IntegerMatrix) -> PresentedAbelianGroup:
    """⟨numerator⟩ / ⟨denominator⟩, presented on the numerator columns."""
    n = g.num_generators
    for j, column in enumerate(denominator.columns()):
        if not g.in_subgroup(numerator, column):
            raise ContainmentError(f"Denominator generator {j} {column} is not in the numerator span")
    k = numerator.cols
    stacked = IntegerMatrix.hstack(n, numerator, -denominator, -g.relations)
    kernel = integer_kernel(stacked)
    return PresentedAbelianGroup([f"q{i}" for i in range(k)], kernel.select_rows(range(k)))


def subquotient_coordinates(g: PresentedAbelianGroup, numerator: IntegerMatrix,
                            x: Sequence[int]) -> Vector:
    """Coordinates of x in the numerator generators of a subquotient."""
    solution = solve(IntegerMatrix.hstack(g.num_generators, numerator, g.relations), x)
    if solution is None:
        raise ContainmentError(f"Element {tuple(x)} is not in the numerator span")
    return solution[:numerator.cols]
