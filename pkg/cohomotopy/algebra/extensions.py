# cohomotopy\cohomotopy\algebra\extensions.py

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from .groups import GroupInvariants, PresentedAbelianGroup
from .homs import AbHom, p_torsion
from .matrix import IntegerMatrix, Vector


class Verdict(Enum):
    SPLIT = "Split"
    NON_SPLIT = "NonSplit"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ElementaryTwoExtensionProblem:
    """0 → V → E → A → 0 with V elementary abelian 2, classified by φ: ₂A → V."""
    right: PresentedAbelianGroup
    left: PresentedAbelianGroup
    classifier: AbHom
    prime: int = 2

    def __post_init__(self):
        if not self.left.is_elementary(self.prime):
            raise ValueError(f"Left group {self.left.render()} is not elementary abelian of exponent {self.prime}")
        torsion, _ = p_torsion(self.right, self.prime)
        if self.classifier.domain.num_generators != torsion.num_generators:
            raise ValueError(f"Classifier domain has {self.classifier.domain.num_generators} generators, "
                             f"the {self.prime}-torsion of {self.right.render()} has {torsion.num_generators}")
        if self.classifier.codomain is not self.left:
            raise ValueError("Classifier codomain must be the left group")

    @classmethod
    def create(cls, right: PresentedAbelianGroup, left: PresentedAbelianGroup,
               images: Sequence[Sequence[int]], prime: int = 2) -> 'ElementaryTwoExtensionProblem':
        """Build the problem from the images of the ₚA generators, in left-group coordinates."""
        torsion, _ = p_torsion(right, prime)
        matrix = IntegerMatrix.from_columns([tuple(v) for v in images], left.num_generators)
        return cls(right, left, AbHom(torsion, left, matrix), prime)


@dataclass(frozen=True)
class ExtensionResult:
    middle: PresentedAbelianGroup
    verdict: Verdict
    inclusion: AbHom
    projection: AbHom


def build_extension(right: PresentedAbelianGroup, left: PresentedAbelianGroup,
                    images: Sequence[Sequence[int]], prime: int = 2) -> ExtensionResult:
    """Present E on the Smith generators of A and the generators of V.

    For a Smith generator ê_i of order d_i: d_i·ê_i = φ(τ_i) when p | d_i (τ_i = (d_i/p)·ê_i),
    d_i·ê_i = 0 otherwise; free summands carry no relation.
    """
    basis = [(i, vector, modulus) for i, vector, modulus in right.smith_basis()]
    nv = left.num_generators
    na = len(basis)
    size = na + nv
    columns: List[Vector] = []
    torsion_index = 0
    for k, (_, _, modulus) in enumerate(basis):
        if modulus == 0:
            continue
        column = [0] * size
        column[k] = modulus
        if modulus % prime == 0:
            for j, x in enumerate(images[torsion_index]):
                column[na + j] = -x
            torsion_index += 1
        columns.append(tuple(column))
    for column in left.relations.columns():
        columns.append((0,) * na + tuple(column))
    names = [f"a{k}" for k in range(na)] + [f"v{j}" for j in range(nv)]
    middle = PresentedAbelianGroup(names, IntegerMatrix.from_columns(columns, size))

    inclusion = AbHom(left, middle, IntegerMatrix.from_columns(
        [tuple(1 if r == na + j else 0 for r in range(size)) for j in range(nv)], size))
    projection = AbHom(middle, right, IntegerMatrix.from_columns(
        [vector for _, vector, _ in basis] + [(0,) * right.num_generators] * nv, right.num_generators))
    split = all(left.is_zero(v) for v in images)
    return ExtensionResult(middle, Verdict.SPLIT if split else Verdict.NON_SPLIT, inclusion, projection)


def classify_elementary_two_extension(problem: ElementaryTwoExtensionProblem) -> ExtensionResult:
    images = problem.classifier.matrix.columns()
    return build_extension(problem.right, problem.left, images, problem.prime)


def enumerate_extensions(right: PresentedAbelianGroup, left: PresentedAbelianGroup,
                         prime: int = 2) -> Dict[GroupInvariants, List[Tuple[Vector, ...]]]:
    """Every middle group reachable from a classifier ₚA → V, with the classifiers producing it."""
    torsion, _ = p_torsion(right, prime)
    t = torsion.num_generators
    nv = left.num_generators
    vectors = list(itertools.product(range(prime), repeat=nv))
    found: Dict[GroupInvariants, List[Tuple[Vector, ...]]] = {}
    for images in itertools.product(vectors, repeat=t):
        middle = build_extension(right, left, images, prime).middle
        found.setdefault(middle.invariants, []).append(images)
    return found


def maximal_fusion(right: PresentedAbelianGroup, prime: int) -> PresentedAbelianGroup:
    """Extension of A by ℤ/p fusing ℤ/p into the largest p-power cyclic summand of A.

    When A has no p-torsion every extension splits and the direct sum is returned.
    """
    left = PresentedAbelianGroup.elementary(1, prime)
    best, best_valuation = None, 0
    for k, (_, _, modulus) in enumerate(m for m in right.smith_basis() if m[2] and m[2] % prime == 0):
        valuation, q = 0, modulus
        while q % prime == 0:
            q //= prime
            valuation += 1
        if valuation > best_valuation:
            best, best_valuation = k, valuation
    torsion, _ = p_torsion(right, prime)
    images = [(1,) if k == best else (0,) for k in range(torsion.num_generators)]
    return build_extension(right, left, images, prime).middle
