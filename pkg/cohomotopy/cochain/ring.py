# cohomotopy\cohomotopy\cochain\ring.py

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..algebra import IntegerMatrix
from ..errors import DegreeError

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Polynomial = FrozenSet[Monomial]

# Degrees outside the window that still carry mod-2 data: w₂ lives in 2, w₃ in 3.
CHARACTERISTIC_DEGREES = (2, 3)


@dataclass(frozen=True)
class RingGenerator:
    name: str
    degree: int


@dataclass
class RingPresentation:
    """F₂[generators]/(g^e = 0), with Steenrod squares on generators given as monomial lists."""
    generators: List[RingGenerator]
    truncations: Dict[str, int]
    squares: Dict[Tuple[str, int], List[str]] = field(default_factory=dict)
    top: Optional[str] = None
    w2: Optional[List[str]] = None
    w3: Optional[List[str]] = None


class CohomologyRing:
    """Truncated polynomial ring over F₂ with Cartan-formula Steenrod squares.

    Sq^i on a generator g of degree m:
        i = 0      g
        i = m      g² unless given
        i > m      0
        i = 3 < m  Sq¹Sq²(g) unless given (Adem: Sq¹Sq² = Sq³)
        otherwise  the given value, else 0
    """

    def __init__(self, presentation: RingPresentation):
        self.presentation = presentation
        self.generators = list(presentation.generators)
        self.names = [g.name for g in self.generators]
        self.index = {name: k for k, name in enumerate(self.names)}
        self.degrees = [g.degree for g in self.generators]
        for name in presentation.truncations:
            if name not in self.index:
                raise ValueError(f"Truncation for unknown generator: {name}")
        self.bounds = [presentation.truncations.get(name) for name in self.names]
        self._given: Dict[Tuple[int, int], Polynomial] = {}
        for (name, i), terms in presentation.squares.items():
            if name not in self.index:
                raise ValueError(f"Square given for unknown generator: {name}")
            poly = self.parse_polynomial(terms)
            target = self.degrees[self.index[name]] + i
            for m in poly:
                if self.degree(m) != target:
                    raise DegreeError(f"Sq^{i}({name}) contains {self.monomial_name(m)} of degree "
                                      f"{self.degree(m)}, expected {target}")
            self._given[(self.index[name], i)] = poly
        self._memo: Dict[Tuple[int, Monomial], Polynomial] = {}
        self._basis: Dict[int, List[Monomial]] = {}

    # Monomials

    def parse_monomial(self, text: str) -> Monomial:
        exponents = [0] * len(self.names)
        text = text.strip()
        if text == "1":
            return tuple(exponents)
        for token in text.split("*"):
            name, _, power = token.strip().partition("^")
            if name not in self.index:
                raise ValueError(f"Unknown generator '{name}' in monomial '{text}'")
            exponents[self.index[name]] += int(power) if power else 1
        return tuple(exponents)

    def parse_polynomial(self, terms: Iterable[str]) -> Polynomial:
        result = set()
        for term in terms:
            m = self.parse_monomial(term)
            if not self.vanishes(m):
                result ^= {m}
        return frozenset(result)

    def monomial_name(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def vanishes(self, m: Monomial) -> bool:
        return any(bound is not None and e >= bound for e, bound in zip(m, self.bounds))

    def multiply(self, p: Polynomial, q: Polynomial) -> Polynomial:
        result = set()
        for a, b in itertools.product(p, q):
            m = tuple(x + y for x, y in zip(a, b))
            if not self.vanishes(m):
                result ^= {m}
        return frozenset(result)

    def basis(self, degree: int) -> List[Monomial]:
        """Nonzero monomials of the degree, in descending lexicographic order of exponents."""
        if degree not in self._basis:
            ranges = []
            for d, bound in zip(self.degrees, self.bounds):
                top = degree // d
                if bound is not None:
                    top = min(top, bound - 1)
                ranges.append(range(top + 1))
            found = [m for m in itertools.product(*ranges) if self.degree(m) == degree]
            self._basis[degree] = sorted(found, reverse=True)
        return self._basis[degree]

    def coordinates(self, p: Polynomial, degree: int) -> Tuple[int, ...]:
        basis = self.basis(degree)
        position = {m: k for k, m in enumerate(basis)}
        vector = [0] * len(basis)
        for m in p:
            if m not in position:
                raise DegreeError(f"{self.monomial_name(m)} is not a basis monomial of degree {degree}")
            vector[position[m]] ^= 1
        return tuple(vector)

    # Steenrod squares

    def _generator_square(self, k: int, i: int) -> Polynomial:
        unit = tuple(1 if j == k else 0 for j in range(len(self.names)))
        if i == 0:
            return frozenset({unit})
        if (k, i) in self._given:
            return self._given[(k, i)]
        m = self.degrees[k]
        if i == m:
            return self.multiply(frozenset({unit}), frozenset({unit}))
        if i > m or i != 3:
            return frozenset()
        return self.square(1, self.square(2, frozenset({unit})))

    def _square_monomial(self, i: int, m: Monomial) -> Polynomial:
        if i == 0:
            return frozenset({m})
        if not any(m):
            return frozenset()
        key = (i, m)
        if key in self._memo:
            return self._memo[key]
        j = next(k for k, e in enumerate(m) if e)
        rest = tuple(e - 1 if k == j else e for k, e in enumerate(m))
        result = set()
        # Cartan: Sq^i(g·rest) = Σ Sq^a(g)·Sq^{i−a}(rest)
        for a in range(i + 1):
            left = self._generator_square(j, a)
            if not left:
                continue
            right = self._square_monomial(i - a, rest)
            if right:
                result ^= set(self.multiply(left, right))
        self._memo[key] = frozenset(result)
        return self._memo[key]

    def square(self, i: int, p: Polynomial) -> Polynomial:
        result = set()
        for m in p:
            result ^= set(self._square_monomial(i, m))
        return frozenset(result)

    # Matrices

    def operation_matrix(self, steps: Sequence[int], degree: int) -> IntegerMatrix:
        """Matrix of Sq^{s_k}∘…∘Sq^{s_1} from `degree`, steps applied left to right."""
        target = degree + sum(steps)
        columns = []
        for m in self.basis(degree):
            p = frozenset({m})
            for s in steps:
                p = self.square(s, p)
            columns.append(self.coordinates(p, target))
        return IntegerMatrix.from_columns(columns, len(self.basis(target)))

    def cup_matrix(self, p: Polynomial, degree: int) -> IntegerMatrix:
        shift = {self.degree(m) for m in p}
        if len(shift) > 1:
            raise DegreeError("Cup factor is not homogeneous")
        target = degree + (shift.pop() if shift else 0)
        columns = [self.coordinates(self.multiply(p, frozenset({m})), target) for m in self.basis(degree)]
        return IntegerMatrix.from_columns(columns, len(self.basis(target)))


@dataclass
class RingIngestion:
    """Mod-2 part of a datum produced from a ring presentation."""
    ranks: Dict[int, int]
    basis: Dict[int, List[str]]
    maps: Dict[Tuple[str, int], IntegerMatrix]
    w2: Optional[Tuple[int, ...]] = None
    w3: Optional[Tuple[int, ...]] = None


def ingest_ring(presentation: RingPresentation, window: range, dimension: int) -> RingIngestion:
    """Ranks, Sq¹/Sq²/Sq⁴ and w-cup matrices on every degree of the window plus degrees 2 and 3."""
    ring = CohomologyRing(presentation)
    degrees = sorted(set(window) | set(CHARACTERISTIC_DEGREES))
    if presentation.top is not None:
        top = ring.parse_monomial(presentation.top)
        if ring.vanishes(top) or ring.degree(top) != dimension:
            raise DegreeError(f"Top monomial {presentation.top} must be nonzero of degree {dimension}")

    ranks = {d: len(ring.basis(d)) for d in degrees}
    basis = {d: [ring.monomial_name(m) for m in ring.basis(d)] for d in degrees}
    maps: Dict[Tuple[str, int], IntegerMatrix] = {}
    for d in degrees:
        for name, steps in (("sq1", (1,)), ("sq2", (2,)), ("sq4", (4,)), ("sq2sq1", (1, 2))):
            if d + sum(steps) in ranks:
                maps[(name, d)] = ring.operation_matrix(steps, d)

    w2 = w3 = None
    if presentation.w2 is not None:
        w2_poly = ring.parse_polynomial(presentation.w2)
        w2 = ring.coordinates(w2_poly, 2)
        for d in degrees:
            if d + 2 in ranks:
                maps[("cupW2", d)] = ring.cup_matrix(w2_poly, d) if w2_poly else IntegerMatrix.zeros(
                    ranks[d + 2], ranks[d])
    if presentation.w3 is not None:
        w3_poly = ring.parse_polynomial(presentation.w3)
        w3 = ring.coordinates(w3_poly, 3)
        for d in degrees:
            if d + 3 in ranks:
                maps[("cupW3", d)] = ring.cup_matrix(w3_poly, d) if w3_poly else IntegerMatrix.zeros(
                    ranks[d + 3], ranks[d])

    logger.info(f"[INGEST] ring with generators {ring.names}: ranks {ranks}")
    return RingIngestion(ranks=ranks, basis=basis, maps=maps, w2=w2, w3=w3)
