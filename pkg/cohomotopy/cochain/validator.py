# cohomotopy\cohomotopy\cochain\validator.py

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from ..algebra import (
    AbHom, IntegerMatrix, Subgroup, image_subgroup, kernel_subgroup, torsion_subgroup, unit_vector,
)
from ..algebra.matrix import Vector
from ..errors import DataError, DegreeError, MissingDataError
from .datum import CohomologyDatum
from .operations import operation_hom

logger = logging.getLogger(__name__)

RELATIONS = {
    "a": "Sq¹∘Sq¹ = 0",
    "b": "Sq¹ = ρ₂∘δ",
    "c": "δ∘ρ₂ = 0 and Bockstein exactness",
    "d": "Sq²∘Sq²∘ρ₂ = 0",
    "e": "Sq¹∘Sq⁴∘ρ₂ = Sq²∘Sq¹∘Sq²∘ρ₂",
    "f": "Wu formula and top-degree rank",
    "g": "Sq¹(w₂) = w₃",
    "structure": "structure tag matches w₂",
    "h": "Poincaré duality H_k ≅ H^{D−k}",
}


@dataclass
class Violation:
    code: str
    degree: Optional[int]
    witness: Optional[Vector]
    message: str

    @property
    def relation(self) -> str:
        return RELATIONS[self.code]

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "relation": self.relation,
            "degree": self.degree,
            "witness": None if self.witness is None else list(self.witness),
            "message": self.message,
        }


@dataclass
class ValidationReport:
    datum: str
    violations: List[Violation] = field(default_factory=list)
    checked: List[str] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> List[str]:
        return sorted({v.code for v in self.violations})

    def to_dict(self) -> dict:
        return {
            "datum": self.datum,
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
            "checked": self.checked,
            "skipped": self.skipped,
        }


def _first_difference(a: IntegerMatrix, b: IntegerMatrix, modulus: int) -> Optional[Vector]:
    """Unit vector of the first column where a and b differ mod `modulus`."""
    diff = (a - b).reduce(modulus)
    for j in range(diff.cols):
        if any(diff.column(j)):
            return unit_vector(a.cols, j)
    return None


class _Checker:
    def __init__(self, datum: CohomologyDatum):
        self.datum = datum
        self.report = ValidationReport(datum.name)

    def attempt(self, code: str, degree: Optional[int], check: Callable[[], None]):
        label = code if degree is None else f"{code}@{degree}"
        try:
            check()
        except (MissingDataError, DegreeError) as e:
            self.report.skipped.append(label)
            logger.debug(f"[VALIDATE] {label} skipped: {e}")
            return
        except DataError as e:
            self.fail(code, degree, None, str(e))
        self.report.checked.append(label)

    def fail(self, code: str, degree: Optional[int], witness: Optional[Vector], message: str):
        self.report.violations.append(Violation(code, degree, witness, message))
        logger.warning(f"[VALIDATE] {self.datum.name}: {RELATIONS[code]} fails in degree {degree}: {message}")

    def compare(self, code: str, degree: int, left: IntegerMatrix, right: IntegerMatrix, what: str):
        witness = _first_difference(left, right, 2)
        if witness is not None:
            self.fail(code, degree, witness, f"{what} differ on basis element {list(witness)}")

    # Relations

    def sq1_sq1(self, i: int):
        d = self.datum
        self.compare("a", i, d.matrix("sq1", i + 1) @ d.matrix("sq1", i),
                     IntegerMatrix.zeros(d.mod2_rank(i + 2), d.mod2_rank(i)), "Sq1 Sq1 and 0")

    def sq1_bockstein(self, i: int):
        d = self.datum
        self.compare("b", i, d.matrix("sq1", i), d.matrix("rho2", i + 1) @ d.matrix("bockstein", i),
                     "Sq1 and rho2 delta")

    def bockstein_exact(self, i: int):
        d = self.datum
        rho = d.hom("rho2", i)
        delta = d.hom("bockstein", i)
        composite = AbHom(rho.domain, delta.codomain, delta.matrix @ rho.matrix, check=False)
        for j, column in enumerate(composite.matrix.columns()):
            if not delta.codomain.is_zero(column):
                self.fail("c", i, unit_vector(rho.domain.num_generators, j), "delta rho2 is nonzero")
                return
        doubled = Subgroup(rho.domain, IntegerMatrix.identity(rho.domain.num_generators).scale(2))
        self._same("c", i, kernel_subgroup(rho), doubled, "ker rho2 and 2H")
        self._same("c", i, image_subgroup(rho), kernel_subgroup(delta), "im rho2 and ker delta")
        self._same("c", i, image_subgroup(delta), torsion_subgroup(delta.codomain, 2), "im delta and 2-torsion")

    def _same(self, code: str, degree: int, a: Subgroup, b: Subgroup, what: str):
        witness = a.witness_outside(b) or b.witness_outside(a)
        if witness is not None:
            self.fail(code, degree, witness, f"{what} differ at {list(witness)}")

    def sq2_sq2(self, i: int):
        d = self.datum
        composite = operation_hom(d, "Sq2", i + 2).matrix @ operation_hom(d, "Sq2Z", i).matrix
        self.compare("d", i, composite, IntegerMatrix.zeros(composite.rows, composite.cols), "Sq2 Sq2 rho2 and 0")

    def sq5(self, i: int):
        d = self.datum
        left = d.matrix("sq1", i + 4) @ operation_hom(d, "Sq4Z", i).matrix
        right = operation_hom(d, "Sq2Sq1", i + 2).matrix @ operation_hom(d, "Sq2Z", i).matrix
        self.compare("e", i, left, right, "Sq1 Sq4 rho2 and Sq2 Sq1 Sq2 rho2")

    def wu(self, i: int, operation: str, cup: str):
        d = self.datum
        self.compare("f", i, operation_hom(d, operation, i).matrix, d.matrix(cup, i), f"{operation} and {cup}")

    def top_class(self):
        d = self.datum
        if d.mod2_rank(d.dimension) != 1:
            self.fail("f", d.dimension, None, f"top mod 2 cohomology has rank {d.mod2_rank(d.dimension)}, not 1")

    def w3_relation(self):
        d = self.datum
        if d.w3 is None or (d.w2 is None and not d.structure.is_spin):
            raise MissingDataError("w2 or w3 missing")
        if d.has_map("sq1", 2) and d.w2 is not None:
            sq1_w2 = d.matrix("sq1", 2).apply(d.w2)
        elif d.w2_is_zero():
            sq1_w2 = tuple(0 for _ in d.w3)
        else:
            raise MissingDataError("Sq1 on H^2 missing")
        if len(sq1_w2) != len(d.w3):
            raise DataError(f"w3 has length {len(d.w3)}, Sq1 w2 has length {len(sq1_w2)}")
        if any((a - b) % 2 for a, b in zip(sq1_w2, d.w3)):
            self.fail("g", 3, tuple(d.w3), f"Sq1 w2 = {list(sq1_w2)} but w3 = {list(d.w3)}")

    def structure_tag(self):
        d = self.datum
        if d.structure.is_spin and d.w2 is not None and any(x % 2 for x in d.w2):
            self.fail("structure", 2, tuple(d.w2), f"{d.structure.value} tag with nonzero w2")

    def poincare(self):
        d = self.datum
        if d.homology is None:
            raise MissingDataError("no homology block")
        for k, group in ((1, d.homology.h1), (2, d.homology.h2), (3, d.homology.h3)):
            dual = d.dimension - k
            if dual not in d.integral:
                continue
            if not group.isomorphic(d.integral[dual]):
                self.fail("h", dual, None, f"H_{k} = {group.render()} but H^{dual} = {d.integral[dual].render()}")


def validate_datum(datum: CohomologyDatum, homology: bool = True) -> ValidationReport:
    """Check the structural identities every cohomology datum must satisfy."""
    checker = _Checker(datum)
    degrees = sorted(set(datum.mod2) | set(datum.integral))
    for i in degrees:
        checker.attempt("a", i, lambda: checker.sq1_sq1(i))
        checker.attempt("b", i, lambda: checker.sq1_bockstein(i))
        if i in datum.integral:
            checker.attempt("c", i, lambda: checker.bockstein_exact(i))
            checker.attempt("d", i, lambda: checker.sq2_sq2(i))
            checker.attempt("e", i, lambda: checker.sq5(i))

    if datum.structure.is_manifold:
        top = datum.dimension
        for i in (top - 3, top - 2):
            checker.attempt("f", i, lambda: checker.wu(i, "Sq2", "cupW2"))
        checker.attempt("f", top - 3, lambda: checker.wu(top - 3, "Sq2Sq1", "cupW3"))
        checker.attempt("f", top, checker.top_class)
        checker.attempt("g", None, checker.w3_relation)
        if homology:
            checker.attempt("h", None, checker.poincare)
    checker.attempt("structure", None, checker.structure_tag)

    report = checker.report
    logger.info(f"[VALIDATE] {datum.name}: {len(report.checked)} checked, {len(report.skipped)} skipped, "
                f"{len(report.violations)} violations")
    return report
