# cohomotopy\cohomotopy\engines\types.py

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra import GroupInvariants, IntegerMatrix, PresentedAbelianGroup, Verdict

Assignment = Dict[str, int]


class Provenance(Enum):
    COMPUTED = "computed"
    FORCED = "forced"
    OVERRIDE = "override"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Parameter:
    """A 0/1 parameter of a result; value None means both values are carried as branches."""
    name: str
    value: Optional[int]
    provenance: Provenance
    reason: str = ""

    @classmethod
    def computed(cls, name: str, value: int, reason: str = "") -> 'Parameter':
        return cls(name, int(value), Provenance.COMPUTED, reason)

    @classmethod
    def forced(cls, name: str, value: int, reason: str) -> 'Parameter':
        return cls(name, int(value), Provenance.FORCED, reason)

    @classmethod
    def override(cls, name: str, value: int, reason: str = "declared in overrides") -> 'Parameter':
        return cls(name, int(value), Provenance.OVERRIDE, reason)

    @classmethod
    def unknown(cls, name: str, reason: str = "") -> 'Parameter':
        return cls(name, None, Provenance.UNKNOWN, reason)

    @property
    def known(self) -> bool:
        return self.value is not None

    def values(self) -> Tuple[int, ...]:
        return (self.value,) if self.known else (0, 1)

    def to_dict(self) -> dict:
        return {"name": self.name, "value": self.value, "provenance": self.provenance.value, "reason": self.reason}


def exact_accounting(left: GroupInvariants, middle: GroupInvariants, right: GroupInvariants) -> bool:
    """Orders multiply for finite outer terms; free ranks add otherwise."""
    if middle.free_rank != left.free_rank + right.free_rank:
        return False
    if left.order is not None and right.order is not None:
        return middle.order == left.order * right.order
    return True


def _group_dict(g: Optional[PresentedAbelianGroup]) -> Optional[dict]:
    return None if g is None else g.invariants.to_dict()


@dataclass
class SESBranch:
    """0 → left → middle → right → 0 under one assignment of the report's unknown parameters.

    When the middle is not determined, `bounds` holds the split and maximal-fusion candidates.
    """
    assumptions: Assignment
    left: PresentedAbelianGroup
    middle: Optional[PresentedAbelianGroup]
    right: PresentedAbelianGroup
    verdict: Verdict
    bounds: Tuple[PresentedAbelianGroup, ...] = ()
    candidates: Optional[List[GroupInvariants]] = None
    note: str = ""

    def exact(self) -> bool:
        groups = [self.middle] if self.middle is not None else list(self.bounds)
        return all(exact_accounting(self.left.invariants, g.invariants, self.right.invariants) for g in groups)

    def label(self) -> str:
        if not self.assumptions:
            return "always"
        return ", ".join(f"{k}={v}" for k, v in sorted(self.assumptions.items()))

    def to_dict(self) -> dict:
        result = {
            "assumptions": dict(sorted(self.assumptions.items())),
            "left": _group_dict(self.left),
            "middle": _group_dict(self.middle),
            "right": _group_dict(self.right),
            "verdict": self.verdict.value,
        }
        if self.bounds:
            result["bounds"] = [_group_dict(g) for g in self.bounds]
        if self.candidates is not None:
            result["candidates"] = [c.to_dict() for c in self.candidates]
        if self.note:
            result["note"] = self.note
        return result


@dataclass
class ParametricBranch:
    assumptions: Assignment
    group: Optional[PresentedAbelianGroup]
    status: Verdict
    bounds: Tuple[PresentedAbelianGroup, ...] = ()

    def to_dict(self) -> dict:
        result = {
            "assumptions": dict(sorted(self.assumptions.items())),
            "invariants": _group_dict(self.group),
            "extensionStatus": self.status.value,
        }
        if self.bounds:
            result["bounds"] = [_group_dict(g) for g in self.bounds]
        return result


@dataclass
class ParametricGroup:
    """A group as a function of finitely many 0/1 parameters."""
    parameters: List[Parameter]
    branches: List[ParametricBranch]

    @classmethod
    def fixed(cls, group: PresentedAbelianGroup, status: Verdict = Verdict.SPLIT,
              parameters: Sequence[Parameter] = ()) -> 'ParametricGroup':
        return cls(list(parameters), [ParametricBranch({}, group, status)])

    @property
    def is_determined(self) -> bool:
        return len(self.branches) == 1 and self.branches[0].group is not None

    def value(self, **assignment: int) -> Optional[PresentedAbelianGroup]:
        """The group under an assignment of every branching parameter."""
        for branch in self.branches:
            if all(assignment.get(k) == v for k, v in branch.assumptions.items()):
                return branch.group
        raise KeyError(f"No branch matches {assignment}")

    @property
    def group(self) -> PresentedAbelianGroup:
        if not self.is_determined:
            raise ValueError("Group depends on unknown parameters: "
                             f"{[p.name for p in self.parameters if not p.known]}")
        return self.branches[0].group

    def render(self) -> str:
        if self.is_determined:
            return self.group.render()
        parts = []
        for branch in self.branches:
            shown = branch.group.render() if branch.group is not None else "undetermined"
            parts.append(f"[{', '.join(f'{k}={v}' for k, v in sorted(branch.assumptions.items()))}] {shown}")
        return "; ".join(parts)

    def to_dict(self) -> dict:
        return {
            "parameters": [p.to_dict() for p in self.parameters],
            "branches": [b.to_dict() for b in self.branches],
        }


@dataclass
class SESReport:
    """A computed short exact sequence with its splitting verdict and audit data."""
    name: str
    parameters: List[Parameter]
    branches: List[SESBranch]
    classifier: Optional[IntegerMatrix] = None
    checks: Dict[str, Optional[bool]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def single(self) -> SESBranch:
        if len(self.branches) != 1:
            raise ValueError(f"{self.name} has {len(self.branches)} branches")
        return self.branches[0]

    @property
    def middle(self) -> PresentedAbelianGroup:
        branch = self.single
        if branch.middle is None:
            raise ValueError(f"The middle group of {self.name} is undetermined")
        return branch.middle

    @property
    def verdict(self) -> Verdict:
        return self.single.verdict

    def exact(self) -> bool:
        return all(b.exact() for b in self.branches)

    def as_parametric(self) -> ParametricGroup:
        return ParametricGroup(list(self.parameters), [
            ParametricBranch(dict(b.assumptions), b.middle, b.verdict, b.bounds) for b in self.branches
        ])

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": [p.to_dict() for p in self.parameters],
            "branches": [b.to_dict() for b in self.branches],
            "classifier": None if self.classifier is None else self.classifier.to_lists(),
            "checks": dict(sorted(self.checks.items())),
            "notes": list(self.notes),
            "exact": self.exact(),
        }
