# cohomotopy\cohomotopy\reports\document.py

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ..algebra import GroupInvariants, PresentedAbelianGroup
from ..cochain import CohomologyDatum, ValidationReport
from ..utils.config import SchemaConstants


def file_digest(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def to_jsonable(value: Any) -> Any:
    """Plain JSON data from results, reports and groups."""
    if isinstance(value, PresentedAbelianGroup):
        return value.invariants.to_dict()
    if isinstance(value, GroupInvariants):
        return value.to_dict()
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


@dataclass
class ReportDocument:
    """Everything one command produced for one input, serialised deterministically."""
    command: str
    source: Optional[str] = None
    digest: Optional[str] = None
    datum: Optional[dict] = None
    validation: Optional[dict] = None
    results: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    @classmethod
    def for_datum(cls, command: str, datum: CohomologyDatum, path: Optional[Path] = None,
                  validation: Optional[ValidationReport] = None) -> 'ReportDocument':
        return cls(
            command=command,
            source=None if path is None else Path(path).name,
            digest=None if path is None else file_digest(path),
            datum=datum.summary(),
            validation=None if validation is None else validation.to_dict(),
        )

    def add(self, key: str, value: Any) -> 'ReportDocument':
        self.results[key] = to_jsonable(value)
        return self

    def to_dict(self) -> dict:
        result = {
            "schemaVersion": SchemaConstants.SCHEMA_VERSION,
            "command": self.command,
            "input": {"file": self.source, "sha256": self.digest},
            "datum": self.datum,
            "validation": self.validation,
            "results": self.results,
        }
        if self.error is not None:
            result["error"] = self.error
        return result


def dumps(documents: Sequence[ReportDocument]) -> str:
    """One document as an object, a batch as a list; sorted keys, no timing."""
    payload: Any = [d.to_dict() for d in documents]
    if len(documents) == 1:
        payload = payload[0]
    return json.dumps(payload, sort_keys=True, indent=SchemaConstants.JSON_INDENT, ensure_ascii=False) + "\n"


def write_documents(documents: List[ReportDocument], path: Path):
    Path(path).write_text(dumps(documents), encoding="utf-8")
