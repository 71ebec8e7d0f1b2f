# cohomotopy\cohomotopy\errors.py

from typing import Optional


class CohomotopyError(ValueError):
    """Base class for every error raised by the library."""


class ContainmentError(CohomotopyError):
    """A subgroup that must lie inside another does not."""


class DegreeError(CohomotopyError):
    """A degree outside the datum's window, or a value of the wrong degree."""


class MissingDataError(CohomotopyError):
    """A map or block needed by the computation was not supplied."""


class DataError(CohomotopyError):
    """Supplied data contradicts a structural identity (e.g. Bockstein exactness)."""


class HypothesisError(CohomotopyError):
    """A hypothesis of the theorem being applied does not hold."""


class DispatchError(CohomotopyError):
    """The manifold case cannot be decided from the supplied data."""


class TagError(CohomotopyError):
    """The structure tag does not fit the requested computation."""


class InconsistentInputError(CohomotopyError):
    """User-supplied tri-states contradict each other."""


class RangeError(CohomotopyError):
    """A stem, codimension or degree is outside the supported range."""


class ParseError(CohomotopyError):
    """Malformed JSON or a schema violation."""

    def __init__(self, message: str, field: Optional[str] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        self.field = field
        self.line = line
        self.column = column
        context = []
        if field:
            context.append(f"field '{field}'")
        if line is not None:
            context.append(f"line {line}, column {column}")
        if context:
            message = f"{message} ({', '.join(context)})"
        super().__init__(message)
