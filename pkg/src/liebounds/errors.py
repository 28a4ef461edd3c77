"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Sequence


class LieBoundsError(Exception):
    """Base class for all errors raised by liebounds."""


class ConstructionError(LieBoundsError, ValueError):
    """Invalid (type, rank) combination or malformed structural input."""


class DomainError(LieBoundsError, ValueError):
    """Argument is outside the domain of the operation (e.g. not a root)."""


class PreconditionError(LieBoundsError, ValueError):
    """A documented precondition of the operation does not hold."""


class UnsupportedInputError(LieBoundsError, ValueError):
    """The operation is not defined for this kind of input."""


class ScaleLimitError(LieBoundsError, ValueError):
    """The computation would exceed the documented size limit."""


class IdentificationError(LieBoundsError, LookupError):
    """A subalgebra signature could not be matched against the catalogue."""


class CatalogueSchemaError(LieBoundsError, ValueError):
    """The catalogue file violates the documented schema.

    ``path`` locates the offending field, e.g. ``"record[3].mult.long"``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class NotTabulatedError(LieBoundsError, LookupError):
    """The requested invariant is not stored for this family or parameter."""


class GroupSpecError(LieBoundsError, ValueError):
    """Base class for group-spec parse failures.

    ``offset`` is the byte offset into the input where the problem was
    detected and ``expected`` lists the tokens that would have been accepted.
    """

    kind = "syntax"

    def __init__(self, message: str, text: str, offset: int, expected: Sequence[str] = ()):
        self.text = text
        self.offset = offset
        self.expected = tuple(expected)
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at offset {offset} in {text!r}{detail}")


class SpecSyntaxError(GroupSpecError):
    kind = "syntax"


class UnknownFamilyError(GroupSpecError):
    kind = "unknown-family"


class ArityError(GroupSpecError):
    kind = "arity"


class ParameterRangeError(GroupSpecError):
    kind = "range"


class ParityError(GroupSpecError):
    kind = "parity"
