"""Exceptions.

Classes
-------

- CapacityError
- CpsLatticeError
- InputError
- ModelValidationError

"""
from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .model import Diagnostic

__all__ = [
    "CapacityError",
    "CpsLatticeError",
    "InputError",
    "ModelValidationError",
]


class CpsLatticeError(Exception):
    """Base class of all errors raised by cpslattice."""


class InputError(CpsLatticeError, ValueError):
    """An input refers to unknown identifiers or is malformed.

    Attributes
    ----------
    path : str, optional
        JSON-pointer-style location of a schema violation.
    line : int, optional
        One-based line of a syntax error.
    column : int, optional
        One-based column of a syntax error.

    """

    def __init__(
        self,
        message: str,
        path: str = None,
        line: int = None,
        column: int = None,
    ):
        super().__init__(message)
        self.path = path
        self.line = line
        self.column = column


class CapacityError(CpsLatticeError, RuntimeError):
    """An exhaustive enumeration would exceed its size guard."""


class ModelValidationError(InputError):
    """A CPS model failed validation.

    Attributes
    ----------
    diagnostics : sequence of :class:`cpslattice.Diagnostic`
        Error-level diagnostics of the rejected model.

    """

    def __init__(self, diagnostics: Sequence["Diagnostic"]):
        self.diagnostics = tuple(diagnostics)
        lines = [f"{d.code} {d.subject}: {d.message}" for d in diagnostics]
        super().__init__("Invalid model:\n  " + "\n  ".join(lines))
