"""Exception types shared across the package."""

from __future__ import annotations


class PentaformError(Exception):
    """Base class for every error raised by this package."""


class CoordinateError(PentaformError, ValueError):
    """A projection was asked for an empty, unknown or repeated coordinate."""


class UnknownSituationError(PentaformError, KeyError):
    pass


class UnknownNodeError(PentaformError, KeyError):
    pass


class NoUniqueRootError(PentaformError):
    """``W \\ Y`` is not a singleton. ``candidates`` holds the full set."""

    def __init__(self, candidates):
        self.candidates = frozenset(candidates)
        super().__init__(f"expected exactly one start node, found {sorted(self.candidates)}")


class AxiomViolationError(PentaformError):
    """An operation needed axioms the input does not satisfy."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        names = ", ".join(v.axiom.label for v in self.violations)
        super().__init__(f"axiom violation: {names}")


class PreconditionError(PentaformError):
    pass


class InvalidTreeError(PentaformError):
    pass


class InvalidGameError(PentaformError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(v.message for v in self.violations) or "invalid game")


class NotASubrootError(PentaformError):
    pass


class SeparationError(PentaformError):
    def __init__(self, message, verdict=None):
        self.verdict = verdict
        super().__init__(message)


class ChainError(PentaformError):
    """A sequence handed to ``union_chain`` is not nested or drifts its root."""

    def __init__(self, message, index):
        self.index = index
        super().__init__(message)


class SchemaError(PentaformError, ValueError):
    """A document does not match the file schema. ``path`` is a JSON path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
