"""Exception types shared across the package."""

from __future__ import annotations


class GraphInputError(ValueError):
    """Malformed graph input: bad construction data or an unparsable file.

    Parse errors carry a location when one is known (``offset`` for byte
    formats, ``line`` for line-oriented formats).
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = ""
        if offset is not None:
            where = f" (byte offset {offset})"
        elif line is not None:
            where = f" (line {line})"
        super().__init__(message + where)
        self.offset = offset
        self.line = line


class DisconnectedGraphError(ValueError):
    """A metric (radius, diameter, center, ...) was requested on a graph
    where it is undefined: disconnected or empty input."""


class PreconditionError(ValueError):
    """An operation was called outside its stated hypothesis class."""


class CapExceededError(ValueError):
    """An enumeration request exceeded the configured vertex-count cap."""


class SpecSyntaxError(ValueError):
    """A family-spec string does not match the spec grammar.

    ``position`` is the 0-based index of the offending character, usable
    for caret diagnostics.
    """

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.text = text
        self.position = position


class CharacterizationError(RuntimeError):
    """A structural fact that every input in the hypothesis class must
    satisfy failed to hold.  Raised instead of guessing: such an input
    would contradict one of the verified characterizations."""
