"""Exception types shared across the package.

Exit-code mapping used by the CLI: InvalidInput and ParseError map to
exit code 1, ResourceLimit to exit code 2.
"""


class UnitGroupsError(Exception):
    """Base class for all package errors."""


class InvalidInputError(UnitGroupsError, ValueError):
    """An argument violates a documented precondition."""


class ResourceLimitError(UnitGroupsError):
    """A configured size/time cap would be exceeded; nothing was computed."""


class ParseError(InvalidInputError):
    """Ring-spec or polynomial text failed to parse.

    Carries the 0-based position in the input and a short description of
    what was expected there.
    """

    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        super().__init__(f"parse error at position {pos}: expected {expected} "
                         f"(near {text[pos:pos + 12]!r})")


class InconsistencyError(InvalidInputError):
    """Element-order counts do not describe any finite abelian group."""


class UnsupportedSpecError(UnitGroupsError):
    """No closed-form unit-group formula for this ring spec; use brute force."""


class NotFoundError(UnitGroupsError):
    """An expected witness was not found within the searched range."""
