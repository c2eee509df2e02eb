"""Exception hierarchy for the certification toolkit.

Every error raised on purpose by the library derives from ``VhkError``. Each
class also subclasses ``ValueError`` so that callers catching the builtin keep
working. Negative mathematical outcomes (a separable system, a failed search,
an uncertified report) are returned as values, never raised.
"""


class VhkError(Exception):
    """Base class for all library errors."""
    pass


class ParseError(VhkError, ValueError):
    """Malformed word, alphabet or move text.

    Attributes:
        text: The input being parsed.
        position: Character offset of the failure, if known.
    """

    def __init__(self, message: str, text: str = "", position: int = -1):
        if position >= 0:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)
        self.text = text
        self.position = position


class AlphabetMismatchError(VhkError, ValueError):
    """Two values were combined over different alphabets."""
    pass


class MissingImageError(VhkError, ValueError):
    """A substitution has no image for some generator."""
    pass


class InvalidMoveError(VhkError, ValueError):
    """A Whitehead move violates its construction constraints."""
    pass


class WeightError(VhkError, ValueError):
    """Weights are underdetermined or do not map onto Z/m."""
    pass


class LiftError(VhkError, ValueError):
    """A word does not lift to a closed loop in the cover."""
    pass


class SlopeError(VhkError, ValueError):
    """Invalid slope, or a slope that does not lift."""
    pass


class CutError(VhkError, ValueError):
    """Cutting along a generator that some word still uses."""
    pass


class SpecValidationError(VhkError, ValueError):
    """A splitting description failed validation."""
    pass


class FixtureError(VhkError, ValueError):
    """A fixture file is missing or malformed."""
    pass


class ReportFormatError(VhkError, ValueError):
    """Unknown report output format."""
    pass


class ConfigError(VhkError, ValueError):
    """Invalid configuration value."""
    pass


class EmptyInputError(VhkError, ValueError):
    """An operation that needs at least one word received none."""
    pass


class UnsupportedCoverError(VhkError, ValueError):
    """No certificate pipeline exists for the requested cover or theorem."""
    pass
