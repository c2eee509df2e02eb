"""Alphabets and signed letters of a free group."""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, NamedTuple, Tuple

from src.utils.errors import ParseError

_NAME_RE = re.compile(r"^[a-z][A-Za-z0-9_]*$")


class Letter(NamedTuple):
    """A generator index with a sign of +1 or -1.

    Tuple ordering gives the canonical letter order: generator index first,
    then the negative letter before the positive one.
    """

    generator: int
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


# A signed vertex of a Whitehead graph is the same pair as a letter.
SignedVertex = Letter


def validate_generator_name(name: str) -> Tuple[bool, str]:
    """Check a single generator name.

    Args:
        name: Candidate name.

    Returns:
        Tuple of (is_valid, error_message).

    Rules:
        - Must be nonempty
        - Must start with a lowercase ASCII letter
        - May continue with letters, digits and underscores
    """
    if not name:
        return False, "Generator name cannot be empty"
    if not _NAME_RE.match(name):
        return False, f"Generator name {name!r} must start with a lowercase letter and use only letters, digits and '_'"
    return True, ""


@dataclass(frozen=True)
class Alphabet:
    """An ordered list of free generators.

    The position of a name is the generator index used by letters. A name
    prints bare when it is a single character and in brackets otherwise;
    the inverse flips the case of the first character.

    Attributes:
        names: Generator names in index order.

    Example:
        >>> ab = Alphabet.of("x", "y")
        >>> ab.token(Letter(1, -1))
        'Y'
        >>> Alphabet.of("w0", "w1").token(Letter(0, -1))
        '[W0]'
    """

    names: Tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ParseError("Alphabet must contain at least one generator")
        folded = set()
        for name in self.names:
            ok, message = validate_generator_name(name)
            if not ok:
                raise ParseError(message)
            if name.lower() in folded:
                raise ParseError(f"Generator name {name!r} collides with another name")
            folded.add(name.lower())

    @classmethod
    def of(cls, *names: str) -> "Alphabet":
        return cls(tuple(names))

    @classmethod
    def from_list(cls, names: Iterable[str]) -> "Alphabet":
        return cls(tuple(names))

    @property
    def rank(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, name: str) -> int:
        """Return the generator index of ``name``.

        Raises:
            ParseError: If the name is not in the alphabet.
        """
        try:
            return self.names.index(name)
        except ValueError:
            raise ParseError(f"Unknown generator {name!r} for alphabet {list(self.names)}") from None

    def letters(self) -> List[Letter]:
        """All signed letters in canonical order."""
        return [Letter(g, s) for g in range(self.rank) for s in (-1, 1)]

    def token(self, letter: Letter) -> str:
        name = self.names[letter.generator]
        text = name if letter.sign > 0 else name[0].upper() + name[1:]
        return text if len(name) == 1 else f"[{text}]"

    def vertex_name(self, vertex: SignedVertex) -> str:
        """Name of a Whitehead-graph vertex, e.g. ``x1+``."""
        return f"{self.names[vertex.generator]}{'+' if vertex.sign > 0 else '-'}"

    def parse_vertex(self, text: str) -> SignedVertex:
        text = text.strip()
        if len(text) < 2 or text[-1] not in "+-":
            raise ParseError(f"Vertex {text!r} must look like '<generator>+' or '<generator>-'")
        return Letter(self.index(text[:-1]), 1 if text[-1] == "+" else -1)

    def without(self, generator: int) -> "Alphabet":
        """The alphabet with one generator removed, order otherwise kept."""
        return Alphabet(self.names[:generator] + self.names[generator + 1:])

    def to_list(self) -> List[str]:
        return list(self.names)

    def __str__(self) -> str:
        return ",".join(self.names)


def parse_alphabet(text: str) -> Alphabet:
    """Parse a comma-separated alphabet such as ``"x,y"``."""
    names = [part.strip() for part in text.split(",") if part.strip()]
    return Alphabet(tuple(names))
