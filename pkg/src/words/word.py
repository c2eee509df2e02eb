"""Reduced and cyclic words of a free group.

Words are immutable. Every operation returns a new freely reduced value, so
words can serve as dictionary keys in memoized searches.
"""

from dataclasses import dataclass
from itertools import groupby
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from src.utils.errors import AlphabetMismatchError, MissingImageError
from src.words.alphabet import Alphabet, Letter

ExponentVector = Tuple[int, ...]


def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    """Cancel adjacent inverse pairs with a single stack pass."""
    stack: List[Letter] = []
    for letter in letters:
        if stack and stack[-1].generator == letter.generator and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def _is_reduced(letters: Sequence[Letter]) -> bool:
    return all(
        not (a.generator == b.generator and a.sign == -b.sign)
        for a, b in zip(letters, letters[1:])
    )


def _format(alphabet: Alphabet, letters: Sequence[Letter]) -> str:
    parts = []
    for letter, run in groupby(letters):
        count = len(list(run))
        token = alphabet.token(letter)
        repeated = token * count
        powered = f"{token}^{count}"
        parts.append(powered if len(powered) < len(repeated) else repeated)
    return "".join(parts)


@dataclass(frozen=True)
class Word:
    """A freely reduced word over an alphabet.

    Attributes:
        alphabet: The generating set.
        letters: The reduced letter sequence.

    Example:
        >>> from src.words.parser import parse_word
        >>> w = parse_word("xyX", Alphabet.of("x", "y"))
        >>> len(w), str(w.inverse())
        (3, 'xYX')
    """

    alphabet: Alphabet
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if not _is_reduced(self.letters):
            object.__setattr__(self, "letters", free_reduce(self.letters))
        rank = self.alphabet.rank
        for letter in self.letters:
            if not 0 <= letter.generator < rank or letter.sign not in (1, -1):
                raise ValueError(f"Letter {letter} is not over alphabet {self.alphabet}")

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Word":
        return cls(alphabet, ())

    @classmethod
    def generator(cls, alphabet: Alphabet, index: int, sign: int = 1) -> "Word":
        return cls(alphabet, (Letter(index, sign),))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return _format(self.alphabet, self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def is_empty(self) -> bool:
        return not self.letters

    def inverse(self) -> "Word":
        return invert(self)

    def power(self, k: int) -> "Word":
        """Return the k-th power; negative k powers the inverse."""
        base = self if k >= 0 else self.inverse()
        return Word(self.alphabet, free_reduce(base.letters * abs(k)))

    def generators(self) -> set:
        return {letter.generator for letter in self.letters}


def _check_same(a: Alphabet, b: Alphabet) -> None:
    if a != b:
        raise AlphabetMismatchError(f"Alphabet mismatch: {a} vs {b}")


def concat(a: Word, b: Word) -> Word:
    """Freely reduced product a·b."""
    _check_same(a.alphabet, b.alphabet)
    return Word(a.alphabet, free_reduce(a.letters + b.letters))


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple(letter.inverse() for letter in reversed(w.letters)))


def canonical_rotation(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    """Lexicographically least rotation under the letter order."""
    if not letters:
        return ()
    seq = tuple(letters)
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word stored in canonical rotation.

    Two cyclic words are equal exactly when they are rotations of each other.
    Build one with ``CyclicWord.of(word)`` or through ``cyclic_reduce``.
    """

    alphabet: Alphabet
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = self.letters
        if not _is_reduced(letters) or (
            len(letters) > 1 and letters[0] == letters[-1].inverse()
        ):
            letters = _cyclic_core(free_reduce(letters))[0]
        object.__setattr__(self, "letters", canonical_rotation(letters))

    @classmethod
    def of(cls, word: Word) -> "CyclicWord":
        return cls(word.alphabet, word.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return _format(self.alphabet, self.letters)

    def as_word(self) -> Word:
        return Word(self.alphabet, self.letters)

    def inverse(self) -> "CyclicWord":
        return CyclicWord.of(invert(self.as_word()))

    def rotations(self) -> List[Word]:
        """Every rotation as a plain word, starting from the canonical one."""
        n = len(self.letters)
        return [Word(self.alphabet, self.letters[i:] + self.letters[:i]) for i in range(max(n, 1))]

    def period(self) -> int:
        """Length of the shortest root; equals the length unless a proper power."""
        n = len(self.letters)
        for p in range(1, n):
            if n % p == 0 and self.letters[p:] + self.letters[:p] == self.letters:
                return p
        return n

    def is_proper_power(self) -> bool:
        return 0 < self.period() < len(self.letters)

    def omits(self, generator: int) -> bool:
        return all(letter.generator != generator for letter in self.letters)

    def with_alphabet(self, alphabet: Alphabet, mapping: Mapping[int, int]) -> "CyclicWord":
        """Re-index letters into another alphabet through a generator map."""
        return CyclicWord(alphabet, tuple(Letter(mapping[l.generator], l.sign) for l in self.letters))


def _cyclic_core(letters: Tuple[Letter, ...]) -> Tuple[Tuple[Letter, ...], Tuple[Letter, ...]]:
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == letters[j].inverse():
        i += 1
        j -= 1
    return letters[i:j + 1], letters[:i]


def cyclic_reduce(w: Word) -> Tuple[CyclicWord, Word]:
    """Split w as conjugator · core · conjugator⁻¹.

    Returns:
        The canonical cyclic word of the core, and the conjugator such that
        ``w == conjugator * core * conjugator.inverse()`` where ``core`` is
        the unrotated middle segment of w.
    """
    core, conjugator = _cyclic_core(w.letters)
    return CyclicWord(w.alphabet, core), Word(w.alphabet, conjugator)


def exponent_vector(w) -> ExponentVector:
    """Signed letter count per generator. Accepts Word or CyclicWord."""
    counts = [0] * w.alphabet.rank
    for letter in w.letters:
        counts[letter.generator] += letter.sign
    return tuple(counts)


Images = Mapping[int, Word]


def substitute(w, images: Images, target: Optional[Alphabet] = None) -> Word:
    """Apply the homomorphism generator ↦ image to w.

    Args:
        w: Word or CyclicWord over the source alphabet.
        images: Image word per generator index of the source alphabet.
        target: Target alphabet; taken from the images when omitted.

    Returns:
        The freely reduced image.

    Raises:
        MissingImageError: If a generator of w has no image.
        AlphabetMismatchError: If images disagree on the target alphabet.
    """
    if target is None:
        if not images:
            if w.letters:
                raise MissingImageError("No images supplied")
            return Word(w.alphabet, ())
        target = next(iter(images.values())).alphabet
    for image in images.values():
        _check_same(image.alphabet, target)

    inverses: Dict[int, Tuple[Letter, ...]] = {}
    out: List[Letter] = []
    for letter in w.letters:
        image = images.get(letter.generator)
        if image is None:
            raise MissingImageError(
                f"No image for generator {w.alphabet.names[letter.generator]!r}"
            )
        if letter.sign > 0:
            out.extend(image.letters)
        else:
            inv = inverses.get(letter.generator)
            if inv is None:
                inv = inverses[letter.generator] = invert(image).letters
            out.extend(inv)
    return Word(target, free_reduce(out))


def identity_images(alphabet: Alphabet) -> Dict[int, Word]:
    return {g: Word.generator(alphabet, g) for g in range(alphabet.rank)}


def compose(outer: Images, inner: Images) -> Dict[int, Word]:
    """Images of ``outer ∘ inner``: apply inner first, then outer."""
    return {g: substitute(image, outer) for g, image in inner.items()}
