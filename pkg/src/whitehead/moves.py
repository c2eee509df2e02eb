"""Whitehead automorphisms of a free group.

Type II moves act by the convention

    x ↦ [a⁻¹ if x⁻¹ ∈ A] · x · [a if x ∈ A],    a ↦ a,

for every generator x other than the generator of the pivot a. Here a
positive letter x is read as the vertex (x, +) and x⁻¹ as (x, −). The
inverse of (A, a) is ((A ∖ {a}) ∪ {a⁻¹}, a⁻¹). Type I moves permute the
generators with sign flips.
"""

import logging
import re
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from src.utils.errors import AlphabetMismatchError, InvalidMoveError, ParseError
from src.words.alphabet import Alphabet, Letter, SignedVertex
from src.words.parser import parse_word
from src.words.word import CyclicWord, Word, substitute

logger = logging.getLogger(__name__)

TYPE_ONE = "I"
TYPE_TWO = "II"


@dataclass(frozen=True)
class WhiteheadMove:
    """A Type I or Type II Whitehead automorphism on a rank-``rank`` basis.

    Build moves with ``type_two`` or ``type_one``; both validate their
    arguments.

    Attributes:
        kind: ``"I"`` or ``"II"``.
        rank: Rank of the free group acted on.
        subset: The set A of a Type II move.
        pivot: The letter a of a Type II move.
        permutation: Target generator per generator, Type I only.
        flips: Sign (+1/-1) per generator, Type I only.

    Example:
        >>> move = WhiteheadMove.type_two(2, {Letter(0, 1), Letter(1, 1)}, Letter(0, 1))
        >>> move.inverse().pivot
        Letter(generator=0, sign=-1)
    """

    kind: str
    rank: int
    subset: FrozenSet[SignedVertex] = frozenset()
    pivot: Optional[SignedVertex] = None
    permutation: Tuple[int, ...] = ()
    flips: Tuple[int, ...] = ()

    @classmethod
    def type_two(cls, rank: int, subset, pivot: SignedVertex) -> "WhiteheadMove":
        subset = frozenset(Letter(*v) for v in subset)
        pivot = Letter(*pivot)
        for vertex in subset | {pivot}:
            if not 0 <= vertex.generator < rank or vertex.sign not in (1, -1):
                raise InvalidMoveError(f"Vertex {vertex} is outside rank {rank}")
        if pivot not in subset:
            raise InvalidMoveError("Type II move requires a ∈ A")
        if pivot.inverse() in subset:
            raise InvalidMoveError("Type II move requires a⁻¹ ∉ A")
        return cls(kind=TYPE_TWO, rank=rank, subset=subset, pivot=pivot)

    @classmethod
    def type_one(cls, permutation: Sequence[int], flips: Optional[Sequence[int]] = None) -> "WhiteheadMove":
        rank = len(permutation)
        flips = tuple(flips) if flips is not None else (1,) * rank
        if sorted(permutation) != list(range(rank)):
            raise InvalidMoveError(f"{list(permutation)} is not a permutation of 0..{rank - 1}")
        if len(flips) != rank or any(s not in (1, -1) for s in flips):
            raise InvalidMoveError("Type I flips must be one ±1 per generator")
        return cls(kind=TYPE_ONE, rank=rank, permutation=tuple(permutation), flips=flips)

    def is_identity(self) -> bool:
        if self.kind == TYPE_ONE:
            return self.permutation == tuple(range(self.rank)) and all(s == 1 for s in self.flips)
        return self.subset == {self.pivot}

    def inverse(self) -> "WhiteheadMove":
        if self.kind == TYPE_ONE:
            perm = [0] * self.rank
            flips = [1] * self.rank
            for g, (target, sign) in enumerate(zip(self.permutation, self.flips)):
                perm[target] = g
                flips[target] = sign
            return WhiteheadMove.type_one(perm, flips)
        subset = (self.subset - {self.pivot}) | {self.pivot.inverse()}
        return WhiteheadMove.type_two(self.rank, subset, self.pivot.inverse())

    def images(self, alphabet: Alphabet) -> Dict[int, Word]:
        """Generator images of this automorphism over ``alphabet``."""
        if alphabet.rank != self.rank:
            raise AlphabetMismatchError(f"Move of rank {self.rank} used with alphabet {alphabet}")
        if self.kind == TYPE_ONE:
            return {
                g: Word(alphabet, (Letter(target, sign),))
                for g, (target, sign) in enumerate(zip(self.permutation, self.flips))
            }
        a = self.pivot
        images = {}
        for g in range(self.rank):
            if g == a.generator:
                images[g] = Word(alphabet, (Letter(g, 1),))
                continue
            letters = []
            if Letter(g, -1) in self.subset:
                letters.append(a.inverse())
            letters.append(Letter(g, 1))
            if Letter(g, 1) in self.subset:
                letters.append(a)
            images[g] = Word(alphabet, tuple(letters))
        return images

    def format(self, alphabet: Alphabet) -> str:
        """Text form, e.g. ``({x,Y},x)`` or ``I(y,X)``."""
        if self.kind == TYPE_ONE:
            tokens = [alphabet.token(Letter(t, s)) for t, s in zip(self.permutation, self.flips)]
            return f"I({','.join(tokens)})"
        members = ",".join(alphabet.token(v) for v in sorted(self.subset))
        return f"({{{members}}},{alphabet.token(self.pivot)})"

    def to_dict(self, alphabet: Alphabet) -> Dict:
        return {"kind": self.kind, "move": self.format(alphabet)}


_TYPE_TWO_RE = re.compile(r"^\(\{(?P<subset>[^}]*)\},(?P<pivot>[^)]+)\)$")
_TYPE_ONE_RE = re.compile(r"^I\((?P<images>[^)]*)\)$")


def _single_letter(token: str, alphabet: Alphabet) -> Letter:
    word = parse_word(token, alphabet)
    if len(word) != 1:
        raise ParseError(f"{token!r} is not a single letter")
    return word.letters[0]


def parse_move(text: str, alphabet: Alphabet) -> WhiteheadMove:
    """Parse ``({x,Y},x)`` (Type II) or ``I(y,X)`` (Type I).

    Raises:
        ParseError: On malformed text.
        InvalidMoveError: If the parsed move violates its constraints.
    """
    compact = re.sub(r"\s+", "", text)
    match = _TYPE_TWO_RE.match(compact)
    if match:
        members = [t for t in match.group("subset").split(",") if t]
        subset = {_single_letter(t, alphabet) for t in members}
        return WhiteheadMove.type_two(alphabet.rank, subset, _single_letter(match.group("pivot"), alphabet))
    match = _TYPE_ONE_RE.match(compact)
    if match:
        letters = [_single_letter(t, alphabet) for t in match.group("images").split(",") if t]
        if len(letters) != alphabet.rank:
            raise ParseError(f"Type I move needs {alphabet.rank} images, got {len(letters)}")
        return WhiteheadMove.type_one([l.generator for l in letters], [l.sign for l in letters])
    raise ParseError("Move must look like '({x,Y},x)' or 'I(y,X)'", text, 0)


def _move_order(move: WhiteheadMove):
    return (len(move.subset), move.pivot, sorted(move.subset))


def enumerate_moves(alphabet: Alphabet, pruned: bool = True) -> Iterator[WhiteheadMove]:
    """Type II moves in deterministic order (by |A|, then a, then A).

    Unpruned, every pair (A, a) with a ∈ A and a⁻¹ ∉ A appears:
    2r · 2^(2r-2) moves for rank r. Pruning keeps a positive pivot only,
    since (A, a) and (complement of A, a⁻¹) differ by an inner automorphism,
    and drops the identity A = {a} and the inner move A = all ∖ {a⁻¹}. That
    leaves r · (2^(2r-2) - 2) moves.
    """
    rank = alphabet.rank
    letters = alphabet.letters()
    moves = []
    for pivot in letters:
        if pruned and pivot.sign < 0:
            continue
        others = [v for v in letters if v.generator != pivot.generator]
        for size in range(len(others) + 1):
            for chosen in combinations(others, size):
                subset = frozenset(chosen) | {pivot}
                if pruned and (size == 0 or size == len(others)):
                    continue
                moves.append(WhiteheadMove.type_two(rank, subset, pivot))
    moves.sort(key=_move_order)
    return iter(moves)


def enumerate_type_one(alphabet: Alphabet) -> Iterator[WhiteheadMove]:
    """All non-identity signed permutations of the generators."""
    rank = alphabet.rank
    for perm in permutations(range(rank)):
        for flips in product((1, -1), repeat=rank):
            move = WhiteheadMove.type_one(perm, flips)
            if not move.is_identity():
                yield move


def _check_words(words: Sequence[CyclicWord], rank: int) -> Optional[Alphabet]:
    alphabets = {w.alphabet for w in words}
    if len(alphabets) > 1:
        raise AlphabetMismatchError("Words are over different alphabets")
    alphabet = next(iter(alphabets), None)
    if alphabet is not None and alphabet.rank != rank:
        raise AlphabetMismatchError(f"Move of rank {rank} used with alphabet {alphabet}")
    return alphabet


def apply_move(move: WhiteheadMove, words: Sequence[CyclicWord],
               alphabet: Optional[Alphabet] = None) -> Tuple[List[CyclicWord], Dict[int, Word]]:
    """Apply a move to every word of a system.

    Returns:
        The cyclically reduced images and the automorphism as generator
        images. Substituting the images into the inputs and cyclically
        reducing reproduces the returned words.
    """
    alphabet = _check_words(words, move.rank) or alphabet
    if alphabet is None:
        raise AlphabetMismatchError("Cannot infer the alphabet of an empty system")
    images = move.images(alphabet)
    return [CyclicWord.of(substitute(w, images)) for w in words], images


def total_length(words: Sequence[CyclicWord]) -> int:
    return sum(len(w) for w in words)


def length_change(move: WhiteheadMove, words: Sequence[CyclicWord]) -> int:
    """Change of total cyclic length, computed by applying the move."""
    moved, _ = apply_move(move, words)
    return total_length(moved) - total_length(words)


def minimize(words: Sequence[CyclicWord]) -> Tuple[List[CyclicWord], List[WhiteheadMove]]:
    """Greedy descent: apply the first strictly shortening move until none exists.

    Returns:
        The minimized system and the moves applied, in order.
    """
    current = list(words)
    trace: List[WhiteheadMove] = []
    if not current:
        return current, trace
    alphabet = current[0].alphabet
    length = total_length(current)
    improved = True
    while improved:
        improved = False
        for move in enumerate_moves(alphabet):
            moved, _ = apply_move(move, current)
            new_length = total_length(moved)
            if new_length < length:
                logger.debug("minimize: %s shortens %d -> %d", move.format(alphabet), length, new_length)
                current, length = moved, new_length
                trace.append(move)
                improved = True
                break
    return current, trace
