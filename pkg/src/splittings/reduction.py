"""Weak-reduction search and cutting along omitted generators."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.utils.errors import AlphabetMismatchError, CutError, EmptyInputError
from src.whitehead.decision import OmissionWitness, omission_search, omits_generator
from src.whitehead.moves import WhiteheadMove
from src.words.alphabet import Alphabet
from src.words.word import CyclicWord, Word, substitute

logger = logging.getLogger(__name__)

DEFAULT_REDUCTION_BOUND = 5_000


@dataclass
class WeakReduction:
    """A basis in which one disk word misses a generator.

    Attributes:
        alphabet: Kernel alphabet the words live in.
        basis_change: Automorphism as generator images.
        disk_index: Index of the disk word that omits the generator.
        omitted: The omitted generator.
        word: The disk word after the basis change.
        moves: Whitehead moves composing the basis change.
    """

    alphabet: Alphabet
    basis_change: Dict[int, Word]
    disk_index: int
    omitted: int
    word: CyclicWord
    moves: List[WhiteheadMove] = field(default_factory=list)

    found = True

    def verify(self, disk_words: Sequence[CyclicWord]) -> bool:
        moved = CyclicWord.of(substitute(disk_words[self.disk_index], self.basis_change))
        return moved == self.word and omits_generator([moved], self.omitted)

    def to_dict(self) -> Dict:
        names = self.alphabet.names
        return {
            "found": True,
            "disk_index": self.disk_index,
            "omitted": names[self.omitted],
            "word": str(self.word),
            "basis_change": {names[g]: str(w) for g, w in sorted(self.basis_change.items())},
            "moves": [m.format(self.alphabet) for m in self.moves],
        }


@dataclass
class NotFound:
    """The search spent its bound without finding an omission."""

    bound: int
    explored: int

    found = False

    def to_dict(self) -> Dict:
        return {"found": False, "bound": self.bound, "explored": self.explored}


def find_weak_reduction(disk_words: Sequence[CyclicWord],
                        bound: int = DEFAULT_REDUCTION_BOUND) -> Union[WeakReduction, NotFound]:
    """Find a basis in which some disk word omits some generator.

    Disk words are tried in order. Each is first checked in the given basis
    and then searched by shortening Whitehead moves, spending at most
    ``bound`` moves per word.

    The search is the graph-guided descent of ``omission_search``, not a
    breadth-first walk over move compositions ordered by (|A|, a). It can
    return a different witness than that walk would find first. Every
    witness is verified against the input before it is returned.

    Raises:
        EmptyInputError: If no disk words are given.
    """
    if not disk_words:
        raise EmptyInputError("find_weak_reduction needs at least one disk word")
    alphabet = disk_words[0].alphabet
    if any(w.alphabet != alphabet for w in disk_words):
        raise AlphabetMismatchError("Disk words are over different alphabets")
    for index, word in enumerate(disk_words):
        witness = omission_search([word], bound=bound)
        if witness is None:
            logger.debug("weak reduction: disk %d meets every disk", index)
            continue
        result = WeakReduction(alphabet, witness.images, index, witness.omitted, witness.words[0], witness.moves)
        if not result.verify(disk_words):
            raise AssertionError(f"Omission witness for disk {index} failed verification")
        logger.info("weak reduction: disk %d omits %s after %d moves",
                    index, alphabet.names[witness.omitted], len(witness.moves))
        return result
    return NotFound(bound=bound, explored=len(disk_words))


def cut_along(disk_words: Sequence[CyclicWord], generator: int) -> List[CyclicWord]:
    """Re-index words that omit ``generator`` over the alphabet without it.

    Raises:
        CutError: If some word still uses the generator.
    """
    if not disk_words:
        return []
    alphabet = disk_words[0].alphabet
    for word in disk_words:
        if not word.omits(generator):
            raise CutError(f"Word {word} uses {alphabet.names[generator]}; cannot cut along it")
    smaller = alphabet.without(generator)
    mapping = {g: (g if g < generator else g - 1) for g in range(alphabet.rank) if g != generator}
    return [w.with_alphabet(smaller, mapping) for w in disk_words]


def omit_and_cut(words: Sequence[CyclicWord], bound: int = DEFAULT_REDUCTION_BOUND
                 ) -> Tuple[List[CyclicWord], Optional[OmissionWitness]]:
    """Find a common omission for the whole system and cut along it.

    Returns:
        The cut words and the witness, or an empty list and None.
    """
    witness = omission_search(words, bound=bound)
    if witness is None:
        return [], None
    return cut_along(witness.words, witness.omitted), witness
