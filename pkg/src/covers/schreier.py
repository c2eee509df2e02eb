"""Reidemeister–Schreier rewriting for cyclic covers.

The kernel of a weight map F → Z/m has the coset representatives
rep(c) = t^k with k·u ≡ c (mod m), where t is the transversal generator and u
its weight. For each coset c and generator s the Schreier generator is
rep(c) · s · rep(c + w_s)⁻¹. The nontrivial ones form a free basis of the
kernel of size m(r - 1) + 1.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.utils.errors import LiftError, WeightError
from src.words.alphabet import Alphabet, Letter
from src.words.word import CyclicWord, Word, free_reduce, substitute
from .weights import WeightMap, coset_of

logger = logging.getLogger(__name__)

TRANSVERSAL_NAME = "a"


@dataclass(frozen=True)
class SchreierData:
    """Transversal, kernel basis and rewriting table of a cyclic cover.

    Attributes:
        base: Alphabet of the base group.
        weights: The weight map onto Z/m.
        transversal: Index of the transversal generator t.
        kernel: Alphabet of the kernel basis.
        definitions: Defining base word per kernel generator.
        table: Kernel generator index per (coset, base generator), or None
            when the Schreier generator is trivial.
        step: Exponent k with k·u ≡ 1 (mod m).
    """

    base: Alphabet
    weights: WeightMap
    transversal: int
    kernel: Alphabet
    definitions: Tuple[Word, ...]
    table: Dict[Tuple[int, int], Optional[int]] = field(hash=False, compare=False)
    step: int = 1

    @property
    def modulus(self) -> int:
        return self.weights.modulus

    def representative(self, coset: int) -> Word:
        power = (coset * self.step) % self.modulus
        return Word(self.base, (Letter(self.transversal, 1),) * power)

    def definition(self, name: str) -> Word:
        return self.definitions[self.kernel.index(name)]

    def images(self) -> Dict[int, Word]:
        return dict(enumerate(self.definitions))

    def to_dict(self) -> Dict:
        return {
            "modulus": self.modulus,
            "weights": list(self.weights.weights),
            "transversal": self.base.names[self.transversal],
            "kernel": self.kernel.to_list(),
            "definitions": {name: str(w) for name, w in zip(self.kernel.names, self.definitions)},
        }


def _kernel_name(base: Alphabet, generator: int, transversal: int, coset: int) -> str:
    if generator == transversal:
        return TRANSVERSAL_NAME
    if base.rank == 2:
        return f"w{coset}"
    return f"{base.names[generator]}{coset}"


def schreier_basis(modulus: int, weights: WeightMap, transversal_gen: int = 0,
                   base: Optional[Alphabet] = None) -> SchreierData:
    """Build the kernel basis of the cover of degree ``modulus``.

    Args:
        modulus: Cover degree m.
        weights: Weights of the base generators.
        transversal_gen: Generator whose powers form the transversal.
        base: Base alphabet; defaults to ``x, y`` for rank 2.

    Returns:
        SchreierData with kernel generators ordered by base generator, then
        coset. For m = 1 the kernel basis is the base basis itself.

    Raises:
        WeightError: If the transversal weight is not invertible mod m.
    """
    weights = weights.with_modulus(modulus)
    if base is None:
        base = Alphabet.of("x", "y") if len(weights.weights) == 2 else Alphabet(
            tuple(f"x{i}" for i in range(len(weights.weights)))
        )
    if base.rank != len(weights.weights):
        raise WeightError(f"{len(weights.weights)} weights for alphabet {base}")
    u = weights.weights[transversal_gen] % modulus
    step = next((k for k in range(modulus) if (k * u) % modulus == 1 % modulus), None)
    if step is None:
        raise WeightError(
            f"Transversal generator {base.names[transversal_gen]!r} has weight {weights.weights[transversal_gen]}, "
            f"not invertible mod {modulus}"
        )

    def rep(coset: int) -> Tuple[Letter, ...]:
        return (Letter(transversal_gen, 1),) * ((coset * step) % modulus)

    names: List[str] = []
    defs: List[Tuple[Letter, ...]] = []
    table: Dict[Tuple[int, int], Optional[int]] = {}
    for s in range(base.rank):
        for coset in range(modulus):
            target = (coset + weights.weights[s]) % modulus
            inv_rep = tuple(l.inverse() for l in reversed(rep(target)))
            letters = free_reduce(rep(coset) + (Letter(s, 1),) + inv_rep)
            if not letters:
                table[(coset, s)] = None
                continue
            table[(coset, s)] = len(names)
            names.append(base.names[s] if modulus == 1 else _kernel_name(base, s, transversal_gen, coset))
            defs.append(letters)

    kernel = Alphabet(tuple(names))
    definitions = tuple(Word(base, d) for d in defs)
    logger.debug("schreier basis m=%d: %s", modulus, dict(zip(names, map(str, definitions))))
    return SchreierData(base, weights, transversal_gen, kernel, definitions, table, step)


def rewrite_in_kernel(w: Word, basepoint: int, data: SchreierData) -> Word:
    """Rewrite a coset-0 word as a kernel word starting at ``basepoint``.

    A positive letter s read at coset c emits the generator of (c, s) and
    moves to c + w_s. A negative letter moves to c - w_s first and emits the
    inverse of the generator at the new coset.

    Raises:
        LiftError: If the word's weight sum is nonzero mod m.
    """
    if coset_of(w, data.weights) != 0:
        raise LiftError(f"Word {w} has coset {coset_of(w, data.weights)}; it does not lift to a loop")
    m = data.modulus
    weights = data.weights.weights
    coset = basepoint % m
    out: List[Letter] = []
    for letter in w.letters:
        if letter.sign > 0:
            index = data.table[(coset, letter.generator)]
            if index is not None:
                out.append(Letter(index, 1))
            coset = (coset + weights[letter.generator]) % m
        else:
            coset = (coset - weights[letter.generator]) % m
            index = data.table[(coset, letter.generator)]
            if index is not None:
                out.append(Letter(index, -1))
    return Word(data.kernel, free_reduce(out))


@dataclass(frozen=True)
class Lifts:
    """The m basepoint lifts of a closed curve, in basepoint order.

    Attributes:
        words: Cyclic kernel word per basepoint.
        period_collapse: True when two basepoints give the same cyclic word,
            which happens for proper powers of the transversal loop.
    """

    words: Tuple[CyclicWord, ...]
    period_collapse: bool

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __getitem__(self, index: int) -> CyclicWord:
        return self.words[index]


def lifts_of(w, data: SchreierData) -> Lifts:
    """Lift a cyclic word at every basepoint, reading its canonical rotation."""
    word = w.as_word() if isinstance(w, CyclicWord) else w
    words = tuple(CyclicWord.of(rewrite_in_kernel(word, i, data)) for i in range(data.modulus))
    collapse = len(set(words)) < len(words)
    if collapse:
        logger.info("lifts of %s collapse to %d distinct cyclic words", w, len(set(words)))
    return Lifts(words, collapse)


def expand_to_base(kw: Word, data: SchreierData) -> Word:
    """Substitute kernel generators by their definitions."""
    return substitute(kw, data.images(), data.base)


def deck_transform(kw, data: SchreierData) -> Word:
    """Move a lift to the next basepoint by conjugating with the transversal.

    Each kernel generator k maps to the kernel word of t · def(k) · t⁻¹.
    As cyclic words, the image of the basepoint-c lift is the lift at
    c + u, where u is the transversal weight.
    """
    t = Word.generator(data.base, data.transversal)
    images = {
        index: rewrite_in_kernel(t * definition * t.inverse(), 0, data)
        for index, definition in enumerate(data.definitions)
    }
    word = kw.as_word() if isinstance(kw, CyclicWord) else kw
    return substitute(word, images, data.kernel)
