"""Free-group words: alphabets, reduction, cyclic words and substitution."""

from src.words.alphabet import Alphabet, Letter, SignedVertex, parse_alphabet
from src.words.parser import format_word, parse_cyclic, parse_word
from src.words.word import (
    CyclicWord,
    ExponentVector,
    Word,
    compose,
    concat,
    cyclic_reduce,
    exponent_vector,
    free_reduce,
    identity_images,
    invert,
    substitute,
)

__all__ = [
    "Alphabet",
    "CyclicWord",
    "ExponentVector",
    "Letter",
    "SignedVertex",
    "Word",
    "compose",
    "concat",
    "cyclic_reduce",
    "exponent_vector",
    "format_word",
    "free_reduce",
    "identity_images",
    "invert",
    "parse_alphabet",
    "parse_cyclic",
    "parse_word",
    "substitute",
]
