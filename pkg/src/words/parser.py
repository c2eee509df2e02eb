"""Text format for words.

Grammar, with whitespace ignored everywhere::

    word  := item*
    item  := atom ('^' integer)?
    atom  := LETTER | '[' name ']' | '(' word ')'

A lowercase single letter or a bracketed name is the positive generator; an
uppercase letter, or a bracketed name whose first character is uppercase, is
its inverse. Exponents may be negative.
"""

import re
from typing import List

from src.utils.errors import ParseError
from src.words.alphabet import Alphabet, Letter
from src.words.word import CyclicWord, Word, free_reduce

_WS = re.compile(r"\s+")


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.source = text
        self.text = _WS.sub("", text)
        self.alphabet = alphabet
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> List[Letter]:
        letters = self.sequence()
        if self.pos != len(self.text):
            raise self.error(f"Unexpected {self.peek()!r}")
        return letters

    def sequence(self) -> List[Letter]:
        out: List[Letter] = []
        while self.pos < len(self.text) and self.peek() != ")":
            out.extend(self.item())
        return out

    def item(self) -> List[Letter]:
        atom = self.atom()
        if self.peek() != "^":
            return atom
        self.pos += 1
        k = self.integer()
        if k < 0:
            atom = [letter.inverse() for letter in reversed(atom)]
        return atom * abs(k)

    def integer(self) -> int:
        match = re.compile(r"-?\d+").match(self.text, self.pos)
        if not match:
            raise self.error("Malformed exponent")
        self.pos = match.end()
        return int(match.group())

    def atom(self) -> List[Letter]:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.sequence()
            if self.peek() != ")":
                raise self.error("Missing ')'")
            self.pos += 1
            return inner
        if ch == "[":
            end = self.text.find("]", self.pos)
            if end < 0:
                raise self.error("Missing ']'")
            name = self.text[self.pos + 1:end]
            if not name:
                raise self.error("Empty generator name")
            letter = self.named(name)
            self.pos = end + 1
            return [letter]
        if ch.isascii() and ch.isalpha():
            letter = self.named(ch)
            self.pos += 1
            return [letter]
        raise self.error(f"Unexpected {ch!r}")

    def named(self, name: str) -> Letter:
        sign = -1 if name[0].isupper() else 1
        base = name[0].lower() + name[1:]
        if base not in self.alphabet.names:
            raise self.error(f"Unknown generator {base!r}")
        return Letter(self.alphabet.index(base), sign)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse text into a freely reduced word.

    Args:
        text: Word text, e.g. ``"XYXyxyxYXYxyxy"`` or ``"y(xy)^2[w0]^-1"``.
        alphabet: Alphabet resolving the generator names.

    Returns:
        The reduced Word.

    Raises:
        ParseError: On unknown generators, malformed exponents or empty names.
    """
    letters = _Parser(text, alphabet).parse()
    return Word(alphabet, free_reduce(letters))


def parse_cyclic(text: str, alphabet: Alphabet) -> CyclicWord:
    """Parse text and cyclically reduce it."""
    return CyclicWord.of(parse_word(text, alphabet))


def format_word(w) -> str:
    """Shortest parenthesis-free text for a Word or CyclicWord."""
    return str(w)
