"""Tests for alphabets, words and the word text format."""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from src.utils.errors import AlphabetMismatchError, MissingImageError, ParseError
from src.words import (
    Alphabet,
    CyclicWord,
    Letter,
    Word,
    compose,
    concat,
    cyclic_reduce,
    exponent_vector,
    format_word,
    free_reduce,
    identity_images,
    invert,
    parse_alphabet,
    parse_cyclic,
    parse_word,
    substitute,
)

XY = Alphabet.of("x", "y")

letters = st.tuples(st.integers(0, 1), st.sampled_from([1, -1])).map(lambda t: Letter(*t))
words = st.lists(letters, max_size=14).map(lambda ls: Word(XY, tuple(ls)))


class TestAlphabet(unittest.TestCase):
    """Alphabet validation and naming."""

    def test_tokens(self):
        self.assertEqual(XY.token(Letter(0, 1)), "x")
        self.assertEqual(XY.token(Letter(1, -1)), "Y")
        kernel = Alphabet.of("a", "w0", "w1")
        self.assertEqual(kernel.token(Letter(1, 1)), "[w0]")
        self.assertEqual(kernel.token(Letter(2, -1)), "[W1]")

    def test_vertex_names(self):
        self.assertEqual(XY.vertex_name(Letter(0, -1)), "x-")
        self.assertEqual(XY.parse_vertex("y+"), Letter(1, 1))
        with self.assertRaises(ParseError):
            XY.parse_vertex("y")

    def test_invalid_alphabets(self):
        with self.assertRaises(ParseError):
            Alphabet.of()
        with self.assertRaises(ParseError):
            Alphabet.of("x", "X")
        with self.assertRaises(ParseError):
            Alphabet.of("1a")

    def test_parse_alphabet_and_without(self):
        ab = parse_alphabet(" w1, w2 ,w4")
        self.assertEqual(ab.names, ("w1", "w2", "w4"))
        self.assertEqual(ab.without(1).names, ("w1", "w4"))
        self.assertEqual(str(ab), "w1,w2,w4")

    def test_letter_order(self):
        self.assertEqual(XY.letters(), [Letter(0, -1), Letter(0, 1), Letter(1, -1), Letter(1, 1)])


class TestParser(unittest.TestCase):
    """Parsing and printing of the word text format."""

    def test_free_reduction_on_parse(self):
        self.assertEqual(str(parse_word("xXy", XY)), "y")
        self.assertTrue(parse_word("xyYX", XY).is_empty())

    def test_powers(self):
        self.assertEqual(str(parse_word("(xy)^-1", XY)), "YX")
        self.assertEqual(str(parse_word("y(xy)^2", XY)), "yxyxy")
        self.assertEqual(str(parse_word("x^-2", XY)), "XX")
        self.assertTrue(parse_word("(xy)^0", XY).is_empty())

    def test_runs_print_as_powers_only_when_shorter(self):
        self.assertEqual(str(parse_word("xxx", XY)), "xxx")
        self.assertEqual(str(parse_word("xxxx", XY)), "x^4")
        ab = Alphabet.of("w0", "w1")
        self.assertEqual(str(parse_word("[w0][W1]^2", ab)), "[w0][W1]^2")

    def test_whitespace_is_ignored(self):
        self.assertEqual(parse_word(" x y\tX ", XY), parse_word("xyX", XY))

    def test_errors(self):
        for text in ("z", "x^", "[]", "(xy", "x)", "x^a", "[w0"):
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_word(text, XY)

    def test_parse_error_carries_position(self):
        with self.assertRaises(ParseError) as ctx:
            parse_word("xyz", XY)
        self.assertEqual(ctx.exception.position, 2)

    def test_display_words(self):
        relator = parse_word("(XY)^1X(yx)^2Y(XY)^1(xy)^2", XY)
        self.assertEqual(str(relator), "XYXyxyxYXYxyxy")
        self.assertEqual(len(relator), 14)


class TestWord(unittest.TestCase):
    """Word operations."""

    def test_inverse_and_power(self):
        w = parse_word("xy", XY)
        self.assertEqual(str(w.inverse()), "YX")
        self.assertEqual(str(w.power(-2)), "YXYX")
        self.assertTrue(w.power(0).is_empty())

    def test_concat_reduces(self):
        self.assertEqual(str(parse_word("xy", XY) * parse_word("Yx", XY)), "xx")

    def test_concat_and_invert_functions(self):
        w = parse_word("xyX", XY)
        self.assertEqual(concat(w, invert(w)), Word.empty(XY))
        self.assertEqual(str(concat(w, parse_word("xx", XY))), "xyx")
        self.assertEqual(format_word(invert(w)), "xYX")
        self.assertEqual(format_word(parse_cyclic("xxxxy", XY)), "x^4y")

    def test_concat_checks_alphabet(self):
        with self.assertRaises(AlphabetMismatchError):
            parse_word("x", XY) * parse_word("x", Alphabet.of("x", "z"))

    def test_exponent_vector(self):
        self.assertEqual(exponent_vector(parse_word("xxY", XY)), (2, -1))

    def test_substitute_and_compose(self):
        images = {0: parse_word("xy", XY), 1: parse_word("y", XY)}
        self.assertEqual(str(substitute(parse_word("xY", XY), images)), "x")
        twice = compose(images, images)
        self.assertEqual(str(twice[0]), "xyy")
        self.assertEqual(compose(identity_images(XY), images), images)

    def test_missing_image(self):
        with self.assertRaises(MissingImageError):
            substitute(parse_word("xy", XY), {0: parse_word("x", XY)})

    @given(words)
    @settings(deadline=None)
    def test_word_times_inverse_is_empty(self, w):
        self.assertTrue((w * w.inverse()).is_empty())

    @given(st.lists(letters, max_size=14))
    @settings(deadline=None)
    def test_free_reduce_is_idempotent(self, ls):
        once = free_reduce(ls)
        self.assertEqual(free_reduce(once), once)


class TestCyclicWord(unittest.TestCase):
    """Cyclic words in canonical rotation."""

    def test_rotations_are_equal(self):
        self.assertEqual(parse_cyclic("xyXY", XY), parse_cyclic("yXYx", XY))
        self.assertEqual(str(parse_cyclic("xyXY", XY)), "XYxy")

    def test_cyclic_reduction(self):
        self.assertEqual(parse_cyclic("yxY", XY), parse_cyclic("x", XY))
        core, conjugator = cyclic_reduce(parse_word("yxxY", XY))
        self.assertEqual(str(core), "xx")
        self.assertEqual(str(conjugator), "y")

    def test_period(self):
        self.assertTrue(parse_cyclic("xyxy", XY).is_proper_power())
        self.assertEqual(parse_cyclic("xyxy", XY).period(), 2)
        self.assertFalse(parse_cyclic("xxy", XY).is_proper_power())

    def test_omits_and_reindex(self):
        ab = Alphabet.of("x", "y", "z")
        w = parse_cyclic("xz", ab)
        self.assertTrue(w.omits(1))
        moved = w.with_alphabet(Alphabet.of("x", "z"), {0: 0, 2: 1})
        self.assertEqual(str(moved), "xz")

    @given(words)
    @settings(deadline=None)
    def test_rotation_invariance(self, w):
        cyclic = CyclicWord.of(w)
        for rotation in cyclic.rotations():
            self.assertEqual(CyclicWord.of(rotation), cyclic)
        self.assertEqual(cyclic.inverse().inverse(), cyclic)


if __name__ == "__main__":
    unittest.main()
