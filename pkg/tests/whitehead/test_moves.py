"""Tests for Whitehead moves and the move trace."""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from src.certify.fixture import find_fixture
from src.config.settings import BUNDLED_FIXTURES
from src.utils.errors import InvalidMoveError, ParseError
from src.whitehead import (
    MoveTrace,
    WhiteheadMove,
    apply_move,
    build_graph,
    enumerate_moves,
    enumerate_type_one,
    length_change,
    minimize,
    parse_move,
    total_length,
)
from src.words import Alphabet, CyclicWord, Letter, parse_cyclic

XY = Alphabet.of("x", "y")
XYZ = Alphabet.of("x", "y", "z")

ALL_RANK_TWO = list(enumerate_moves(XY, pruned=False)) + list(enumerate_type_one(XY))

cyclic_words = st.lists(
    st.tuples(st.integers(0, 1), st.sampled_from([1, -1])).map(lambda t: Letter(*t)),
    min_size=1, max_size=10,
).map(lambda ls: CyclicWord(XY, tuple(ls)))


class TestWhiteheadMove(unittest.TestCase):
    """Construction, images and inverses."""

    def test_type_two_images(self):
        move = parse_move("({x,Y},x)", XY)
        images = move.images(XY)
        self.assertEqual(str(images[0]), "x")
        self.assertEqual(str(images[1]), "Xy")

    def test_type_two_both_sides(self):
        move = parse_move("({x,y,Y},x)", XY)
        self.assertEqual(str(move.images(XY)[1]), "Xyx")

    def test_type_one_images(self):
        move = parse_move("I(y,X)", XY)
        images = move.images(XY)
        self.assertEqual(str(images[0]), "y")
        self.assertEqual(str(images[1]), "X")

    def test_format_round_trip(self):
        for text in ("({x,Y},x)", "I(y,X)", "({X,y},X)"):
            with self.subTest(text=text):
                self.assertEqual(parse_move(text, XY).format(XY), text)

    def test_bracketed_names(self):
        ab = Alphabet.of("w1", "w2", "w3", "w6")
        move = parse_move("({[w1],[W1],[W2]},[W2])", ab)
        self.assertEqual(move.pivot, Letter(1, -1))
        self.assertEqual(len(move.subset), 3)

    def test_invalid_moves(self):
        with self.assertRaises(InvalidMoveError):
            parse_move("({Y},x)", XY)
        with self.assertRaises(InvalidMoveError):
            parse_move("({x,X},x)", XY)
        with self.assertRaises(InvalidMoveError):
            WhiteheadMove.type_one([0, 0])
        with self.assertRaises(ParseError):
            parse_move("x,y", XY)
        with self.assertRaises(ParseError):
            parse_move("I(y)", XY)

    def test_inverse_pivot(self):
        move = parse_move("({x,Y},x)", XY)
        inverse = move.inverse()
        self.assertEqual(inverse.pivot, Letter(0, -1))
        self.assertEqual(inverse.subset, frozenset({Letter(0, -1), Letter(1, -1)}))

    def test_enumeration_counts(self):
        self.assertEqual(len(list(enumerate_moves(XY))), 4)
        self.assertEqual(len(list(enumerate_moves(XY, pruned=False))), 16)
        self.assertEqual(len(list(enumerate_moves(XYZ))), 42)
        self.assertEqual(len(list(enumerate_moves(Alphabet.of("x")))), 0)
        self.assertEqual(len(list(enumerate_type_one(XY))), 7)

    def test_enumeration_is_ordered(self):
        moves = list(enumerate_moves(XYZ))
        sizes = [len(m.subset) for m in moves]
        self.assertEqual(sizes, sorted(sizes))
        self.assertEqual(moves, list(enumerate_moves(XYZ)))

    @given(cyclic_words, st.integers(0, len(ALL_RANK_TWO) - 1))
    @settings(deadline=None)
    def test_inverse_undoes_move(self, word, index):
        move = ALL_RANK_TWO[index]
        moved, _ = apply_move(move, [word])
        restored, _ = apply_move(move.inverse(), moved)
        self.assertEqual(restored, [word])

    def test_length_change(self):
        word = parse_cyclic("xxy", XY)
        move = parse_move("({x,Y},x)", XY)
        self.assertEqual(length_change(move, [word]), total_length(apply_move(move, [word])[0]) - 3)

    def test_minimize(self):
        word = parse_cyclic("xyXYxy", XY)
        minimal, trace = minimize([word])
        self.assertLessEqual(total_length(minimal), total_length([word]))
        current = [word]
        for move in trace:
            current, _ = apply_move(move, current)
        self.assertEqual(current, minimal)


class TestFixtureMoves(unittest.TestCase):
    """The two hand-picked moves that clear the cut vertices of fig18."""

    def setUp(self):
        self.fig18 = find_fixture(BUNDLED_FIXTURES, "fig18")
        self.fig19a = find_fixture(BUNDLED_FIXTURES, "fig19a")
        self.fig19b = find_fixture(BUNDLED_FIXTURES, "fig19b")
        self.alphabet = self.fig18.alphabet

    def test_move_chain(self):
        first = parse_move("({[w1],[W1],[W2]},[W2])", self.alphabet)
        second = parse_move("({[w6],[W6],[W3]},[W3])", self.alphabet)
        after_first, _ = apply_move(first, list(self.fig18.words))
        self.assertCountEqual(after_first, list(self.fig19a.words))
        after_second, _ = apply_move(second, after_first)
        self.assertCountEqual(after_second, list(self.fig19b.words))
        graph = build_graph(after_second, self.alphabet)
        self.assertTrue(graph.is_connected())
        self.assertEqual(graph.cut_vertices(), [])

    def test_moves_shorten(self):
        first = parse_move("({[w1],[W1],[W2]},[W2])", self.alphabet)
        self.assertLess(length_change(first, list(self.fig18.words)), 0)


class TestMoveTrace(unittest.TestCase):
    """Recording, rollback and redo."""

    def setUp(self):
        self.trace = MoveTrace(XY)
        self.start = [parse_cyclic("xxy", XY), parse_cyclic("xyXY", XY)]
        self.first = parse_move("({x,Y},x)", XY)
        self.second = parse_move("I(y,X)", XY)

    def test_apply_records(self):
        words = self.trace.apply(self.first, self.start)
        words = self.trace.apply(self.second, words)
        self.assertEqual(len(self.trace), 2)
        self.assertEqual(self.trace.moves(), [self.first, self.second])
        self.assertEqual(list(self.trace.current()), words)
        self.assertEqual(len(self.trace.to_list()), 2)

    def test_rollback_restores(self):
        words = self.trace.apply(self.first, self.start)
        self.trace.apply(self.second, words)
        results = self.trace.rollback(1)
        self.assertEqual(len(results), 1)
        self.assertTrue(results[0].restored)
        self.assertEqual(list(self.trace.current()), words)
        self.trace.rollback()
        self.assertIsNone(self.trace.current())

    def test_redo(self):
        words = self.trace.apply(self.first, self.start)
        final = self.trace.apply(self.second, words)
        self.trace.rollback(2)
        redone = self.trace.redo()
        self.assertEqual([r.move for r in redone], [self.first, self.second])
        self.assertEqual(list(self.trace.current()), final)

    def test_new_move_clears_redo(self):
        words = self.trace.apply(self.first, self.start)
        self.trace.rollback(1)
        self.trace.apply(self.second, self.start)
        self.assertEqual(self.trace.redo(), [])
        self.assertEqual(self.trace.moves(), [self.second])
        self.assertNotEqual(list(self.trace.current()), words)


if __name__ == "__main__":
    unittest.main()
