"""Tests for weight maps, Schreier bases and lifting."""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from src.covers import (
    WeightMap,
    coset_of,
    deck_transform,
    expand_to_base,
    infer_weights,
    lifts_of,
    rewrite_in_kernel,
    schreier_basis,
)
from src.splittings import twist_family
from src.utils.errors import LiftError, WeightError
from src.words import Alphabet, CyclicWord, Letter, Word, parse_cyclic, parse_word

XY = Alphabet.of("x", "y")


def base_words(rank):
    letter = st.tuples(st.integers(0, rank - 1), st.sampled_from([1, -1])).map(lambda t: Letter(*t))
    return st.lists(letter, max_size=16)


def close_up(letters, alphabet, data):
    """Append a transversal power so the word lies in coset 0."""
    w = Word(alphabet, tuple(letters))
    c = coset_of(w, data.weights)
    return w * Word.generator(alphabet, data.transversal).power(-c * data.step)


class TestWeights(unittest.TestCase):
    """Weight inference and validation."""

    def test_infer_twist_weights(self):
        spec = twist_family(1)
        self.assertEqual(infer_weights(spec.relator, 3).weights, (1, -1))
        self.assertEqual(infer_weights(twist_family(3).relator, 5).weights, (1, -1))

    def test_zero_vector(self):
        with self.assertRaises(WeightError):
            infer_weights(parse_cyclic("xyXY", XY), 3)

    def test_not_onto(self):
        with self.assertRaises(WeightError):
            WeightMap((3, 6), 3)
        with self.assertRaises(WeightError):
            WeightMap((1, 1), 0)

    def test_coset(self):
        weights = WeightMap((1, -1), 3)
        self.assertEqual(coset_of(parse_word("xxY", XY), weights), 0)
        self.assertEqual(coset_of(parse_word("x", XY), weights), 1)


class TestSchreierBasis(unittest.TestCase):
    """Kernel bases of cyclic covers."""

    def test_three_fold_basis(self):
        data = schreier_basis(3, WeightMap((1, -1), 3), 0, XY)
        self.assertEqual(data.kernel.names, ("a", "w0", "w1", "w2"))
        definitions = [str(d) for d in data.definitions]
        self.assertEqual(definitions, ["xxx", "yXX", "xy", "xxyX"])

    def test_identity_cover_keeps_names(self):
        data = schreier_basis(1, WeightMap((1, -1), 1), 0, XY)
        self.assertEqual(data.kernel.names, ("x", "y"))

    def test_rank_formula(self):
        for rank, weights in ((2, (1, -1)), (3, (1, 0, 2))):
            base = Alphabet(tuple(f"x{i}" for i in range(rank))) if rank == 3 else XY
            for m in range(1, 8):
                with self.subTest(rank=rank, m=m):
                    data = schreier_basis(m, WeightMap(weights, m), 0, base)
                    self.assertEqual(data.kernel.rank, m * (rank - 1) + 1)

    def test_twist_cover_ranks(self):
        spec = twist_family(1)
        self.assertEqual(schreier_basis(3, spec.weight_map(3), 0, XY).kernel.rank, 4)
        self.assertEqual(schreier_basis(5, spec.weight_map(5), 0, XY).kernel.rank, 6)

    def test_transversal_must_be_invertible(self):
        with self.assertRaises(WeightError):
            schreier_basis(4, WeightMap((2, 1), 4), 0, XY)

    def test_rewrite_rejects_open_paths(self):
        data = schreier_basis(3, WeightMap((1, -1), 3), 0, XY)
        with self.assertRaises(LiftError):
            rewrite_in_kernel(parse_word("x", XY), 0, data)

    def test_relator_lifts(self):
        spec = twist_family(1)
        for m in (3, 5):
            with self.subTest(m=m):
                data = schreier_basis(m, spec.weight_map(m), 0, XY)
                lifts = lifts_of(spec.relator, data)
                self.assertEqual(len(lifts), m)
                self.assertEqual(len(set(lifts)), m)
                self.assertFalse(lifts.period_collapse)
                for lift in lifts:
                    self.assertEqual(lift.alphabet, data.kernel)

    def test_rewrite_examples(self):
        data = schreier_basis(3, WeightMap((1, -1), 3), 0, XY)
        self.assertEqual(str(rewrite_in_kernel(parse_word("xy", XY), 0, data)), "[w1]")
        self.assertEqual(str(rewrite_in_kernel(parse_word("xxx", XY), 0, data)), "a")
        self.assertTrue(rewrite_in_kernel(Word.empty(XY), 2, data).is_empty())

    def test_transversal_power_collapses(self):
        data = schreier_basis(3, WeightMap((1, -1), 3), 0, XY)
        lifts = lifts_of(parse_cyclic("xxx", XY), data)
        self.assertTrue(lifts.period_collapse)
        self.assertEqual({str(w) for w in lifts}, {"a"})

    @given(base_words(2), st.sampled_from([2, 3, 5]), st.integers(0, 4))
    @settings(max_examples=1000, deadline=None)
    def test_round_trip_rank_two(self, letters, m, basepoint):
        data = schreier_basis(m, WeightMap((1, -1), m), 0, XY)
        w = close_up(letters, XY, data)
        rep = data.representative(basepoint % m)
        lifted = rewrite_in_kernel(w, basepoint, data)
        self.assertEqual(expand_to_base(lifted, data), rep * w * rep.inverse())

    @given(base_words(3), st.sampled_from([2, 3, 5]), st.integers(0, 4))
    @settings(deadline=None)
    def test_round_trip_rank_three(self, letters, m, basepoint):
        base = Alphabet.of("x", "y", "z")
        data = schreier_basis(m, WeightMap((2, 1, 0), m), 1, base)
        w = close_up(letters, base, data)
        rep = data.representative(basepoint % m)
        self.assertEqual(expand_to_base(rewrite_in_kernel(w, basepoint, data), data), rep * w * rep.inverse())

    @given(base_words(2), base_words(2), st.sampled_from([2, 3, 5]), st.integers(0, 4))
    @settings(deadline=None)
    def test_rewrite_is_a_homomorphism(self, left, right, m, basepoint):
        data = schreier_basis(m, WeightMap((1, -1), m), 0, XY)
        u = close_up(left, XY, data)
        v = close_up(right, XY, data)
        self.assertEqual(
            rewrite_in_kernel(u * v, basepoint, data),
            rewrite_in_kernel(u, basepoint, data) * rewrite_in_kernel(v, basepoint, data),
        )

    @given(base_words(2), st.sampled_from([2, 3, 5]))
    @settings(deadline=None)
    def test_kernel_letter_count_over_all_basepoints(self, letters, m):
        data = schreier_basis(m, WeightMap((1, -1), m), 0, XY)
        w = close_up(letters, XY, data)
        transversal = sum(1 for letter in w if letter.generator == data.transversal)
        others = len(w) - transversal
        total = sum(len(rewrite_in_kernel(w, i, data)) for i in range(m))
        self.assertEqual(total, m * others + transversal)

    def test_deck_transform_shifts_basepoint(self):
        spec = twist_family(1)
        for m in (3, 5):
            data = schreier_basis(m, spec.weight_map(m), 0, XY)
            lifts = lifts_of(spec.relator, data)
            for c in range(m):
                with self.subTest(m=m, c=c):
                    moved = CyclicWord.of(deck_transform(lifts[c], data))
                    self.assertEqual(moved, lifts[(c + 1) % m])


if __name__ == "__main__":
    unittest.main()
