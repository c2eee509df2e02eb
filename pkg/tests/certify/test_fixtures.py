"""Tests for the bundled figure fixtures."""

import json
import os
import shutil
import tempfile
import unittest

from src.certify import Fixture, find_fixture, list_fixtures, load_fixture, verify_fixture
from src.config.settings import BUNDLED_FIXTURES
from src.utils.errors import FixtureError
from src.whitehead import WhiteheadMove, apply_move
from src.words import Letter


class TestBundledFixtures(unittest.TestCase):
    """Every bundled fixture computes to its recorded expectation."""

    def test_ids(self):
        ids = [f.id for f in list_fixtures(BUNDLED_FIXTURES)]
        self.assertEqual(ids, ["fig10", "fig12", "fig13", "fig16", "fig18", "fig19a", "fig19b"])

    def test_expectations_hold(self):
        for fixture in list_fixtures(BUNDLED_FIXTURES):
            with self.subTest(fixture=fixture.id):
                check = verify_fixture(fixture)
                self.assertTrue(check.matches_expected, check.to_dict())

    def test_fig18_cut_vertices(self):
        check = verify_fixture(find_fixture(BUNDLED_FIXTURES, "fig18"))
        self.assertTrue(check.connected)
        self.assertIn("w2-", check.cut_vertices)

    def test_two_move_chain(self):
        fig18, fig19a, fig19b = (find_fixture(BUNDLED_FIXTURES, i) for i in ("fig18", "fig19a", "fig19b"))
        alphabet = fig18.alphabet
        at_w2 = WhiteheadMove.type_two(4, {Letter(1, -1), Letter(0, -1), Letter(0, 1)}, Letter(1, -1))
        words, _ = apply_move(at_w2, list(fig18.words), alphabet)
        self.assertEqual(words, list(fig19a.words))
        at_w3 = WhiteheadMove.type_two(4, {Letter(2, -1), Letter(3, -1), Letter(3, 1)}, Letter(2, -1))
        words, _ = apply_move(at_w3, words, alphabet)
        self.assertEqual(words, list(fig19b.words))

    def test_graph_fixture_round_trip(self):
        fixture = find_fixture(BUNDLED_FIXTURES, "fig10")
        self.assertEqual(fixture.kind, "graph")
        again = Fixture.from_dict(fixture.to_dict())
        self.assertEqual(again.graph().edge_count, 6)


class TestFixtureErrors(unittest.TestCase):
    """Malformed or missing fixture files."""

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory, ignore_errors=True)

    def write(self, name, data):
        path = os.path.join(self.directory, name)
        with open(path, "w", encoding="utf-8") as handle:
            if isinstance(data, str):
                handle.write(data)
            else:
                json.dump(data, handle)
        return path

    def test_invalid_json(self):
        path = self.write("broken.json", "{not json")
        with self.assertRaises(FixtureError):
            load_fixture(path)

    def test_words_fixture_needs_words(self):
        path = self.write("empty.json", {
            "id": "empty", "kind": "words", "alphabet": ["x", "y"],
            "expected": {"connected": True},
        })
        with self.assertRaises(FixtureError):
            load_fixture(path)

    def test_unknown_vertex(self):
        path = self.write("bad.json", {
            "id": "bad", "kind": "graph", "alphabet": ["x", "y"],
            "edges": [["x+", "z-"]], "expected": {"connected": True},
        })
        with self.assertRaises(FixtureError):
            load_fixture(path)

    def test_missing_file_and_directory(self):
        with self.assertRaises(FixtureError):
            find_fixture(self.directory, "fig12")
        with self.assertRaises(FixtureError):
            list_fixtures(os.path.join(self.directory, "missing"))

    def test_mismatch_is_reported(self):
        path = self.write("wrong.json", {
            "id": "wrong", "kind": "words", "alphabet": ["x", "y"],
            "words": ["xy"], "expected": {"connected": True},
        })
        check = verify_fixture(load_fixture(path))
        self.assertFalse(check.connected)
        self.assertFalse(check.matches_expected)


if __name__ == "__main__":
    unittest.main()
