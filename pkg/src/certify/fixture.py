"""Figure fixtures: Whitehead graphs and word systems with expected properties."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.utils.errors import FixtureError, VhkError
from src.whitehead.graph import WhiteheadGraph, build_graph, graph_from_edges
from src.words.alphabet import Alphabet
from src.words.parser import parse_cyclic
from src.words.word import CyclicWord

logger = logging.getLogger(__name__)


class ExpectedModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    connected: bool
    cut_vertices: List[str] = Field(default_factory=list)


class FixtureFile(BaseModel):
    """On-disk fixture; ``edges`` for graph fixtures, ``words`` for word fixtures."""

    model_config = ConfigDict(extra="forbid")

    id: str
    kind: Literal["graph", "words"]
    alphabet: List[str]
    edges: Optional[List[Tuple[str, str]]] = None
    words: Optional[List[str]] = None
    expected: ExpectedModel
    description: str = ""

    @model_validator(mode="after")
    def _payload_matches_kind(self):
        if self.kind == "graph" and self.edges is None:
            raise ValueError("graph fixtures need 'edges'")
        if self.kind == "words" and not self.words:
            raise ValueError("words fixtures need 'words'")
        return self


@dataclass(frozen=True)
class Fixture:
    """A parsed fixture.

    Attributes:
        id: Fixture id, e.g. ``fig10``.
        kind: ``graph`` or ``words``.
        alphabet: Alphabet of the payload.
        edges: Vertex-name pairs for graph fixtures.
        words: Cyclic words for word fixtures.
        expected_connected: Expected connectivity.
        expected_cut_vertices: Expected cut vertex names.
        description: Provenance note.
    """

    id: str
    kind: str
    alphabet: Alphabet
    edges: Tuple[Tuple[str, str], ...] = ()
    words: Tuple[CyclicWord, ...] = ()
    expected_connected: bool = True
    expected_cut_vertices: Tuple[str, ...] = ()
    description: str = ""

    def graph(self) -> WhiteheadGraph:
        if self.kind == "graph":
            return graph_from_edges(self.alphabet, self.edges)
        return build_graph(list(self.words), self.alphabet)

    def to_dict(self) -> Dict:
        data = {
            "id": self.id,
            "kind": self.kind,
            "alphabet": self.alphabet.to_list(),
            "expected": {"connected": self.expected_connected, "cut_vertices": list(self.expected_cut_vertices)},
            "description": self.description,
        }
        if self.kind == "graph":
            data["edges"] = [list(e) for e in self.edges]
        else:
            data["words"] = [str(w) for w in self.words]
        return data

    @classmethod
    def from_dict(cls, data: Dict) -> "Fixture":
        """Validate raw fixture data.

        Raises:
            FixtureError: If the data is malformed or does not parse.
        """
        try:
            model = FixtureFile.model_validate(data)
        except ValidationError as exc:
            raise FixtureError(f"Fixture {data.get('id', '?')}: {exc}") from exc
        return cls._from_model(model)

    @classmethod
    def _from_model(cls, model: FixtureFile) -> "Fixture":
        try:
            alphabet = Alphabet.from_list(model.alphabet)
            words = tuple(parse_cyclic(text, alphabet) for text in (model.words or []))
            for name in model.expected.cut_vertices:
                alphabet.parse_vertex(name)
            fixture = cls(
                id=model.id,
                kind=model.kind,
                alphabet=alphabet,
                edges=tuple(tuple(e) for e in (model.edges or [])),
                words=words,
                expected_connected=model.expected.connected,
                expected_cut_vertices=tuple(model.expected.cut_vertices),
                description=model.description,
            )
            if fixture.kind == "graph":
                fixture.graph()
        except VhkError as exc:
            raise FixtureError(f"Fixture {model.id}: {exc}") from exc
        return fixture


@dataclass
class FixtureCheck:
    """Properties computed from a fixture payload."""

    id: str
    connected: bool
    cut_vertices: List[str]
    matches_expected: bool

    def to_dict(self) -> Dict:
        return {
            "id": self.id,
            "connected": self.connected,
            "cut_vertices": self.cut_vertices,
            "matches_expected": self.matches_expected,
        }


def load_fixture(path: Union[str, Path]) -> Fixture:
    """Read one fixture JSON file.

    Raises:
        FixtureError: If the file is missing or malformed.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FixtureError(f"Cannot read fixture {path}: {exc}") from exc
    try:
        model = FixtureFile.model_validate_json(text)
    except ValidationError as exc:
        raise FixtureError(f"Fixture {path}: {exc}") from exc
    return Fixture._from_model(model)


def find_fixture(directory: Union[str, Path], fixture_id: str) -> Fixture:
    return load_fixture(Path(directory) / f"{fixture_id}.json")


def list_fixtures(directory: Union[str, Path]) -> List[Fixture]:
    """All fixtures of a directory, sorted by id."""
    directory = Path(directory)
    if not directory.is_dir():
        raise FixtureError(f"Fixture directory {directory} does not exist")
    fixtures = [load_fixture(p) for p in sorted(directory.glob("*.json"))]
    return sorted(fixtures, key=lambda f: f.id)


def verify_fixture(fixture: Fixture) -> FixtureCheck:
    """Compute connectivity and cut vertices and compare with the expectation."""
    graph = fixture.graph()
    connected = graph.is_connected()
    cuts = [fixture.alphabet.vertex_name(v) for v in graph.cut_vertices()]
    expected = sorted(fixture.alphabet.parse_vertex(name) for name in fixture.expected_cut_vertices)
    matches = connected == fixture.expected_connected and graph.cut_vertices() == expected
    logger.debug("fixture %s: connected=%s cut=%s matches=%s", fixture.id, connected, cuts, matches)
    return FixtureCheck(fixture.id, connected, cuts, matches)
