"""Whitehead graphs of cyclic-word systems.

Vertices are the signed generators. Each cyclic adjacency c1 c2 of each word
contributes one edge between vertex(c1) and vertex(c2⁻¹), where the vertex of
a letter is the letter itself. The degree of both vertices of a generator
equals the number of occurrences of that generator in the system.
"""

import json
import logging
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from src.utils.errors import AlphabetMismatchError, EmptyInputError, ParseError
from src.words.alphabet import Alphabet, SignedVertex
from src.words.parser import parse_cyclic
from src.words.word import CyclicWord

logger = logging.getLogger(__name__)


class WhiteheadGraph:
    """Multigraph on the signed generators of an alphabet.

    The underlying ``networkx.MultiGraph`` keeps every vertex, isolated or
    not, in canonical letter order. Edges built from words carry ``word`` and
    ``position`` attributes naming the adjacency they came from.

    Attributes:
        alphabet: Alphabet whose signed generators are the vertices.
        words: The word system the graph was built from (empty for graphs
            given directly by edges).
        graph: The networkx multigraph.
    """

    def __init__(self, alphabet: Alphabet, graph: nx.MultiGraph, words: Sequence[CyclicWord] = ()):
        self.alphabet = alphabet
        self.graph = graph
        self.words: Tuple[CyclicWord, ...] = tuple(words)

    def vertices(self) -> List[SignedVertex]:
        return self.alphabet.letters()

    def edges(self) -> List[Tuple[SignedVertex, SignedVertex]]:
        return [(u, v) for u, v in self.graph.edges()]

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    def degree(self, vertex: SignedVertex) -> int:
        return self.graph.degree(vertex)

    def isolated(self) -> List[SignedVertex]:
        return [v for v in self.vertices() if self.graph.degree(v) == 0]

    def active(self) -> List[SignedVertex]:
        return [v for v in self.vertices() if self.graph.degree(v) > 0]

    def restricted(self, generators: Iterable[int]) -> "WhiteheadGraph":
        """Subgraph on the vertices of the given generators."""
        keep = set(generators)
        nodes = [v for v in self.vertices() if v.generator in keep]
        return WhiteheadGraph(self.alphabet, self.graph.subgraph(nodes).copy(), self.words)

    def is_connected(self, ignore_isolated: bool = False) -> bool:
        nodes = self.active() if ignore_isolated else list(self.graph.nodes)
        if not nodes:
            return True
        return nx.is_connected(self.graph.subgraph(nodes))

    def components(self, ignore_isolated: bool = True) -> List[List[SignedVertex]]:
        """Connected components, each sorted, listed by their least vertex."""
        nodes = self.active() if ignore_isolated else list(self.graph.nodes)
        comps = [sorted(c) for c in nx.connected_components(self.graph.subgraph(nodes))]
        return sorted(comps)

    def cut_vertices(self) -> List[SignedVertex]:
        """Articulation points over the non-isolated vertices, sorted."""
        simple = nx.Graph(self.graph.subgraph(self.active()))
        return sorted(nx.articulation_points(simple))

    def branches(self, vertex: SignedVertex) -> List[List[SignedVertex]]:
        """Components of G - vertex that are adjacent to vertex."""
        neighbours = set(self.graph.neighbors(vertex)) - {vertex}
        rest = self.graph.subgraph([v for v in self.active() if v != vertex])
        found = [sorted(c) for c in nx.connected_components(rest) if c & neighbours]
        return sorted(found)

    def edges_between(self, vertex: SignedVertex, group: Iterable[SignedVertex]) -> int:
        return sum(self.graph.number_of_edges(vertex, v) for v in set(group))

    def to_json(self) -> Dict:
        return graph_to_json(self)

    def to_dot(self, name: str = "whitehead") -> str:
        return graph_to_dot(self, name)


def _empty_graph(alphabet: Alphabet) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(alphabet.letters())
    return g


def build_graph(words: Sequence[CyclicWord], alphabet: Alphabet, allow_empty: bool = False) -> WhiteheadGraph:
    """Build the Whitehead graph of a cyclic-word system.

    Args:
        words: Cyclically reduced words over ``alphabet``.
        alphabet: The alphabet providing the vertices.
        allow_empty: Accept an empty word list.

    Returns:
        A graph with exactly one edge per cyclic adjacency.

    Raises:
        EmptyInputError: If ``words`` is empty and ``allow_empty`` is not set.
        AlphabetMismatchError: If a word is over another alphabet.
    """
    if not words and not allow_empty:
        raise EmptyInputError("Whitehead graph needs at least one word")
    g = _empty_graph(alphabet)
    for index, word in enumerate(words):
        if word.alphabet != alphabet:
            raise AlphabetMismatchError(f"Word {word} is over {word.alphabet}, expected {alphabet}")
        letters = word.letters
        n = len(letters)
        for position in range(n):
            first = letters[position]
            second = letters[(position + 1) % n]
            g.add_edge(first, second.inverse(), word=index, position=position)
    return WhiteheadGraph(alphabet, g, words)


def graph_from_edges(alphabet: Alphabet, edges: Iterable[Sequence[str]]) -> WhiteheadGraph:
    """Graph given directly by vertex-name pairs such as ``("x1+", "x2-")``.

    Raises:
        ParseError: If an edge is not a pair of vertex names.
    """
    g = _empty_graph(alphabet)
    for pair in edges:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ParseError(f"Edge {pair!r} must have two endpoints")
        g.add_edge(alphabet.parse_vertex(pair[0]), alphabet.parse_vertex(pair[1]))
    return WhiteheadGraph(alphabet, g)


def is_connected(g: WhiteheadGraph, ignore_isolated: bool = False) -> bool:
    return g.is_connected(ignore_isolated)


def cut_vertices(g: WhiteheadGraph) -> List[SignedVertex]:
    return g.cut_vertices()


def _words_label(g: WhiteheadGraph) -> str:
    return " ".join(str(w) for w in g.words)


def graph_to_json(g: WhiteheadGraph) -> Dict:
    name = g.alphabet.vertex_name
    return {
        "vertices": [name(v) for v in g.vertices()],
        "edges": [[name(u), name(v)] for u, v in g.edges()],
        "words": [str(w) for w in g.words],
    }


def graph_from_json(data: Dict, alphabet: Alphabet) -> WhiteheadGraph:
    g = graph_from_edges(alphabet, data.get("edges", []))
    if data.get("words"):
        g.words = tuple(parse_cyclic(text, alphabet) for text in data["words"])
    return g


def _dot_id(text: str) -> str:
    return json.dumps(text)


def graph_to_dot(g: WhiteheadGraph, name: str = "whitehead") -> str:
    """Undirected DOT text, one edge line per multi-edge.

    Vertex ids are ``<gen>+``/``<gen>-`` and the graph ``label`` attribute
    carries the word system in the word text format.
    """
    vname = g.alphabet.vertex_name
    lines = [f"graph {_dot_id(name)} {{", f"  label={_dot_id(_words_label(g))};"]
    lines.extend(f"  {_dot_id(vname(v))};" for v in g.vertices())
    lines.extend(f"  {_dot_id(vname(u))} -- {_dot_id(vname(v))};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
