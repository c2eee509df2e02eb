"""Separability and diskbusting decisions for cyclic-word systems.

A system whose Whitehead graph is connected with no cut vertex meets every
essential disk. A graph that is disconnected, or a generator that no word
uses, shows the system misses some disk. A cut vertex always admits a
strictly shortening move, so the descent below terminates.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Deque, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.utils.errors import AlphabetMismatchError, EmptyInputError
from src.words.alphabet import Alphabet, SignedVertex
from src.words.word import CyclicWord, Word, compose, identity_images, substitute
from .graph import WhiteheadGraph, build_graph
from .moves import WhiteheadMove, apply_move, enumerate_moves, total_length
from .trace import MoveTrace

logger = logging.getLogger(__name__)

DEFAULT_BOUND = 10_000

SystemKey = Tuple[Tuple, ...]


class Verdict(str, Enum):
    DISKBUSTING = "Diskbusting"
    SEPARABLE = "Separable"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class SeparabilityWitness:
    """Evidence that a system misses some disk.

    Attributes:
        images: Automorphism (generator images) taking the input system to
            ``words``.
        words: The transformed system.
        omitted: A generator no transformed word uses, if found.
        partition: Vertex components of a disconnected graph, if that is the
            evidence instead.
    """

    images: Dict[int, Word]
    words: List[CyclicWord]
    omitted: Optional[int] = None
    partition: Optional[List[List[SignedVertex]]] = None

    def verify(self, original: Sequence[CyclicWord]) -> bool:
        """Re-derive the evidence from the original system."""
        moved = [CyclicWord.of(substitute(w, self.images)) for w in original]
        if moved != list(self.words):
            return False
        if self.omitted is not None:
            return omits_generator(moved, self.omitted)
        alphabet = moved[0].alphabet
        return not build_graph(moved, alphabet).is_connected()

    def to_dict(self, alphabet: Alphabet) -> Dict:
        return {
            "automorphism": {alphabet.names[g]: str(w) for g, w in sorted(self.images.items())},
            "words": [str(w) for w in self.words],
            "omitted": alphabet.names[self.omitted] if self.omitted is not None else None,
            "partition": (
                [[alphabet.vertex_name(v) for v in part] for part in self.partition]
                if self.partition is not None else None
            ),
        }


@dataclass
class DecisionResult:
    """Outcome of ``decide_separable``.

    Attributes:
        verdict: Diskbusting, Separable or Inconclusive.
        alphabet: Alphabet of the decided system.
        trace: Moves applied by the cut-vertex descent, in order.
        words: The system the verdict was read from.
        witness: Separability evidence for a Separable verdict.
        bound: The exhausted state bound for an Inconclusive verdict.
        states: Number of systems examined.
    """

    verdict: Verdict
    alphabet: Alphabet
    trace: List[WhiteheadMove] = field(default_factory=list)
    words: List[CyclicWord] = field(default_factory=list)
    witness: Optional[SeparabilityWitness] = None
    bound: Optional[int] = None
    states: int = 0
    steps: List[Dict] = field(default_factory=list)

    @property
    def is_diskbusting(self) -> bool:
        return self.verdict == Verdict.DISKBUSTING

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict.value,
            "trace": [m.format(self.alphabet) for m in self.trace],
            "steps": self.steps,
            "words": [str(w) for w in self.words],
            "witness": self.witness.to_dict(self.alphabet) if self.witness else None,
            "bound": self.bound,
            "states": self.states,
        }


def omits_generator(words: Iterable[CyclicWord], generator: int) -> bool:
    """True iff no word contains the generator or its inverse."""
    return all(w.omits(generator) for w in words)


def _omitted(words: Sequence[CyclicWord], scope: Iterable[int]) -> Optional[int]:
    for g in sorted(scope):
        if omits_generator(words, g):
            return g
    return None


def system_key(words: Sequence[CyclicWord]) -> SystemKey:
    return tuple(sorted(w.letters for w in words))


def cut_vertex_move(graph: WhiteheadGraph, vertex: SignedVertex) -> WhiteheadMove:
    """The shortening move at a cut vertex a.

    A is a plus the smallest branch of G - a not containing a⁻¹, ties broken
    by vertex order. The total length drops by the number of edges from a
    into that branch.
    """
    candidates = [b for b in graph.branches(vertex) if vertex.inverse() not in b]
    branch = min(candidates, key=lambda b: (len(b), b))
    return WhiteheadMove.type_two(graph.alphabet.rank, set(branch) | {vertex}, vertex)


def _common_alphabet(words: Sequence[CyclicWord]) -> Alphabet:
    alphabets = {w.alphabet for w in words}
    if len(alphabets) != 1:
        raise AlphabetMismatchError("Words are over different alphabets")
    return alphabets.pop()


def _classify(words: List[CyclicWord], alphabet: Alphabet, images: Dict[int, Word]):
    """Verdict readable from the graph alone, or None when a cut vertex remains."""
    omitted = _omitted(words, range(alphabet.rank))
    if omitted is not None:
        return Verdict.SEPARABLE, SeparabilityWitness(images, words, omitted=omitted), None
    graph = build_graph(words, alphabet)
    if not graph.is_connected():
        witness = SeparabilityWitness(images, words, partition=graph.components())
        return Verdict.SEPARABLE, witness, None
    cuts = graph.cut_vertices()
    if not cuts:
        return Verdict.DISKBUSTING, None, None
    return None, None, (graph, cuts)


def decide_separable(words: Sequence[CyclicWord], bound: int = DEFAULT_BOUND) -> DecisionResult:
    """Decide whether a cyclic-word system is diskbusting or separable.

    The Whitehead graph is read first: an omitted generator or a disconnected
    graph gives Separable, a connected graph without cut vertex gives
    Diskbusting. Otherwise the move at the first cut vertex is applied and
    the loop repeats. Each such move strictly shortens the system. If a
    system repeats or ``bound`` moves are exceeded, a breadth-first search
    over non-lengthening moves takes over; exhausting it yields Inconclusive.

    Args:
        words: Cyclically reduced words over one alphabet.
        bound: Maximum number of systems examined.

    Returns:
        The decision with its move trace and witness.

    Raises:
        EmptyInputError: If ``words`` is empty.
    """
    if not words:
        raise EmptyInputError("decide_separable needs at least one word")
    alphabet = _common_alphabet(words)
    current = list(words)
    images = identity_images(alphabet)
    trace = MoveTrace(alphabet)
    visited: Set[SystemKey] = {system_key(current)}

    while True:
        verdict, witness, pending = _classify(current, alphabet, images)
        if verdict is not None:
            logger.debug("decide: %s after %d moves", verdict.value, len(trace))
            return DecisionResult(verdict, alphabet, trace.moves(), current, witness,
                                  states=len(visited), steps=trace.to_list())
        graph, cuts = pending
        move = cut_vertex_move(graph, cuts[0])
        moved, move_images = apply_move(move, current, alphabet)
        key = system_key(moved)
        if key in visited or len(visited) >= bound:
            logger.info("decide: descent stalled at %s, falling back to search", move.format(alphabet))
            return _search(current, alphabet, images, trace, bound, visited)
        trace.record(move, current, moved)
        visited.add(key)
        images = compose(move_images, images)
        current = moved


def _search(start: List[CyclicWord], alphabet: Alphabet, images: Dict[int, Word],
            trace: MoveTrace, bound: int, visited: Set[SystemKey]) -> DecisionResult:
    """Breadth-first search over non-lengthening moves in a fixed order."""
    prefix = trace.moves()
    queue: Deque[Tuple[List[CyclicWord], Dict[int, Word], List[WhiteheadMove]]] = deque(
        [(start, images, [])]
    )
    seen: Set[SystemKey] = {system_key(start)}
    moves = list(enumerate_moves(alphabet))
    while queue:
        words, words_images, path = queue.popleft()
        length = total_length(words)
        for move in moves:
            moved, move_images = apply_move(move, words, alphabet)
            key = system_key(moved)
            if total_length(moved) > length or key in seen:
                continue
            if len(seen) + len(visited) >= bound:
                return DecisionResult(Verdict.INCONCLUSIVE, alphabet, prefix + path, words,
                                      bound=bound, states=len(seen) + len(visited),
                                      steps=trace.to_list())
            seen.add(key)
            new_images = compose(move_images, words_images)
            verdict, witness, _ = _classify(moved, alphabet, new_images)
            if verdict is not None:
                return DecisionResult(verdict, alphabet, prefix + path + [move], moved, witness,
                                      states=len(seen) + len(visited), steps=trace.to_list())
            queue.append((moved, new_images, path + [move]))
    return DecisionResult(Verdict.INCONCLUSIVE, alphabet, prefix, start, bound=bound,
                          states=len(seen) + len(visited), steps=trace.to_list())


@dataclass
class OmissionWitness:
    """A basis change under which every word of a system omits a generator."""

    images: Dict[int, Word]
    words: List[CyclicWord]
    omitted: int
    moves: List[WhiteheadMove] = field(default_factory=list)

    def verify(self, original: Sequence[CyclicWord]) -> bool:
        moved = [CyclicWord.of(substitute(w, self.images)) for w in original]
        return moved == list(self.words) and omits_generator(moved, self.omitted)


def omission_search(words: Sequence[CyclicWord], bound: int = DEFAULT_BOUND,
                    scope: Optional[Iterable[int]] = None) -> Optional[OmissionWitness]:
    """Find an automorphism after which every word omits some generator.

    Descends along shortening moves read off the graph on the generators in
    ``scope``: cut-vertex moves, and for a disconnected graph the move (C, a)
    for a component C holding a but not a⁻¹. When every component is closed
    under inversion the words split along the components, and each part is
    searched on its own generators.

    Returns:
        The witness, or None when the system meets every disk of its factor
        or ``bound`` moves were spent.
    """
    if not words:
        raise EmptyInputError("omission_search needs at least one word")
    alphabet = _common_alphabet(words)
    scope = sorted(set(range(alphabet.rank) if scope is None else scope))
    return _omission(list(words), alphabet, scope, bound)


def _omission(words: List[CyclicWord], alphabet: Alphabet, scope: List[int],
              budget: int) -> Optional[OmissionWitness]:
    images = identity_images(alphabet)
    applied: List[WhiteheadMove] = []
    current = words
    while len(applied) <= budget:
        omitted = _omitted(current, scope)
        if omitted is not None:
            return OmissionWitness(images, current, omitted, applied)
        graph = build_graph(current, alphabet).restricted(scope)
        move = None
        if graph.is_connected():
            cuts = graph.cut_vertices()
            if not cuts:
                return None
            move = cut_vertex_move(graph, cuts[0])
        else:
            components = graph.components()
            for component in components:
                open_vertex = next((v for v in component if v.inverse() not in component), None)
                if open_vertex is not None:
                    move = WhiteheadMove.type_two(alphabet.rank, component, open_vertex)
                    break
            if move is None:
                return _split_search(current, alphabet, components, images, applied, budget - len(applied))
        current, move_images = apply_move(move, current, alphabet)
        images = compose(move_images, images)
        applied.append(move)
    return None


def _split_search(words: List[CyclicWord], alphabet: Alphabet, components: List[List[SignedVertex]],
                  images: Dict[int, Word], applied: List[WhiteheadMove],
                  budget: int) -> Optional[OmissionWitness]:
    for component in components:
        part_scope = sorted({v.generator for v in component})
        part = [w for w in words if w.letters and w.letters[0].generator in part_scope]
        found = _omission(part, alphabet, part_scope, budget)
        if found is None:
            continue
        moved = [CyclicWord.of(substitute(w, found.images)) for w in words]
        if omits_generator(moved, found.omitted):
            return OmissionWitness(compose(found.images, images), moved, found.omitted,
                                   applied + found.moves)
    return None
