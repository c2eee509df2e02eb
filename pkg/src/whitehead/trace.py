from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.words.alphabet import Alphabet
from src.words.word import CyclicWord
from .moves import WhiteheadMove, apply_move, total_length

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MoveRecord:
    """A single applied move with the systems before and after it."""

    move: WhiteheadMove
    before: Tuple[CyclicWord, ...]
    after: Tuple[CyclicWord, ...]

    @property
    def length_change(self) -> int:
        return total_length(self.after) - total_length(self.before)

    def to_dict(self, alphabet: Alphabet) -> Dict:
        return {
            "move": self.move.format(alphabet),
            "before": [str(w) for w in self.before],
            "after": [str(w) for w in self.after],
            "length_change": self.length_change,
        }


@dataclass
class RollbackResult:
    """Result of undoing one recorded move."""

    move: WhiteheadMove
    restored: bool
    error_message: Optional[str] = None


class MoveTrace:
    """Ordered track of Whitehead moves with rollback and redo.

    Typical usage:
        trace = MoveTrace(alphabet)
        words = trace.apply(move, words)

        # Undo the last move, checking the inverse reproduces the recorded input:
        trace.rollback(1)

        # Re-apply what was rolled back, in original order:
        trace.redo()
    """

    def __init__(self, alphabet: Alphabet) -> None:
        self.alphabet = alphabet
        self._track: List[MoveRecord] = []
        self._undone: List[MoveRecord] = []

    # Tracking
    def apply(self, move: WhiteheadMove, words: Sequence[CyclicWord]) -> List[CyclicWord]:
        moved, _ = apply_move(move, words, self.alphabet)
        self.record(move, words, moved)
        return moved

    def record(self, move: WhiteheadMove, before: Sequence[CyclicWord], after: Sequence[CyclicWord]) -> None:
        self._track.append(MoveRecord(move, tuple(before), tuple(after)))
        self._undone.clear()

    def clear(self) -> None:
        self._track.clear()
        self._undone.clear()

    def get_track(self) -> List[MoveRecord]:
        return list(self._track)

    def moves(self) -> List[WhiteheadMove]:
        return [record.move for record in self._track]

    def current(self) -> Optional[Tuple[CyclicWord, ...]]:
        return self._track[-1].after if self._track else None

    def __len__(self) -> int:
        return len(self._track)

    # Rollback and redo
    def rollback(self, steps: Optional[int] = None) -> List[RollbackResult]:
        """Undo the last ``steps`` moves (all when None) with their inverses.

        Each inverse is applied to the recorded output and must reproduce the
        recorded input; a mismatch is reported, not raised.
        """
        count = len(self._track) if steps is None else min(steps, len(self._track))
        results: List[RollbackResult] = []
        for _ in range(count):
            record = self._track.pop()
            restored, _ = apply_move(record.move.inverse(), record.after, self.alphabet)
            if tuple(restored) == record.before:
                results.append(RollbackResult(record.move, True))
            else:
                logger.warning("rollback of %s did not restore the recorded system",
                               record.move.format(self.alphabet))
                results.append(RollbackResult(record.move, False, "inverse did not restore the recorded system"))
            self._undone.append(record)
        return results

    def redo(self) -> List[MoveRecord]:
        """Re-apply rolled-back moves in their original order."""
        redone: List[MoveRecord] = []
        while self._undone:
            record = self._undone.pop()
            moved, _ = apply_move(record.move, record.before, self.alphabet)
            new_record = MoveRecord(record.move, record.before, tuple(moved))
            self._track.append(new_record)
            redone.append(new_record)
        return redone

    def to_list(self) -> List[Dict]:
        return [record.to_dict(self.alphabet) for record in self._track]
