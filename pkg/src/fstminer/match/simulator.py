from __future__ import annotations

from typing import Sequence

import numpy as np

from fstminer.data import Dictionary
from fstminer.fst import CFst, OutputLabel

Output = tuple[int, ...]
# expanded output items of one move (empty for ε) and its target state
Move = tuple[Output, int]


class Simulator:
    """Backtracking simulation of a cFST over single input sequences.

    Moves per (state, input item) are computed once and cached, so a simulator
    should be reused across the sequences of a database. In partial mode the cFST
    must have been compiled with `partial=True`; the buffered output is then
    emitted whenever a final state is reached, not only at the end of the input.
    """

    def __init__(self, cfst: CFst, dictionary: Dictionary, partial: bool = False):
        self.cfst = cfst
        self.dictionary = dictionary
        self.partial = partial
        self._delta: dict[tuple[int, int], tuple[tuple[OutputLabel, int], ...]] = {}
        self._moves: dict[tuple[int, int], tuple[Move, ...]] = {}

    def delta(self, state: int, item: int) -> tuple[tuple[OutputLabel, int], ...]:
        """(output label, target) of every transition from `state` matching `item`."""
        key = (state, item)
        if key not in self._delta:
            self._delta[key] = tuple(
                sorted(
                    {
                        (t.output, t.target)
                        for t in self.cfst.outgoing(state)
                        if t.input.matches(item, self.dictionary)
                    }
                )
            )
        return self._delta[key]

    def moves(self, state: int, item: int) -> tuple[Move, ...]:
        key = (state, item)
        if key not in self._moves:
            self._moves[key] = tuple(
                (output.expand(item, self.dictionary), target)
                for output, target in self.delta(state, item)
            )
        return self._moves[key]

    def accepts_at(self, state: int, pos: int, length: int) -> bool:
        return self.cfst.is_final(state) and (self.partial or pos == length)

    def generate(self, sequence: Sequence[int], sigma: int = 0) -> set[Output]:
        """All non-empty outputs of accepting runs over `sequence`.

        With `sigma > 0`, runs are abandoned as soon as they produce an item whose
        f-list frequency is below `sigma`.
        """
        if isinstance(sequence, np.ndarray):
            sequence = sequence.tolist()
        flist = self.dictionary.flist if sigma > 0 else None
        length = len(sequence)
        results: set[Output] = set()
        seen: set[tuple[int, int, Output]] = set()
        stack: list[tuple[int, int, Output]] = [(0, self.cfst.initial, ())]
        while stack:
            entry = stack.pop()
            if entry in seen:
                continue
            seen.add(entry)
            pos, state, buffer = entry
            if buffer and self.accepts_at(state, pos, length):
                results.add(buffer)
            if pos == length:
                continue
            for outputs, target in self.moves(state, sequence[pos]):
                if not outputs:
                    stack.append((pos + 1, target, buffer))
                    continue
                for item in outputs:
                    if flist is not None and flist[item] < sigma:
                        continue
                    stack.append((pos + 1, target, buffer + (item,)))
        return results


def delta(
    cfst: CFst, state: int, item: int, dictionary: Dictionary
) -> set[tuple[OutputLabel, int]]:
    return set(Simulator(cfst, dictionary).delta(state, item))


def generate(
    cfst: CFst, sequence: Sequence[int], dictionary: Dictionary, partial: bool = False
) -> set[Output]:
    return Simulator(cfst, dictionary, partial).generate(sequence)


def generate_filtered(
    cfst: CFst,
    sequence: Sequence[int],
    dictionary: Dictionary,
    sigma: int,
    partial: bool = False,
) -> set[Output]:
    """Generated outputs that contain only items with f-list frequency >= sigma."""
    assert sigma >= 1, sigma
    return Simulator(cfst, dictionary, partial).generate(sequence, sigma)
