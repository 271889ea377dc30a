from __future__ import annotations

from dataclasses import dataclass

from fstminer.data import Dictionary

from .cfst import CFst

EPSILON = 0


@dataclass(frozen=True)
class UncompressedFst:
    """FST over concrete items; an output of `EPSILON` (fid 0) means no output."""

    num_states: int
    initial: int
    finals: frozenset[int]
    # (source, input fid, output fid or EPSILON, target)
    transitions: tuple[tuple[int, int, int, int], ...]


def expand(cfst: CFst, dictionary: Dictionary) -> UncompressedFst:
    """Replace every compressed transition by the concrete transitions it stands for."""
    assert not cfst.epsilons
    transitions = set()
    for t in cfst.transitions:
        for item in t.input.matched_items(dictionary):
            outputs = t.output.expand(item, dictionary) or (EPSILON,)
            for output in outputs:
                assert output == EPSILON or output in dictionary.ancestors(item)
                transitions.add((t.source, item, output, t.target))
    return UncompressedFst(
        num_states=cfst.num_states,
        initial=cfst.initial,
        finals=cfst.finals,
        transitions=tuple(sorted(transitions)),
    )
