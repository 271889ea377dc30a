from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from fstminer.data import Dictionary

from .labels import InputLabel, OutputLabel


@dataclass(frozen=True, order=True)
class Transition:
    source: int
    input: InputLabel
    output: OutputLabel
    target: int

    def to_text(self, dictionary: Dictionary) -> str:
        return (
            f"{self.source}\t{self.input.to_text(dictionary)}"
            f"\t{self.output.to_text(dictionary)}\t{self.target}"
        )


@dataclass(frozen=True)
class CFst:
    """Compressed finite-state transducer.

    States are 0..num_states-1. `epsilons` holds (source, target) pairs and is only
    non-empty for freshly compiled machines; `eliminate_epsilon` removes them.
    """

    num_states: int
    initial: int
    finals: frozenset[int]
    transitions: tuple[Transition, ...]
    epsilons: tuple[tuple[int, int], ...] = ()
    _outgoing: dict[int, tuple[Transition, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        assert 0 <= self.initial < self.num_states, self.initial
        outgoing = defaultdict(list)
        for transition in self.transitions:
            assert 0 <= transition.source < self.num_states, transition
            assert 0 <= transition.target < self.num_states, transition
            outgoing[transition.source].append(transition)
        object.__setattr__(
            self, "_outgoing", {q: tuple(ts) for q, ts in outgoing.items()}
        )

    @property
    def states(self) -> range:
        return range(self.num_states)

    def outgoing(self, state: int) -> tuple[Transition, ...]:
        return self._outgoing.get(state, ())

    def is_final(self, state: int) -> bool:
        return state in self.finals

    def dump(self, dictionary: Dictionary) -> list[str]:
        """One `from<TAB>in<TAB>out<TAB>to` line per transition, in sorted order."""
        return [t.to_text(dictionary) for t in sorted(self.transitions)]

    def check_output_restriction(self, dictionary: Dictionary):
        """Assert that every output a transition can produce generalizes its input."""
        for transition in self.transitions:
            for item in transition.input.matched_items(dictionary):
                ancestors = dictionary.ancestors(item)
                for produced in transition.output.expand(item, dictionary):
                    assert produced in ancestors, (
                        transition.to_text(dictionary),
                        dictionary.gid(item),
                        dictionary.gid(produced),
                    )
