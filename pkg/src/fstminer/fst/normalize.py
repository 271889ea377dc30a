"""ε-elimination and size reduction of compressed FSTs.

`normalize` only applies merges that provably preserve the generated sets; it does
not attempt a full power-set determinization.
"""

from __future__ import annotations

from collections import defaultdict, deque

from loguru import logger

from .cfst import CFst, Transition


def _epsilon_closure(cfst: CFst) -> list[set[int]]:
    successors = defaultdict(list)
    for source, target in cfst.epsilons:
        successors[source].append(target)
    closures = []
    for state in cfst.states:
        closure = {state}
        stack = [state]
        while stack:
            for target in successors[stack.pop()]:
                if target not in closure:
                    closure.add(target)
                    stack.append(target)
        closures.append(closure)
    return closures


def eliminate_epsilon(cfst: CFst) -> CFst:
    """Language-equivalent machine without ε-transitions.

    A state inherits the labeled transitions of every state in its ε-closure and
    becomes final if its closure contains a final state. State ids are kept.
    """
    if not cfst.epsilons:
        return cfst
    closures = _epsilon_closure(cfst)
    transitions = set()
    for state in cfst.states:
        for member in closures[state]:
            for t in cfst.outgoing(member):
                transitions.add(Transition(state, t.input, t.output, t.target))
    finals = frozenset(q for q in cfst.states if closures[q] & cfst.finals)
    logger.debug(
        f"Removed {len(cfst.epsilons)} ε-transitions, "
        f"{len(cfst.transitions)} -> {len(transitions)} labeled transitions"
    )
    return CFst(
        num_states=cfst.num_states,
        initial=cfst.initial,
        finals=finals,
        transitions=tuple(sorted(transitions)),
    )


def _useful_states(
    initial: int, finals: set[int], transitions: set[Transition]
) -> set[int]:
    forward = defaultdict(set)
    backward = defaultdict(set)
    for t in transitions:
        forward[t.source].add(t.target)
        backward[t.target].add(t.source)

    def closure(start: set[int], edges: dict[int, set[int]]) -> set[int]:
        seen = set(start)
        stack = list(start)
        while stack:
            for target in edges[stack.pop()]:
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
        return seen

    return closure({initial}, forward) & closure(finals, backward)


class _Machine:
    """Mutable working copy used while normalizing."""

    def __init__(self, cfst: CFst):
        self.initial = cfst.initial
        self.finals = set(cfst.finals)
        self.transitions = set(cfst.transitions)

    def trim(self) -> bool:
        useful = _useful_states(self.initial, self.finals, self.transitions)
        kept = {
            t for t in self.transitions if t.source in useful and t.target in useful
        }
        finals = self.finals & useful
        changed = kept != self.transitions or finals != self.finals
        self.transitions, self.finals = kept, finals
        return changed

    def rename(self, mapping: dict[int, int]):
        self.initial = mapping.get(self.initial, self.initial)
        self.finals = {mapping.get(q, q) for q in self.finals}
        self.transitions = {
            Transition(
                mapping.get(t.source, t.source),
                t.input,
                t.output,
                mapping.get(t.target, t.target),
            )
            for t in self.transitions
        }

    def merge_local_targets(self) -> bool:
        """Merge targets reached from one state by identically labeled transitions.

        Only targets whose sole incoming transition is that one are merged; the
        merged state is final if any of them was.
        """
        incoming = defaultdict(list)
        for t in self.transitions:
            incoming[t.target].append(t)
        groups = defaultdict(list)
        for t in self.transitions:
            if t.target != self.initial and len(incoming[t.target]) == 1:
                if t.target != t.source:
                    groups[(t.source, t.input, t.output)].append(t.target)
        mapping = {}
        for targets in groups.values():
            if len(targets) > 1:
                representative = min(targets)
                for target in targets:
                    if target != representative:
                        mapping[target] = representative
        if not mapping:
            return False
        self.rename(mapping)
        logger.debug(f"Merged {len(mapping)} locally equivalent targets")
        return True

    def merge_identical_states(self) -> bool:
        """Merge states that agree on finality and on their outgoing transitions."""
        outgoing = defaultdict(set)
        states = {self.initial}
        for t in self.transitions:
            outgoing[t.source].add((t.input, t.output, t.target))
            states.update((t.source, t.target))
        by_signature = defaultdict(list)
        for state in states:
            signature = (state in self.finals, frozenset(outgoing[state]))
            by_signature[signature].append(state)
        mapping = {}
        for group in by_signature.values():
            if len(group) > 1:
                representative = min(group)
                for state in group:
                    if state != representative:
                        mapping[state] = representative
        if not mapping:
            return False
        self.rename(mapping)
        logger.debug(f"Merged {len(mapping)} states with identical transitions")
        return True

    def canonical(self) -> CFst:
        # BFS from the initial state, successors in label order
        outgoing = defaultdict(list)
        for t in self.transitions:
            outgoing[t.source].append(t)
        numbering = {self.initial: 0}
        queue = deque([self.initial])
        while queue:
            state = queue.popleft()
            for t in sorted(outgoing[state], key=lambda t: (t.input, t.output)):
                if t.target not in numbering:
                    numbering[t.target] = len(numbering)
                    queue.append(t.target)
        transitions = sorted(
            Transition(numbering[t.source], t.input, t.output, numbering[t.target])
            for t in self.transitions
        )
        return CFst(
            num_states=len(numbering),
            initial=0,
            finals=frozenset(numbering[q] for q in self.finals),
            transitions=tuple(transitions),
        )


def normalize(cfst: CFst) -> CFst:
    """Trim, deduplicate and merge states until nothing changes, then renumber.

    States are numbered in BFS order from the initial state (which becomes 0), so
    equal machines print identically. A machine that accepts nothing becomes a
    single non-final state without transitions.
    """
    assert not cfst.epsilons, "eliminate_epsilon must run before normalize"
    machine = _Machine(cfst)
    machine.trim()
    if machine.initial not in _useful_states(
        machine.initial, machine.finals, machine.transitions
    ):
        logger.warning("Pattern cannot match any input sequence")
        return CFst(num_states=1, initial=0, finals=frozenset(), transitions=())

    changed = True
    while changed:
        changed = machine.merge_local_targets()
        changed = machine.merge_identical_states() or changed
        changed = machine.trim() or changed

    result = machine.canonical()
    logger.debug(
        f"Normalized cFST: {cfst.num_states} -> {result.num_states} states, "
        f"{len(cfst.transitions)} -> {len(result.transitions)} transitions"
    )
    return result
