"""Thompson-style translation of pattern ASTs into compressed FSTs.

Every item expression becomes a two-state fragment with a single labeled
transition; the operators wire fragments together with ε-transitions.
"""

from __future__ import annotations

from loguru import logger

from fstminer.data import Dictionary
from fstminer.patterns import (
    Capture,
    Concat,
    ItemExpr,
    Optional,
    PatternAst,
    PatternError,
    Plus,
    Repeat,
    Star,
    Union,
    Wildcard,
    parse,
)

from .cfst import CFst, Transition
from .labels import InputLabel, OutputLabel
from .normalize import eliminate_epsilon, normalize

Fragment = tuple[int, int]


def item_labels(
    node: ItemExpr | Wildcard, captured: bool, dictionary: Dictionary
) -> tuple[InputLabel, OutputLabel] | None:
    """Input and output label of the single transition an item expression becomes.

    Returns None for items the dictionary does not know; they match nothing.
    """
    if isinstance(node, Wildcard):
        if not captured:
            return InputLabel.dot(), OutputLabel.eps()
        if node.generalize:
            return InputLabel.dot(), OutputLabel.self_all()
        return InputLabel.dot(), OutputLabel.self_()

    if node.gid not in dictionary:
        return None
    item = dictionary.fid(node.gid)
    if not captured:
        if node.exact:
            return InputLabel.exact(item), OutputLabel.eps()
        return InputLabel.descendants(item), OutputLabel.eps()
    if node.exact and node.generalize:
        return InputLabel.descendants(item), OutputLabel.const(item)
    if node.exact:
        return InputLabel.exact(item), OutputLabel.const(item)
    if node.generalize:
        return InputLabel.descendants(item), OutputLabel.self_up_to(item)
    return InputLabel.descendants(item), OutputLabel.self_()


class _Builder:
    def __init__(self, dictionary: Dictionary):
        self.dictionary = dictionary
        self.num_states = 0
        self.transitions: list[Transition] = []
        self.epsilons: list[tuple[int, int]] = []
        self.unknown: set[str] = set()

    def state(self) -> int:
        self.num_states += 1
        return self.num_states - 1

    def epsilon(self, source: int, target: int):
        self.epsilons.append((source, target))

    def build(self, node: PatternAst, captured: bool = False) -> Fragment:
        if isinstance(node, (ItemExpr, Wildcard)):
            start, end = self.state(), self.state()
            labels = item_labels(node, captured, self.dictionary)
            if labels is None:
                if node.gid not in self.unknown:
                    self.unknown.add(node.gid)
                    logger.warning(f"Unknown item '{node.gid}' matches nothing")
                return start, end
            self.transitions.append(Transition(start, *labels, end))
            return start, end
        if isinstance(node, Capture):
            return self.build(node.child, True)
        if isinstance(node, Concat):
            return self.chain(list(node.children), captured)
        if isinstance(node, Union):
            start, end = self.state(), self.state()
            for child in node.children:
                child_start, child_end = self.build(child, captured)
                self.epsilon(start, child_start)
                self.epsilon(child_end, end)
            return start, end
        if isinstance(node, Optional):
            return self.repeat(node.child, 0, 1, captured)
        if isinstance(node, Star):
            return self.repeat(node.child, 0, None, captured)
        if isinstance(node, Plus):
            return self.repeat(node.child, 1, None, captured)
        if isinstance(node, Repeat):
            return self.repeat(node.child, node.min, node.max, captured)
        raise TypeError(f"Unknown pattern node {node!r}")

    def chain(self, nodes: list[PatternAst], captured: bool) -> Fragment:
        start, end = self.build(nodes[0], captured)
        for node in nodes[1:]:
            next_start, next_end = self.build(node, captured)
            self.epsilon(end, next_start)
            end = next_end
        return start, end

    def repeat(
        self, node: PatternAst, minimum: int, maximum: int | None, captured: bool
    ) -> Fragment:
        start = self.state()
        current = start
        last: Fragment | None = None
        for _ in range(minimum):
            last = self.build(node, captured)
            self.epsilon(current, last[0])
            current = last[1]

        end = self.state()
        if maximum is None:
            if last is None:
                # x{0,} is x*
                last = self.build(node, captured)
                self.epsilon(current, last[0])
                self.epsilon(current, end)
                current = last[1]
            self.epsilon(last[1], last[0])
        else:
            # (maximum - minimum) nested optional copies
            for _ in range(maximum - minimum):
                copy_start, copy_end = self.build(node, captured)
                self.epsilon(current, copy_start)
                self.epsilon(current, end)
                current = copy_end
        self.epsilon(current, end)
        return start, end


def compile_pattern(
    ast: PatternAst, dictionary: Dictionary, partial: bool = False
) -> CFst:
    """Translate `ast` into a cFST that may still contain ε-transitions.

    With `partial=True` an uncaptured `.*` is put in front of the pattern so that
    matches may start anywhere in the input.
    """
    if partial:
        ast = Concat((Star(Wildcard()), ast))
    builder = _Builder(dictionary)
    try:
        start, end = builder.build(ast)
    except RecursionError:
        raise PatternError("Pattern is nested too deeply") from None
    return CFst(
        num_states=builder.num_states,
        initial=start,
        finals=frozenset([end]),
        transitions=tuple(builder.transitions),
        epsilons=tuple(builder.epsilons),
    )


def build_cfst(pattern: str, dictionary: Dictionary, partial: bool = False) -> CFst:
    """Parse, compile and normalize a pattern expression."""
    cfst = normalize(
        eliminate_epsilon(compile_pattern(parse(pattern), dictionary, partial))
    )
    logger.info(
        f"Compiled pattern {pattern!r} to a cFST with {cfst.num_states} states "
        f"and {len(cfst.transitions)} transitions"
    )
    return cfst
