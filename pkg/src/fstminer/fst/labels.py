from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

from fstminer.data import Dictionary


class InputKind(IntEnum):
    DOT = 0
    DESCENDANTS = 1
    EXACT = 2


class OutputKind(IntEnum):
    EPS = 0
    CONST = 1
    SELF = 2
    SELF_UP_TO = 3
    SELF_ALL = 4


@dataclass(frozen=True, order=True)
class InputLabel:
    """Set of input items a compressed transition consumes.

    `.` matches everything, `w` matches desc(w) and `w=` matches only w.
    """

    kind: InputKind
    item: int = 0

    @classmethod
    def dot(cls) -> InputLabel:
        return cls(InputKind.DOT)

    @classmethod
    def descendants(cls, item: int) -> InputLabel:
        return cls(InputKind.DESCENDANTS, item)

    @classmethod
    def exact(cls, item: int) -> InputLabel:
        return cls(InputKind.EXACT, item)

    def matches(self, item: int, dictionary: Dictionary) -> bool:
        if self.kind == InputKind.DOT:
            return True
        if self.kind == InputKind.EXACT:
            return item == self.item
        return dictionary.is_descendant(item, of=self.item)

    def matched_items(self, dictionary: Dictionary) -> Iterable[int]:
        if self.kind == InputKind.DOT:
            return iter(dictionary)
        if self.kind == InputKind.EXACT:
            return (self.item,)
        return sorted(dictionary.descendants(self.item))

    def to_text(self, dictionary: Dictionary) -> str:
        if self.kind == InputKind.DOT:
            return "."
        gid = dictionary.gid(self.item)
        return gid + "=" if self.kind == InputKind.EXACT else gid


@dataclass(frozen=True, order=True)
class OutputLabel:
    """Set of output items a compressed transition produces for a matched item t.

    eps → nothing, `w` → w, `$` → t, `$-w` → anc(t) ∩ desc(w), `$-*` → anc(t)
    """

    kind: OutputKind
    item: int = 0

    @classmethod
    def eps(cls) -> OutputLabel:
        return cls(OutputKind.EPS)

    @classmethod
    def const(cls, item: int) -> OutputLabel:
        return cls(OutputKind.CONST, item)

    @classmethod
    def self_(cls) -> OutputLabel:
        return cls(OutputKind.SELF)

    @classmethod
    def self_up_to(cls, item: int) -> OutputLabel:
        return cls(OutputKind.SELF_UP_TO, item)

    @classmethod
    def self_all(cls) -> OutputLabel:
        return cls(OutputKind.SELF_ALL)

    @property
    def is_eps(self) -> bool:
        return self.kind == OutputKind.EPS

    def expand(self, matched: int, dictionary: Dictionary) -> tuple[int, ...]:
        """Output items for matched input item `matched`, in hierarchy-BFS order."""
        if self.kind == OutputKind.EPS:
            return ()
        if self.kind == OutputKind.CONST:
            return (self.item,)
        if self.kind == OutputKind.SELF:
            return (matched,)
        ancestors = dictionary.ancestors_bfs(matched)
        if self.kind == OutputKind.SELF_ALL:
            return ancestors
        return tuple(
            item for item in ancestors if dictionary.is_descendant(item, of=self.item)
        )

    def to_text(self, dictionary: Dictionary) -> str:
        if self.kind == OutputKind.EPS:
            return "eps"
        if self.kind == OutputKind.CONST:
            return dictionary.gid(self.item)
        if self.kind == OutputKind.SELF:
            return "$"
        if self.kind == OutputKind.SELF_ALL:
            return "$-*"
        return "$-" + dictionary.gid(self.item)
