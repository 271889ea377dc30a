from __future__ import annotations

import re
from dataclasses import dataclass

GID_PATTERN = re.compile(r"[A-Za-z0-9_]+")


@dataclass(frozen=True)
class ItemExpr:
    """`w` (descendants of w), `w=` (exactly w), with `^` for generalization."""

    gid: str
    exact: bool = False
    generalize: bool = False


@dataclass(frozen=True)
class Wildcard:
    generalize: bool = False


@dataclass(frozen=True)
class Capture:
    child: PatternAst


@dataclass(frozen=True)
class Concat:
    children: tuple[PatternAst, ...]


@dataclass(frozen=True)
class Union:
    children: tuple[PatternAst, ...]


@dataclass(frozen=True)
class Repeat:
    child: PatternAst
    min: int
    max: int | None  # None means unbounded

    def __post_init__(self):
        assert self.min >= 0, self.min
        assert self.max is None or self.min <= self.max, (self.min, self.max)


@dataclass(frozen=True)
class Optional:
    child: PatternAst


@dataclass(frozen=True)
class Star:
    child: PatternAst


@dataclass(frozen=True)
class Plus:
    child: PatternAst


PatternAst = (
    ItemExpr | Wildcard | Capture | Concat | Union | Repeat | Optional | Star | Plus
)
ItemNode = ItemExpr | Wildcard
POSTFIX = (Repeat, Optional, Star, Plus)


def captured_spans(ast: PatternAst) -> list[tuple[ItemNode, bool]]:
    """Item-level nodes in left-to-right order, each with whether it is captured."""
    spans: list[tuple[ItemNode, bool]] = []
    stack: list[tuple[PatternAst, bool]] = [(ast, False)]
    while stack:
        node, captured = stack.pop()
        if isinstance(node, (ItemExpr, Wildcard)):
            spans.append((node, captured))
        elif isinstance(node, Capture):
            stack.append((node.child, True))
        elif isinstance(node, (Concat, Union)):
            stack.extend((child, captured) for child in reversed(node.children))
        else:
            stack.append((node.child, captured))
    return spans


def _format_gid(gid: str) -> str:
    if GID_PATTERN.fullmatch(gid):
        return gid
    escaped = gid.replace("\\", "\\\\").replace("'", "\\'")
    return f"'{escaped}'"


def _level(node: PatternAst) -> int:
    if isinstance(node, Union):
        return 0
    if isinstance(node, Concat):
        return 1
    if isinstance(node, POSTFIX):
        return 2
    return 3


def _print_at(node: PatternAst, level: int) -> str:
    text = to_pattern(node)
    if _level(node) < level:
        return f"[{text}]"
    return text


def to_pattern(ast: PatternAst) -> str:
    """Canonical surface syntax; `parse(to_pattern(ast)) == ast`."""
    if isinstance(ast, ItemExpr):
        return (
            _format_gid(ast.gid)
            + ("=" if ast.exact else "")
            + ("^" if ast.generalize else "")
        )
    if isinstance(ast, Wildcard):
        return ".^" if ast.generalize else "."
    if isinstance(ast, Capture):
        return f"({to_pattern(ast.child)})"
    if isinstance(ast, Concat):
        return " ".join(_print_at(child, 2) for child in ast.children)
    if isinstance(ast, Union):
        return "|".join(_print_at(child, 1) for child in ast.children)
    operand = _print_at(ast.child, 3)
    if isinstance(ast, Optional):
        return operand + "?"
    if isinstance(ast, Star):
        return operand + "*"
    if isinstance(ast, Plus):
        return operand + "+"
    if ast.max is None:
        return f"{operand}{{{ast.min},}}"
    if ast.min == ast.max:
        return f"{operand}{{{ast.min}}}"
    return f"{operand}{{{ast.min},{ast.max}}}"
