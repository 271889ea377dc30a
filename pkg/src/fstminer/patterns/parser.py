"""Recursive-descent parser for pattern expressions.

Grammar (whitespace between tokens is ignored):

    union   := concat ('|' concat)*
    concat  := postfix+
    postfix := atom ('?' | '*' | '+' | '{' n '}' | '{' n ',' '}' | '{' n ',' m '}')*
    atom    := '(' union ')' | '[' union ']' | '.' '^'? | gid '='? '^'?
    gid     := [A-Za-z0-9_]+ | "'" (any char, with \\' and \\\\ escapes)+ "'"

Repetition binds tighter than concatenation, which binds tighter than union.
"""

from __future__ import annotations

from .ast import (
    GID_PATTERN,
    Capture,
    Concat,
    ItemExpr,
    Optional,
    PatternAst,
    Plus,
    Repeat,
    Star,
    Union,
    Wildcard,
)


DIGITS = "0123456789"


class PatternError(ValueError):
    def __init__(self, reason: str, position: int | None = None):
        # position is None for errors not tied to one place in the text
        message = reason if position is None else f"{reason} at offset {position}"
        super().__init__(message)
        self.reason = reason
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.index = 0
        self.capture_depth = 0

    def error(self, reason: str, index: int | None = None) -> PatternError:
        index = self.index if index is None else index
        # offsets are reported in bytes of the UTF-8 encoding
        return PatternError(reason, len(self.text[:index].encode("utf-8")))

    def skip_space(self):
        while self.index < len(self.text) and self.text[self.index].isspace():
            self.index += 1

    def peek(self) -> str:
        self.skip_space()
        if self.index < len(self.text):
            return self.text[self.index]
        return ""

    def expect(self, char: str):
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of pattern"
            raise self.error(f"Expected '{char}' but found {found}")
        self.index += 1

    def parse(self) -> PatternAst:
        if not self.peek():
            raise self.error("Empty pattern")
        ast = self.union()
        if self.peek():
            raise self.error(f"Unexpected '{self.peek()}'")
        return ast

    def union(self) -> PatternAst:
        children = [self.concat()]
        while self.peek() == "|":
            self.index += 1
            children.append(self.concat())
        return children[0] if len(children) == 1 else Union(tuple(children))

    def concat(self) -> PatternAst:
        children = []
        while self.peek() and self.peek() not in "|)]":
            children.append(self.postfix())
        if not children:
            raise self.error("Expected an expression")
        return children[0] if len(children) == 1 else Concat(tuple(children))

    def postfix(self) -> PatternAst:
        node = self.atom()
        while True:
            char = self.peek()
            if char == "?":
                node = Optional(node)
            elif char == "*":
                node = Star(node)
            elif char == "+":
                node = Plus(node)
            elif char == "{":
                node = self.repeat(node)
                continue
            else:
                return node
            self.index += 1

    def number(self) -> int:
        self.skip_space()
        start = self.index
        while self.index < len(self.text) and self.text[self.index] in DIGITS:
            self.index += 1
        if start == self.index:
            raise self.error("Expected a number")
        return int(self.text[start : self.index])

    def repeat(self, node: PatternAst) -> Repeat:
        start = self.index
        self.expect("{")
        lower = self.number()
        upper: int | None = lower
        if self.peek() == ",":
            self.index += 1
            upper = None if self.peek() == "}" else self.number()
        self.expect("}")
        if upper is not None and lower > upper:
            raise self.error(f"Invalid repetition {{{lower},{upper}}}", start)
        return Repeat(node, lower, upper)

    def atom(self) -> PatternAst:
        char = self.peek()
        start = self.index
        if char == "(":
            self.index += 1
            self.capture_depth += 1
            child = self.union()
            self.capture_depth -= 1
            self.expect(")")
            return Capture(child)
        if char == "[":
            self.index += 1
            child = self.union()
            self.expect("]")
            return child
        if char == ".":
            self.index += 1
            generalize = self.suffix("^")
            if generalize:
                self.check_captured(start)
            return Wildcard(generalize)
        if char == "'" or GID_PATTERN.match(char):
            gid = self.gid()
            exact = self.suffix("=")
            generalize = self.suffix("^")
            if generalize:
                self.check_captured(start)
            return ItemExpr(gid, exact, generalize)
        if char in "?*+{":
            raise self.error("Nothing to repeat")
        raise self.error(f"Unexpected '{char}'")

    def suffix(self, char: str) -> bool:
        if self.peek() == char:
            self.index += 1
            return True
        return False

    def check_captured(self, start: int):
        if self.capture_depth == 0:
            raise self.error("Generalization must be inside a capture group", start)

    def gid(self) -> str:
        if self.text[self.index] != "'":
            match = GID_PATTERN.match(self.text, self.index)
            assert match is not None
            self.index = match.end()
            return match.group()
        start = self.index
        self.index += 1
        chars = []
        while self.index < len(self.text):
            char = self.text[self.index]
            if char == "\\" and self.index + 1 < len(self.text):
                chars.append(self.text[self.index + 1])
                self.index += 2
                continue
            if char == "'":
                self.index += 1
                if not chars:
                    raise self.error("Empty quoted item", start)
                return "".join(chars)
            chars.append(char)
            self.index += 1
        raise self.error("Unterminated quoted item", start)


def parse(text: str) -> PatternAst:
    """Parse and validate a pattern expression.

    Raises PatternError on syntax errors, on `{n,m}` with n > m, and on
    generalizing item expressions outside of any capture group.
    """
    try:
        return _Parser(text).parse()
    except RecursionError:
        raise PatternError("Pattern is nested too deeply") from None
