# ruff: noqa: F401
from .ast import (
    Capture,
    Concat,
    ItemExpr,
    ItemNode,
    Optional,
    PatternAst,
    Plus,
    Repeat,
    Star,
    Union,
    Wildcard,
    captured_spans,
    to_pattern,
)
from .parser import PatternError, parse
