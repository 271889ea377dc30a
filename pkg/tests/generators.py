"""Seeded random hierarchies, databases and patterns for property tests."""

from dataclasses import dataclass

import numpy as np
from fstminer.data import (
    Dictionary,
    SequenceDatabase,
    build_dictionary,
    compute_flist,
    load_sequences,
)
from fstminer.patterns import (
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
    to_pattern,
)


@dataclass
class Instance:
    dictionary: Dictionary
    db: SequenceDatabase
    pattern: str
    partial: bool


def random_hierarchy(
    rng: np.random.Generator, num_items: int, depth: int
) -> tuple[list[str], list[tuple[str, str]]]:
    """Items `i0..` spread over `depth` levels; non-roots get one or two parents."""
    items = [f"i{k}" for k in range(num_items)]
    levels = np.sort(rng.integers(0, depth, size=num_items))
    levels[0] = 0
    edges = []
    for item, level in zip(items, levels):
        candidates = [p for p, lvl in zip(items, levels) if lvl == level - 1]
        if not candidates:
            continue
        num_parents = 1 if rng.random() < 0.8 or len(candidates) == 1 else 2
        for parent in rng.choice(candidates, size=num_parents, replace=False):
            edges.append((item, str(parent)))
    return items, edges


def random_database(
    rng: np.random.Generator,
    items: list[str],
    num_sequences: int,
    max_length: int,
) -> list[list[str]]:
    # a small alphabet per database so that patterns have frequent matches
    alphabet = rng.choice(items, size=min(len(items), 6), replace=False)
    lengths = rng.integers(1, max_length + 1, size=num_sequences)
    return [[str(item) for item in rng.choice(alphabet, size=n)] for n in lengths]


def make_dataset(
    items: list[str], edges: list[tuple[str, str]], sequences: list[list[str]]
) -> tuple[Dictionary, SequenceDatabase]:
    dictionary = build_dictionary(edges, items)
    db = load_sequences("\n".join(" ".join(s) for s in sequences), dictionary)
    frozen = compute_flist(dictionary, db)
    return frozen, db.recode(dictionary, frozen)


def template_patterns(rng: np.random.Generator, items: list[str]) -> list[str]:
    """Instantiations of common constraint templates with random items and bounds."""
    x, y, z, w = (str(item) for item in rng.choice(items, size=4))
    n = int(rng.integers(1, 4))
    gap = int(rng.integers(0, 3))
    return [
        # n-grams, gap-constrained subsequences, generalized n-grams
        f"(.){{1,{n}}}",
        f"(.)[.{{0,{gap}}}(.)]{{1,{max(n - 1, 1)}}}",
        f"(.^){{1,{n}}}",
        # regular-expression constraints over arbitrary subsequences
        f"([{x}|{y}]) .* (.) .* ([{z}|{w}])",
        f"([{x}|{y}] . [{z}|{w}])",
        # relational phrases and typed variants
        f"{x} ({y}+ {z}+? {w}?) {x}",
        f"({x}^ {y}+ {z}+? {w}? {x}^)",
        f"({x}^ {y}=^) {z}? ({w}? {x}? {y})",
        f"(.^){{{n}}} {x}",
        "([.^ . .]|[. .^ .]|[. . .^])",
        # gap-constrained sequences of related items
        f"({x}^)[.{{0,{gap}}}({x}^)]{{1,2}}",
        f"({y})[.{{0,{gap}}}({y})]{{1,2}}",
        f"{z}[.{{0,{gap}}}(.^)]{{1,2}}",
    ]


def _item(rng: np.random.Generator, items: list[str], captured: bool) -> PatternAst:
    forms = ["w", "w=", "."]
    if captured:
        forms += ["w^", "w=^", ".^"]
    form = forms[rng.integers(len(forms))]
    if form.startswith("."):
        return Wildcard(generalize=form == ".^")
    gid = str(rng.choice(items))
    return ItemExpr(gid, exact="=" in form, generalize="^" in form)


def random_ast(
    rng: np.random.Generator,
    items: list[str],
    depth: int = 3,
    captured: bool = False,
) -> PatternAst:
    """Random pattern using every operator and all six item forms."""
    if depth == 0 or rng.random() < 0.3:
        if not captured and rng.random() < 0.5:
            return Capture(_item(rng, items, True))
        return _item(rng, items, captured)
    kind = rng.choice(
        ["concat", "concat", "union", "optional", "star", "plus", "repeat", "capture"]
    )

    def child() -> PatternAst:
        return random_ast(rng, items, depth - 1, captured)

    if kind == "concat":
        return Concat(tuple(child() for _ in range(int(rng.integers(2, 4)))))
    if kind == "union":
        return Union((child(), child()))
    if kind == "optional":
        return Optional(child())
    if kind == "star":
        return Star(child())
    if kind == "plus":
        return Plus(child())
    if kind == "repeat":
        low = int(rng.integers(0, 3))
        high = None if rng.random() < 0.2 else low + int(rng.integers(0, 2))
        return Repeat(child(), low, high)
    if captured:
        return child()
    return Capture(random_ast(rng, items, depth - 1, True))


def random_instance(rng: np.random.Generator) -> Instance:
    num_items = int(rng.integers(4, 13))
    items, edges = random_hierarchy(rng, num_items, depth=int(rng.integers(1, 4)))
    if rng.random() < 0.5:
        pattern = str(rng.choice(template_patterns(rng, items)))
    else:
        pattern = to_pattern(random_ast(rng, items))
    partial = bool(rng.random() < 0.5)
    unbounded = "*" in pattern or "+" in pattern or ",}" in pattern
    max_length = 6 if unbounded or partial else 8
    sequences = random_database(
        rng, items, int(rng.integers(5, 16)), max_length=max_length
    )
    dictionary, db = make_dataset(items, edges, sequences)
    return Instance(dictionary, db, pattern, partial)
