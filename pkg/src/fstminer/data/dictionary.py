from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np
from loguru import logger

from ._shared import DataError, HierarchyError

if TYPE_CHECKING:
    from .sequences import SequenceDatabase


@dataclass(frozen=True)
class Item:
    gid: str
    fid: int
    parents: tuple[int, ...]


class Dictionary:
    """Vocabulary, item hierarchy and (once frozen) the f-list.

    Items are identified by integer fids in 1..len(self). Before `compute_flist`
    fids are handed out in registration order and the dictionary can still grow;
    `compute_flist` returns a frozen copy whose fids follow descending frequency
    (ties broken by gid).
    """

    def __init__(self):
        # index 0 is unused so that fids can index directly
        self._gids: list[str] = [""]
        self._fids: dict[str, int] = {}
        self._parents: list[list[int]] = [[]]
        self._children: list[list[int]] = [[]]
        self._flist: np.ndarray | None = None
        self._ancestors: dict[int, frozenset[int]] = {}
        self._ancestors_bfs: dict[int, tuple[int, ...]] = {}
        self._descendants: dict[int, frozenset[int]] = {}

    def __len__(self) -> int:
        return len(self._gids) - 1

    def __contains__(self, gid: str) -> bool:
        return gid in self._fids

    def __iter__(self):
        return iter(range(1, len(self._gids)))

    @property
    def frozen(self) -> bool:
        return self._flist is not None

    def add_item(self, gid: str) -> int:
        if gid in self._fids:
            return self._fids[gid]
        if self.frozen:
            raise DataError(f"Cannot add item '{gid}' to a frozen dictionary")
        if not gid:
            raise DataError("Item gids must be non-empty")
        fid = len(self._gids)
        self._gids.append(gid)
        self._fids[gid] = fid
        self._parents.append([])
        self._children.append([])
        return fid

    def add_edge(self, child: str, parent: str) -> bool:
        """Add `child => parent`. Returns False if the edge was already present."""
        if self.frozen:
            raise DataError("Cannot change the hierarchy of a frozen dictionary")
        child_fid = self.add_item(child)
        parent_fid = self.add_item(parent)
        if parent_fid in self._parents[child_fid]:
            return False
        self._parents[child_fid].append(parent_fid)
        self._children[parent_fid].append(child_fid)
        self._clear_caches()
        return True

    def fid(self, gid: str) -> int:
        try:
            return self._fids[gid]
        except KeyError:
            raise DataError(f"Unknown item '{gid}'") from None

    def gid(self, fid: int) -> str:
        self._check(fid)
        return self._gids[fid]

    def items(self) -> list[Item]:
        return [Item(self._gids[fid], fid, tuple(self._parents[fid])) for fid in self]

    def parents(self, fid: int) -> tuple[int, ...]:
        self._check(fid)
        return tuple(self._parents[fid])

    def encode(self, tokens: Iterable[str]) -> list[int]:
        return [self.fid(token) for token in tokens]

    def decode(self, sequence: Iterable[int]) -> list[str]:
        return [self.gid(int(fid)) for fid in sequence]

    def _check(self, fid: int):
        if not 0 < fid < len(self._gids):
            raise DataError(f"Unknown item id {fid}")

    def _closure(self, fid: int, edges: list[list[int]]) -> tuple[int, ...]:
        # BFS, neighbours in ascending fid order so traversal order is reproducible
        self._check(fid)
        seen = {fid}
        order = [fid]
        queue = deque([fid])
        while queue:
            current = queue.popleft()
            for neighbour in sorted(edges[current]):
                if neighbour not in seen:
                    seen.add(neighbour)
                    order.append(neighbour)
                    queue.append(neighbour)
        return tuple(order)

    def ancestors(self, fid: int) -> frozenset[int]:
        """anc(w): w and everything it generalizes to."""
        if fid not in self._ancestors:
            self._ancestors[fid] = frozenset(self.ancestors_bfs(fid))
        return self._ancestors[fid]

    def ancestors_bfs(self, fid: int) -> tuple[int, ...]:
        """anc(w) in breadth-first order starting at w itself."""
        if fid not in self._ancestors_bfs:
            self._ancestors_bfs[fid] = self._closure(fid, self._parents)
        return self._ancestors_bfs[fid]

    def descendants(self, fid: int) -> frozenset[int]:
        """desc(w): w and everything that generalizes to it."""
        if fid not in self._descendants:
            self._descendants[fid] = frozenset(self._closure(fid, self._children))
        return self._descendants[fid]

    def is_descendant(self, fid: int, of: int) -> bool:
        return of in self.ancestors(fid)

    def _clear_caches(self):
        self._ancestors.clear()
        self._ancestors_bfs.clear()
        self._descendants.clear()

    def check_acyclic(self):
        # iterative three-colour DFS over parent edges
        WHITE, GREY, BLACK = 0, 1, 2
        colour = [WHITE] * len(self._gids)
        for root in self:
            if colour[root] != WHITE:
                continue
            colour[root] = GREY
            stack = [(root, iter(self._parents[root]))]
            while stack:
                node, parents = stack[-1]
                for parent in parents:
                    if colour[parent] == GREY:
                        gid = self._gids[parent]
                        raise HierarchyError(
                            f"Cycle in item hierarchy through item '{gid}'"
                        )
                    if colour[parent] == WHITE:
                        colour[parent] = GREY
                        stack.append((parent, iter(self._parents[parent])))
                        break
                else:
                    colour[node] = BLACK
                    stack.pop()

    @property
    def flist(self) -> np.ndarray:
        """Item frequencies indexed by fid (entry 0 is unused)."""
        if self._flist is None:
            raise RuntimeError("F-list not computed yet, call compute_flist first.")
        return self._flist

    def frequency(self, fid: int) -> int:
        self._check(fid)
        return int(self.flist[fid])

    def flist_lines(self) -> list[str]:
        return [f"{self._gids[fid]}\t{self.flist[fid]}" for fid in self]

    def write_flist(self, path: Path | str):
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            for line in self.flist_lines():
                f.write(line + "\n")
        logger.info(f"Wrote f-list of {len(self)} items to {path}")

    def recoding_from(self, other: Dictionary) -> np.ndarray:
        """Lookup table mapping fids of `other` to fids of this dictionary."""
        table = np.zeros(len(other) + 1, dtype=np.int32)
        for fid in other:
            table[fid] = self.fid(other.gid(fid))
        return table

    def hierarchy_stats(self) -> dict[str, float]:
        depth = [0] * len(self._gids)
        # fids are not topologically sorted before freezing, so memoize explicitly
        for fid in self:
            stack = [fid]
            while stack:
                current = stack[-1]
                pending = [p for p in self._parents[current] if depth[p] == 0]
                if pending:
                    stack.extend(pending)
                    continue
                stack.pop()
                depth[current] = 1 + max(
                    (depth[p] for p in self._parents[current]), default=0
                )
        fan_outs = [len(self._children[fid]) for fid in self]
        non_leaves = [n for n in fan_outs if n > 0]
        return {
            "total_items": len(self),
            "leaf_items": sum(1 for n in fan_outs if n == 0),
            "intermediate_items": sum(
                1 for fid in self if self._parents[fid] and self._children[fid]
            ),
            "root_items": sum(1 for fid in self if not self._parents[fid]),
            "max_depth": max(depth[1:], default=0),
            "avg_fan_out": round(sum(non_leaves) / len(non_leaves), 1)
            if non_leaves
            else 0.0,
            "max_fan_out": max(fan_outs, default=0),
        }


def load_hierarchy(hierarchy_text: str, vocabulary: Iterable[str] = ()) -> Dictionary:
    """Build a dictionary from `child<TAB>parent` lines plus a set of known items.

    Blank lines and lines starting with '#' are skipped. Items that never appear as
    a child are roots.
    """
    dictionary = Dictionary()
    duplicates = 0
    for lineno, line in enumerate(hierarchy_text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        tokens = line.rstrip("\r\n").split("\t")
        if len(tokens) != 2 or not tokens[0] or not tokens[1]:
            raise HierarchyError(
                f"Line {lineno}: expected 'child<TAB>parent', got {line!r}"
            )
        child, parent = tokens
        if child == parent:
            raise HierarchyError(f"Cycle in item hierarchy through item '{child}'")
        if not dictionary.add_edge(child, parent):
            duplicates += 1
    if duplicates:
        logger.warning(f"Ignored {duplicates} duplicate hierarchy edge(s)")
    for gid in sorted(vocabulary):
        dictionary.add_item(gid)
    dictionary.check_acyclic()
    logger.debug(f"Loaded hierarchy with {len(dictionary)} items")
    return dictionary


def compute_flist(dictionary: Dictionary, db: SequenceDatabase) -> Dictionary:
    """Count item frequencies over `db` and return a frozen, frequency-recoded copy.

    An item is counted once per sequence that contains it or any of its
    descendants. `db` must be encoded with `dictionary`'s fids; recode it with
    `db.recode(dictionary, result)` afterwards.
    """
    counts = np.zeros(len(dictionary) + 1, dtype=np.int64)
    for sequence in db:
        present: set[int] = set()
        for fid in np.unique(sequence).tolist():
            present.update(dictionary.ancestors(fid))
        if present:
            counts[list(present)] += 1

    order = sorted(dictionary.items(), key=lambda item: (-counts[item.fid], item.gid))
    frozen = Dictionary()
    for item in order:
        frozen.add_item(item.gid)
    for item in order:
        for parent in item.parents:
            frozen.add_edge(item.gid, dictionary.gid(parent))
    flist = np.zeros(len(frozen) + 1, dtype=np.int64)
    flist[1:] = counts[[item.fid for item in order]]
    frozen._flist = flist
    frozen._clear_caches()
    logger.info(
        f"Computed f-list over {len(db)} sequences: {len(frozen)} items, "
        f"{int(np.count_nonzero(flist))} occurring"
    )
    return frozen


def build_dictionary(
    edges: Sequence[tuple[str, str]], vocabulary: Iterable[str] = ()
) -> Dictionary:
    """Programmatic counterpart of `load_hierarchy`."""
    text = "\n".join(f"{child}\t{parent}" for child, parent in edges)
    return load_hierarchy(text, vocabulary)
