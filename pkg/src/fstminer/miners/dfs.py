"""Pattern-growth mining over projected databases of simulation snapshots.

A node of the search tree stands for an output prefix S. Its projected database
holds snapshots: positions in input sequences together with a cFST state from which
a run that has produced exactly S can be resumed. Resuming all snapshots of a node
until the next output item is produced yields the projected databases of its
children and the support of S itself.
"""

from __future__ import annotations

import time
from typing import Iterator, NamedTuple

from loguru import logger
from tqdm.auto import tqdm

from fstminer.data import Dictionary, SequenceDatabase
from fstminer.fst import CFst
from fstminer.match import Simulator
from fstminer.utils import encode_varint, iter_varints

from .miner import Miner, PatternSet


class Snapshot(NamedTuple):
    # all zero-based; printed one-based as T<seq>[<pos>@q<state>]
    seq: int
    pos: int
    state: int

    def __str__(self) -> str:
        return f"T{self.seq + 1}[{self.pos + 1}@q{self.state}]"


class ProjectedDatabase:
    """Snapshots in order of their sequence, stored as a byte string of varints.

    Each snapshot is (sequence delta, position, state). Snapshots have to be added
    in non-decreasing sequence order; duplicates within a sequence are dropped.
    """

    __slots__ = ("data", "prefix_support", "num_snapshots", "_last_seq", "_current")

    def __init__(self):
        self.data = bytearray()
        # number of distinct sequences
        self.prefix_support = 0
        self.num_snapshots = 0
        self._last_seq = -1
        self._current: set[tuple[int, int]] = set()

    def add(self, seq: int, pos: int, state: int) -> bool:
        assert seq >= self._last_seq, (seq, self._last_seq)
        if seq != self._last_seq:
            encode_varint(seq - max(self._last_seq, 0), self.data)
            self._last_seq = seq
            self._current = set()
            self.prefix_support += 1
        elif (pos, state) in self._current:
            return False
        else:
            encode_varint(0, self.data)
        self._current.add((pos, state))
        encode_varint(pos, self.data)
        encode_varint(state, self.data)
        self.num_snapshots += 1
        return True

    def __iter__(self) -> Iterator[Snapshot]:
        seq = 0
        numbers = iter_varints(self.data)
        for delta, pos, state in zip(numbers, numbers, numbers):
            seq += delta
            yield Snapshot(seq, pos, state)

    def __len__(self) -> int:
        return self.num_snapshots

    def release(self):
        self.data = bytearray()
        self._current = set()


class Node:
    def __init__(self, prefix: tuple[int, ...]):
        self.prefix = prefix
        self.projected = ProjectedDatabase()
        self.support = 0
        self._last_support_seq = -1
        self.children: dict[int, Node] = {}
        self.expanded = False

    @property
    def prefix_support(self) -> int:
        return self.projected.prefix_support

    def add_support(self, seq: int):
        if seq != self._last_support_seq:
            self._last_support_seq = seq
            self.support += 1

    def child(self, item: int) -> Node:
        if item not in self.children:
            self.children[item] = Node(self.prefix + (item,))
        return self.children[item]

    def find(self, *prefix: int) -> Node | None:
        node = self
        for item in prefix:
            if item not in node.children:
                return None
            node = node.children[item]
        return node

    def __repr__(self) -> str:
        return (
            f"Node(prefix={self.prefix}, prefix_support={self.prefix_support}, "
            f"support={self.support}, expanded={self.expanded})"
        )


class DfsMiner(Miner):
    """Depth-first pattern growth; requires a dictionary with a computed f-list.

    Children are explored in ascending fid order, i.e. most frequent item first. A
    child is only expanded if at least `sigma` sequences can still produce its
    prefix. With `keep_tree=True` the explored tree (with projected databases) is
    kept in `self.root` after mining.
    """

    name = "dfs"

    def __init__(
        self,
        sigma: int,
        partial: bool = False,
        pbar: bool = False,
        keep_tree: bool = False,
    ):
        super().__init__(sigma, partial, pbar)
        self.keep_tree = keep_tree
        self.root: Node | None = None

    def _mine(
        self, db: SequenceDatabase, cfst: CFst, dictionary: Dictionary
    ) -> PatternSet:
        self._simulator = Simulator(cfst, dictionary, self.partial)
        self._flist = dictionary.flist.tolist()
        self._sequences = db.as_lists()
        self._result = PatternSet()

        root = Node(())
        for seq in range(len(self._sequences)):
            root.projected.add(seq, 0, cfst.initial)
        self.root = root if self.keep_tree else None

        start = time.perf_counter()
        num_expanded = 0
        stack = [root]
        while stack:
            node = stack.pop()
            self._expand(node)
            num_expanded += 1
            # pushed in reverse so that the smallest fid is expanded first
            for item in sorted(node.children, reverse=True):
                child = node.children[item]
                assert child.prefix_support <= node.prefix_support, (child, node)
                if child.prefix_support >= self.sigma:
                    stack.append(child)
            if not self.keep_tree:
                node.projected.release()
                node.children = {}
        logger.debug(
            f"Expanded {num_expanded} nodes in {time.perf_counter() - start:.2f}s"
        )
        return self._result

    def _expand(self, node: Node):
        node.expanded = True
        snapshots = iter(node.projected)
        if self.pbar and not node.prefix:
            snapshots = tqdm(
                snapshots, total=len(node.projected), desc="Mining (dfs)", leave=False
            )
        visited: set[tuple[int, int]] = set()
        last_seq = -1
        for snapshot in snapshots:
            if snapshot.seq != last_seq:
                visited = set()
                last_seq = snapshot.seq
            self._inc_step(node, snapshot, visited)
        if node.prefix and node.support >= self.sigma:
            self._result[node.prefix] = node.support

    def _inc_step(
        self, node: Node, snapshot: Snapshot, visited: set[tuple[int, int]]
    ):
        """Resume a run from `snapshot` until it produces its next output item.

        Runs that accept before producing anything else count towards the support
        of `node`; produced frequent items extend the matching child's projected
        database with the snapshot right after the producing transition.
        """
        simulator = self._simulator
        sequence = self._sequences[snapshot.seq]
        length = len(sequence)
        stack = [(snapshot.pos, snapshot.state)]
        while stack:
            entry = stack.pop()
            if entry in visited:
                continue
            visited.add(entry)
            pos, state = entry
            if node.prefix and simulator.accepts_at(state, pos, length):
                node.add_support(snapshot.seq)
            if pos == length:
                continue
            for outputs, target in simulator.moves(state, sequence[pos]):
                if not outputs:
                    stack.append((pos + 1, target))
                    continue
                for item in outputs:
                    if self._flist[item] >= self.sigma:
                        node.child(item).projected.add(snapshot.seq, pos + 1, target)
