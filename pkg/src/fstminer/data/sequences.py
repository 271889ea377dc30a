from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np
from loguru import logger

from ._shared import DataError
from .dictionary import Dictionary

ITEM_DTYPE = np.int32


@dataclass(frozen=True)
class DatabaseStats:
    count: int
    total_items: int
    avg_length: float
    max_length: int
    distinct_items: int

    def lines(self) -> list[str]:
        return [
            f"sequences\t{self.count}",
            f"avg_length\t{self.avg_length:.1f}",
            f"max_length\t{self.max_length}",
            f"total_items\t{self.total_items}",
            f"distinct_items\t{self.distinct_items}",
        ]


class SequenceDatabase:
    """Integer-encoded input sequences T_1..T_n, kept in ingestion order."""

    def __init__(self, sequences: list[np.ndarray] | None = None):
        self.sequences = sequences or []

    def __len__(self) -> int:
        return len(self.sequences)

    def __getitem__(self, index: int) -> np.ndarray:
        return self.sequences[index]

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.sequences)

    def append(self, sequence) -> None:
        self.sequences.append(np.asarray(sequence, dtype=ITEM_DTYPE))

    def as_lists(self) -> list[list[int]]:
        """Plain Python lists; faster to index from the simulators than numpy arrays."""
        return [sequence.tolist() for sequence in self.sequences]

    def recode(self, old: Dictionary, new: Dictionary) -> SequenceDatabase:
        """Translate fids from `old` to `new`, usually the output of compute_flist."""
        table = new.recoding_from(old)
        return SequenceDatabase([table[sequence] for sequence in self.sequences])

    def decode(self, dictionary: Dictionary) -> list[list[str]]:
        return [dictionary.decode(sequence) for sequence in self.sequences]

    def stats(self) -> DatabaseStats:
        if not self.sequences:
            return DatabaseStats(0, 0, 0.0, 0, 0)
        lengths = np.fromiter(
            (len(sequence) for sequence in self.sequences),
            dtype=np.int64,
            count=len(self.sequences),
        )
        total = int(lengths.sum())
        distinct = (
            len(np.unique(np.concatenate(self.sequences))) if total > 0 else 0
        )
        return DatabaseStats(
            count=len(self.sequences),
            total_items=total,
            avg_length=round(total / len(self.sequences), 1),
            max_length=int(lengths.max()),
            distinct_items=distinct,
        )


def load_sequences(text: str, dictionary: Dictionary) -> SequenceDatabase:
    """One sequence per line, items are whitespace-separated gids.

    Unknown items are registered as hierarchy roots unless the dictionary is
    frozen, in which case they are an error.
    """
    db = SequenceDatabase()
    registered = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        fids = []
        for token in line.split():
            if token not in dictionary:
                if dictionary.frozen:
                    raise DataError(f"Line {lineno}: unknown item '{token}'")
                registered += 1
            fids.append(dictionary.add_item(token))
        db.append(fids)
    if registered:
        logger.debug(f"Registered {registered} item(s) without hierarchy as roots")
    logger.info(f"Loaded {len(db)} sequences")
    return db
