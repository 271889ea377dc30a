import time
from abc import ABC, abstractmethod

from loguru import logger

from fstminer.data import Dictionary, SequenceDatabase
from fstminer.fst import CFst


class PatternSet(dict[tuple[int, ...], int]):
    """Frequent sequences (tuples of fids) mapped to their frequency."""

    def decoded(self, dictionary: Dictionary) -> dict[str, int]:
        return {
            " ".join(dictionary.decode(pattern)): frequency
            for pattern, frequency in self.items()
        }

    def to_lines(self, dictionary: Dictionary) -> list[str]:
        """`pattern<TAB>frequency` lines, most frequent first, ties by pattern text."""
        entries = sorted(
            self.decoded(dictionary).items(), key=lambda entry: (-entry[1], entry[0])
        )
        return [f"{pattern}\t{frequency}" for pattern, frequency in entries]


class Miner(ABC):
    """Finds all sequences generated by a cFST in at least `sigma` input sequences.

    With `partial=True` the cFST must have been compiled for partial matching.
    """

    name: str

    def __init__(self, sigma: int, partial: bool = False, pbar: bool = False):
        if sigma < 1:
            raise ValueError(f"sigma must be at least 1, got {sigma}")
        self.sigma = sigma
        self.partial = partial
        self.pbar = pbar

    @abstractmethod
    def _mine(
        self, db: SequenceDatabase, cfst: CFst, dictionary: Dictionary
    ) -> PatternSet:
        pass

    def mine(
        self, db: SequenceDatabase, cfst: CFst, dictionary: Dictionary
    ) -> PatternSet:
        start = time.perf_counter()
        result = self._mine(db, cfst, dictionary)
        elapsed = time.perf_counter() - start
        self._check(result, dictionary)
        logger.info(
            f"{self.name} mining found {len(result)} patterns "
            f"at sigma={self.sigma} in {elapsed:.2f}s"
        )
        return result

    def _check(self, result: PatternSet, dictionary: Dictionary):
        for pattern, frequency in result.items():
            assert pattern, "the empty sequence is never a pattern"
            assert frequency >= self.sigma, (pattern, frequency)
            if dictionary.frozen:
                # an item is at least as frequent as any pattern containing it
                assert all(
                    dictionary.frequency(item) >= frequency for item in pattern
                ), (pattern, frequency)
