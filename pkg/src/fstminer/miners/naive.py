from collections import Counter

from tqdm.auto import tqdm

from fstminer.data import Dictionary, SequenceDatabase
from fstminer.fst import CFst
from fstminer.match import Simulator

from .miner import Miner, PatternSet


class NaiveMiner(Miner):
    """Generate-and-count: every sequence contributes its full generated set."""

    name = "naive"

    def _generated(self, simulator: Simulator, sequence: list[int]):
        return simulator.generate(sequence)

    def _mine(
        self, db: SequenceDatabase, cfst: CFst, dictionary: Dictionary
    ) -> PatternSet:
        simulator = Simulator(cfst, dictionary, self.partial)
        counts = Counter()
        sequences = db.as_lists()
        if self.pbar:
            sequences = tqdm(sequences, desc=f"Mining ({self.name})", leave=False)
        for sequence in sequences:
            counts.update(self._generated(simulator, sequence))
        return PatternSet(
            {
                pattern: count
                for pattern, count in counts.items()
                if count >= self.sigma
            }
        )
