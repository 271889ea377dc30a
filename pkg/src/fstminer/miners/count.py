from fstminer.match import Simulator

from .naive import NaiveMiner


class CountMiner(NaiveMiner):
    """Like the naive miner, but runs stop at the first infrequent output item.

    Requires a dictionary with a computed f-list.
    """

    name = "count"

    def _generated(self, simulator: Simulator, sequence: list[int]):
        return simulator.generate(sequence, self.sigma)
