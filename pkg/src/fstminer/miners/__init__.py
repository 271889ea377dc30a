# ruff: noqa: F401
from .count import CountMiner
from .dfs import DfsMiner, Node, ProjectedDatabase, Snapshot
from .miner import Miner, PatternSet
from .naive import NaiveMiner

MINERS: dict[str, type[Miner]] = {
    "naive": NaiveMiner,
    "count": CountMiner,
    "dfs": DfsMiner,
}


def get_miner(name: str, **kwargs) -> Miner:
    try:
        cls = MINERS[name]
    except KeyError:
        raise ValueError(
            f"Unknown algorithm {name!r}, expected one of {', '.join(MINERS)}"
        ) from None
    return cls(**kwargs)
