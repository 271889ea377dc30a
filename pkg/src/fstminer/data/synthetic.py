"""Seeded synthetic corpora with a layered item hierarchy.

Leaves are named `w<i>`; each hierarchy level above groups `fan_out` consecutive
items of the level below under `l<level>_<j>`. Leaf popularity is Zipf-distributed.
"""

import numpy as np
from loguru import logger

from .dictionary import Dictionary, compute_flist
from .sequences import ITEM_DTYPE, SequenceDatabase


def layered_hierarchy(num_leaves: int, depth: int, fan_out: int) -> Dictionary:
    assert depth >= 1 and fan_out >= 1
    dictionary = Dictionary()
    level = [f"w{i}" for i in range(num_leaves)]
    for gid in level:
        dictionary.add_item(gid)
    for height in range(1, depth):
        parents = []
        for j in range(0, len(level), fan_out):
            parent = f"l{height}_{j // fan_out}"
            parents.append(parent)
            for child in level[j : j + fan_out]:
                dictionary.add_edge(child, parent)
        level = parents
    return dictionary


def zipf_corpus(
    num_sequences: int,
    avg_length: float,
    num_leaves: int,
    depth: int = 3,
    fan_out: int = 100,
    exponent: float = 1.0,
    seed: int = 0,
) -> tuple[Dictionary, SequenceDatabase]:
    """Returns a frozen dictionary and a database encoded with it."""
    rng = np.random.default_rng(seed)
    dictionary = layered_hierarchy(num_leaves, depth, fan_out)
    # leaves were registered first, so leaf i has provisional fid i + 1
    weights = 1.0 / np.arange(1, num_leaves + 1) ** exponent
    probabilities = weights / weights.sum()
    lengths = np.maximum(rng.poisson(avg_length, size=num_sequences), 1)
    tokens = rng.choice(num_leaves, size=int(lengths.sum()), p=probabilities) + 1
    boundaries = np.cumsum(lengths)[:-1]
    db = SequenceDatabase(
        [chunk.astype(ITEM_DTYPE) for chunk in np.split(tokens, boundaries)]
    )
    frozen = compute_flist(dictionary, db)
    logger.debug(
        f"Generated corpus with {num_sequences} sequences over {num_leaves} leaves"
    )
    return frozen, db.recode(dictionary, frozen)
