from fstminer.fst import build_cfst
from fstminer.miners import PatternSet, get_miner

from ._shared import RunConfig, load_dataset, write_lines


def result_header(config: RunConfig, sha256: str) -> str:
    return (
        f"# pattern={config.pattern} sigma={config.sigma} "
        f"algorithm={config.algorithm} partial={str(config.partial).lower()} "
        f"dataset=sha256:{sha256}"
    )


def main(config: RunConfig) -> PatternSet:
    dataset = load_dataset(config.data, config.hierarchy)
    cfst = build_cfst(config.pattern, dataset.dictionary, partial=config.partial)
    miner = get_miner(
        config.algorithm,
        sigma=config.sigma,
        partial=config.partial,
        pbar=config.pbar,
    )
    patterns = miner.mine(dataset.db, cfst, dataset.dictionary)
    lines = [result_header(config, dataset.sha256)]
    lines.extend(patterns.to_lines(dataset.dictionary))
    write_lines(lines, config.output)
    return patterns
