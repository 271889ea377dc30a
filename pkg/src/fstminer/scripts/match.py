from fstminer.fst import build_cfst
from fstminer.match import Simulator

from ._shared import RunConfig, load_dataset, write_lines


def main(config: RunConfig) -> list[str]:
    """`sequence<TAB>line` for every generated sequence, by input line then text."""
    dataset = load_dataset(config.data, config.hierarchy)
    dictionary = dataset.dictionary
    cfst = build_cfst(config.pattern, dictionary, partial=config.partial)
    simulator = Simulator(cfst, dictionary, partial=config.partial)
    # sigma=1 filters nothing, every item occurs at least once
    sigma = config.sigma if config.sigma > 1 else 0
    lines = []
    for lineno, sequence in enumerate(dataset.db.as_lists(), start=1):
        generated = simulator.generate(sequence, sigma)
        texts = sorted(" ".join(dictionary.decode(output)) for output in generated)
        lines.extend(f"{text}\t{lineno}" for text in texts)
    write_lines(lines, config.output)
    return lines
