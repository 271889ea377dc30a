from ._shared import RunConfig, load_dataset, write_lines


def main(config: RunConfig) -> list[str]:
    dataset = load_dataset(config.data, config.hierarchy)
    lines = dataset.db.stats().lines()
    if config.hierarchy is not None:
        stats = dataset.dictionary.hierarchy_stats()
        lines.extend(f"hierarchy_{key}\t{value}" for key, value in stats.items())
    write_lines(lines, config.output)
    if config.flist is not None:
        dataset.dictionary.write_flist(config.flist)
    return lines
