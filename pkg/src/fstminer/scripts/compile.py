from fstminer.fst import CFst, build_cfst, to_dot

from ._shared import RunConfig, load_items, write_lines


def main(config: RunConfig) -> CFst:
    dictionary = load_items(config)
    cfst = build_cfst(config.pattern, dictionary, partial=config.partial)
    finals = " ".join(str(q) for q in sorted(cfst.finals))
    lines = [f"# states={cfst.num_states} initial={cfst.initial} finals={finals}"]
    lines.extend(cfst.dump(dictionary))
    write_lines(lines, config.output)
    if config.dot is not None:
        write_lines([to_dot(cfst, dictionary).rstrip("\n")], config.dot)
    return cfst
