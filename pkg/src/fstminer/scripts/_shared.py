import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from loguru import logger

from fstminer import utils
from fstminer.data import (
    DataError,
    Dictionary,
    SequenceDatabase,
    compute_flist,
    load_hierarchy,
    load_sequences,
)
from fstminer.miners import MINERS

Command = Literal["mine", "match", "compile", "stats"]


class UsageError(ValueError):
    """Invalid combination of command-line options."""


@dataclass(kw_only=True)
class RunConfig:
    command: Command
    data: Path | str | None = None
    hierarchy: Path | str | None = None
    pattern: str | None = None
    sigma: int = 1
    algorithm: str = "dfs"
    partial: bool = False
    output: Path | str | None = None
    dot: Path | str | None = None
    flist: Path | str | None = None
    verbose: bool = False
    pbar: bool = False

    def __post_init__(self):
        for name in ("data", "hierarchy", "output", "dot", "flist"):
            value = getattr(self, name)
            if value is not None:
                setattr(self, name, Path(value))
        if self.command not in ("mine", "match", "compile", "stats"):
            raise UsageError(f"Unknown command {self.command!r}")
        if self.sigma < 1:
            raise UsageError(f"--sigma must be a positive integer, got {self.sigma}")
        if self.algorithm not in MINERS:
            raise UsageError(
                f"--algorithm must be one of {', '.join(MINERS)}, "
                f"got {self.algorithm!r}"
            )
        if self.command != "stats" and not self.pattern:
            raise UsageError(f"{self.command} requires --pattern")
        if self.command in ("mine", "match", "stats") and self.data is None:
            raise UsageError(f"{self.command} requires --data")
        if self.command == "compile" and self.data is None and self.hierarchy is None:
            raise UsageError("compile requires --data or --hierarchy")
        if self.dot is not None and self.command != "compile":
            raise UsageError("--dot is only supported by compile")


@dataclass
class Dataset:
    """Frozen dictionary plus the database encoded with its fids."""

    dictionary: Dictionary
    db: SequenceDatabase
    sha256: str


def _read(path: Path) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except UnicodeDecodeError as e:
        raise DataError(f"{path} is not valid UTF-8 ({e.reason})") from None


def load_dataset(data: Path, hierarchy: Path | None = None) -> Dataset:
    dictionary = load_hierarchy(_read(hierarchy)) if hierarchy else Dictionary()
    db = load_sequences(_read(data), dictionary)
    frozen = compute_flist(dictionary, db)
    return Dataset(
        dictionary=frozen,
        db=db.recode(dictionary, frozen),
        sha256=utils.sha256_files(data, hierarchy),
    )


def load_items(config: RunConfig) -> Dictionary:
    """Dictionary for commands that only need item ids, not the database."""
    if config.data is not None:
        return load_dataset(config.data, config.hierarchy).dictionary
    assert config.hierarchy is not None
    return load_hierarchy(_read(config.hierarchy))


def write_lines(lines: list[str], path: Path | None):
    """Write to `path`, or to stdout if no path is given."""
    if path is None:
        sys.stdout.write("".join(line + "\n" for line in lines))
        sys.stdout.flush()
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for line in lines:
            f.write(line + "\n")
    logger.info(f"Wrote {len(lines)} lines to {path}")
