from . import data, fst, match, miners, patterns, scripts, utils

__all__ = ["data", "fst", "match", "miners", "patterns", "scripts", "utils"]
