# ruff: noqa: F401
from ._shared import Dataset, RunConfig, UsageError, load_dataset
from .compile import main as compile_pattern
from .match import main as match
from .mine import main as mine
from .stats import main as stats

COMMANDS = {
    "mine": mine,
    "match": match,
    "compile": compile_pattern,
    "stats": stats,
}
