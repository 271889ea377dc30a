# ruff: noqa: F401
from ._shared import DataError, HierarchyError
from .dictionary import (
    Dictionary,
    Item,
    build_dictionary,
    compute_flist,
    load_hierarchy,
)
from .sequences import DatabaseStats, SequenceDatabase, load_sequences
from .synthetic import layered_hierarchy, zipf_corpus
