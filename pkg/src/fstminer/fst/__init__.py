# ruff: noqa: F401
from .cfst import CFst, Transition
from .compile import build_cfst, compile_pattern, item_labels
from .dot import to_dot
from .expand import EPSILON, UncompressedFst, expand
from .labels import InputKind, InputLabel, OutputKind, OutputLabel
from .normalize import eliminate_epsilon, normalize
