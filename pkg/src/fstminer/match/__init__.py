# ruff: noqa: F401
from .simulator import Simulator, delta, generate, generate_filtered
