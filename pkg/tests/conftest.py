import os
import sys
from pathlib import Path

import numpy as np
import pytest
from fstminer.fst import build_cfst
from fstminer.scripts import load_dataset

FIXTURES = Path(__file__).parent / "fixtures"
EXAMPLE_SEQUENCES = FIXTURES / "example_sequences.txt"
EXAMPLE_HIERARCHY = FIXTURES / "example_hierarchy.tsv"
EXAMPLE_PATTERN = "[c|d]([A^|B=^]+)e"

# Hack to make pytest crash instead of catching exceptions. This is useful for debugging
# tests in VSCode, because otherwise the debugger won't stop on uncaught exceptions.
# See https://stackoverflow.com/questions/62419998/how-can-i-get-pytest-to-not-catch-exceptions
if os.getenv("_PYTEST_RAISE", "0") != "0" or ("debugpy" in sys.modules):

    @pytest.hookimpl(tryfirst=True)
    def pytest_exception_interact(call):
        raise call.excinfo.value

    @pytest.hookimpl(tryfirst=True)
    def pytest_internalerror(excinfo):
        raise excinfo.value


def pytest_addoption(parser):
    parser.addoption(
        "--fast", action="store_true", default=False, help="run only fast tests"
    )
    parser.addoption(
        "--seed", type=int, default=0, help="seed for randomized tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as slow to run")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--fast"):
        skip_slow = pytest.mark.skip(reason="--fast option was passed")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


@pytest.fixture(scope="session")
def example():
    """The six-sequence running example with its item hierarchy."""
    return load_dataset(EXAMPLE_SEQUENCES, EXAMPLE_HIERARCHY)


@pytest.fixture(scope="session")
def dictionary(example):
    return example.dictionary


@pytest.fixture(scope="session")
def example_cfst(dictionary):
    return build_cfst(EXAMPLE_PATTERN, dictionary)


@pytest.fixture(scope="session")
def encode(dictionary):
    """'a1 B' -> (3, 2)"""

    def _encode(text: str) -> tuple[int, ...]:
        return tuple(dictionary.encode(text.split()))

    return _encode
