# tests/fuzzred/conftest.py
from __future__ import annotations

from collections.abc import Iterator

import pytest

from fuzzred.automaton import Ffa
from fuzzred.config.settings import setConfigStore
from fuzzred.lattice import Lattice, Structure
from tests.fuzzred.automata import buildIn1, buildIn2, buildIn3, buildIn5, buildIn6, buildIn7


# ----------------------------------------
# Fixtures
# ----------------------------------------

@pytest.fixture(autouse=True)
def freshConfigStore() -> Iterator[None]:
    """Every test starts from the shipped defaults."""
    setConfigStore(None)
    yield
    setConfigStore(None)


@pytest.fixture
def product() -> Lattice:
    return Lattice(Structure.PRODUCT)


@pytest.fixture
def in1() -> Ffa:
    return buildIn1()


@pytest.fixture
def in2() -> Ffa:
    return buildIn2()


@pytest.fixture(scope="session")
def in3() -> Ffa:
    return buildIn3()


@pytest.fixture
def in5() -> Ffa:
    return buildIn5()


@pytest.fixture
def in6() -> Ffa:
    return buildIn6()


@pytest.fixture
def in7() -> Ffa:
    return buildIn7()
