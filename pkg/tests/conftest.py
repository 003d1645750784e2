import numpy as np
import pytest

from trs_iso import FixtureCorpus, load_graph, load_trs, parse_trs


SEED = 0xC0FFEE


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def expectations():
    return FixtureCorpus.expectations()


@pytest.fixture
def fixture_trs():
    return load_trs


@pytest.fixture
def fixture_graph():
    return load_graph


@pytest.fixture
def trs():
    """Inline .trs text to Trs."""
    def _parse(text, permissive=False):
        return parse_trs(text, permissive=permissive)
    return _parse
