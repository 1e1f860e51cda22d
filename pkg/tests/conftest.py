import pytest
from hypothesis import settings

from quantum_schubert.grassmannian.schubert_index import GrContext, from_partition

# Products are memoized per process, so the first example of a property test can be slow
settings.register_profile("qsc", deadline=None, max_examples=60)
settings.load_profile("qsc")


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps, skipped unless --runslow is given")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        # --runslow given in cli: do not skip slow tests
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def gr24():
    return GrContext(4, 2)


@pytest.fixture
def sigma(gr24):
    """sigma(1, 1) -> the index of the partition (1, 1) in Gr(2,4)"""
    def lookup(*parts):
        return from_partition(gr24, parts)
    return lookup
