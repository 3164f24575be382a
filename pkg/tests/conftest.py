import pytest

from genus2chow.pipeline import Pipeline


@pytest.fixture(scope="session")
def pipeline() -> Pipeline:
    """One shared pipeline; its derived data is cached across tests."""
    return Pipeline(max_degree=10)
