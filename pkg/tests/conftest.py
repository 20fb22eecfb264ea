import pytest

from cubicjordan import coord8


@pytest.fixture(scope="session")
def symbolic_presentation():
    """Presentation with all eight cube parameters symbolic (17-var ring)."""
    return coord8.presentation(None)


@pytest.fixture(scope="session")
def origin_presentation():
    return coord8.presentation(coord8.Hypermatrix({}))
