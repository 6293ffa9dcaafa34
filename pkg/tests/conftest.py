import numpy as np
import pytest

from rectcross import _backend


@pytest.fixture(params=sorted(_backend.AVAILABLE))
def backend(request):
    """Run the test once per available kernel implementation."""
    previous = _backend.use(request.param)
    yield request.param
    _backend.use(previous)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
