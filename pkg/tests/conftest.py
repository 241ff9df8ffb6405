import numpy as np
import pytest

from iwsurv import kernels
from iwsurv.fixtures import FIXTURES


@pytest.fixture(scope="session")
def fixture_a():
    return FIXTURES["A"]


@pytest.fixture(scope="session")
def fixture_b():
    return FIXTURES["B"]


@pytest.fixture(scope="session")
def fixture_c():
    return FIXTURES["C"]


def backend_params():
    return [pytest.param(name, id=name) for name in kernels.available_backends()]


@pytest.fixture(params=backend_params())
def backend(request):
    return kernels.get_backend(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
