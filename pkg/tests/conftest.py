import numpy as np
import pytest

from zonalg import generators


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_zonogon(rng, max_diangles=10):
    return generators.random_zonogon(rng, max_diangles=max_diangles)


def random_body(rng, max_diangles=10):
    return generators.random_body(rng, max_diangles=max_diangles)


def random_lifted(rng, max_diangles=10):
    return generators.random_lifted(rng, max_diangles=max_diangles)
