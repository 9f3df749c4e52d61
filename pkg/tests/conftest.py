import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("repro", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("repro")


def rel(a, b, floor=1e-300):
    return abs(a - b) / max(abs(b), floor)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
