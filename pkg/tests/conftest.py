import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def crandn(rng, *shape):
    """Standard complex Gaussian samples."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)
