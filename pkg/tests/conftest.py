import numpy as np
import pytest

from rootgaps import hermite, jacobi, laguerre

# Parameter grid shared by the sweep-style tests; mirrors the CLI default.
LAGUERRE_NUS = (0.1, 0.5, 1.0, 2.0, 10.0, 50.0)
JACOBI_PARAMS = ((-0.5, -0.5), (0.0, 0.0), (1.0, -0.9), (2.0, 3.0), (10.0, 10.0))


def all_families():
    fams = [hermite()]
    fams += [laguerre(nu) for nu in LAGUERRE_NUS]
    fams += [jacobi(a, b) for a, b in JACOBI_PARAMS]
    return fams


def random_symmetric(rng, n, scale=1.0):
    a = rng.uniform(-scale, scale, size=(n, n))
    return (a + a.T) / 2.0


def ones_kernel_projection(a):
    """Conjugate with the projector onto the complement of (1,...,1)."""
    n = a.shape[0]
    p = np.eye(n) - np.full((n, n), 1.0 / n)
    b = p @ a @ p
    return (b + b.T) / 2.0


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
