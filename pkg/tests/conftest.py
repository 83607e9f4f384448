"""Pytest configuration and fixtures for vp-wavelets tests."""

import math

import numpy as np
import pytest

from vp_wavelets.basis import VpParams
from vp_wavelets.basis.chebgrid import SQRT_1_PI, SQRT_2_PI

# Parameter pairs covering m = 1, a mid-range m and m = n - 1.
EXACTNESS_PARAMS = [(4, 2), (9, 4), (27, 18), (27, 1), (9, 8)]

RNG_SEED = 20240611


@pytest.fixture
def rng():
    """Fixed-seed generator so tolerance checks are reproducible."""
    return np.random.default_rng(RNG_SEED)


@pytest.fixture(params=EXACTNESS_PARAMS, ids=lambda p: f"n{p[0]}m{p[1]}")
def params(request):
    """VpParams for the exactness suite."""
    return VpParams(*request.param)


@pytest.fixture
def naive_p():
    """Orthonormal Chebyshev polynomial evaluated independently of the library."""

    def _p(r, x):
        scale = SQRT_1_PI if r == 0 else SQRT_2_PI
        return np.cos(r * np.arccos(np.clip(x, -1.0, 1.0))) * scale

    return _p


@pytest.fixture
def naive_kernel(naive_p):
    """Filtered kernel sum written out term by term."""

    def _kernel(n, m, x, y):
        total = 0.0
        for r in range(n + m):
            mu = 1.0 if r <= n - m else (m + n - r) / (2 * m)
            total = total + mu * naive_p(r, x) * naive_p(r, y)
        return total

    return _kernel


def figure_function(x):
    """sin(6x) + sign(sin(x + exp(2x))), the pyramid example function."""
    return np.sin(6 * x) + np.sign(np.sin(x + np.exp(2 * x)))


@pytest.fixture
def fig_function():
    return figure_function


FIGURE_EXPR = "sin(6*x)+sign(sin(x+exp(2*x)))"


@pytest.fixture
def quad_nodes():
    """Gauss-Chebyshev nodes and weight for an order large enough for the tests."""

    def _nodes(order):
        k = np.arange(1, order + 1)
        return np.cos((2 * k - 1) * math.pi / (2 * order)), math.pi / order

    return _nodes
