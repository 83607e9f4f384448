"""
Chebyshev nodes of the first kind and the scaled cosine transforms.

All vectors use the node index order k = 1..n, i.e. decreasing abscissa.
The fine grid X_3n contains X_n at the 1-based positions 3k-1; the remaining
2n positions, taken in ascending order, carry the Y_2n nodes.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import fft

from .base import (
    VpParameterError,
    check_domain,
    check_positive_int,
    readonly,
    scalar_or_array,
)

SQRT_1_PI = math.sqrt(1.0 / math.pi)
SQRT_2_PI = math.sqrt(2.0 / math.pi)


@dataclass(frozen=True, eq=False)
class ChebGrid:
    """The node set X_n with its angles t_k = (2k-1)π/(2n)."""

    n: int
    nodes: NDArray[np.float64]
    angles: NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class GridEmbedding:
    """
    Positions of X_n and Y_2n inside X_3n.

    ``x_index`` and ``y_index`` are 1-based as in the node numbering;
    ``x_slots`` and ``y_slots`` are the same positions as 0-based array indices.
    """

    n: int
    x_index: NDArray[np.int64]
    y_index: NDArray[np.int64]

    @property
    def x_slots(self) -> NDArray[np.int64]:
        return self.x_index - 1

    @property
    def y_slots(self) -> NDArray[np.int64]:
        return self.y_index - 1


@lru_cache(maxsize=64)
def make_grid(n: int) -> ChebGrid:
    """
    Build the Chebyshev grid X_n.

    :param n: number of nodes, n >= 1
    :returns: immutable grid; cached, so repeated calls share one object
    :raises VpParameterError: if n < 1
    """
    n = check_positive_int(n, "n")
    angles = np.arange(1, 2 * n, 2, dtype=np.float64) * (math.pi / (2 * n))
    nodes = np.cos(angles)
    return ChebGrid(n=n, nodes=readonly(nodes), angles=readonly(angles))


@lru_cache(maxsize=64)
def make_embedding(n: int) -> GridEmbedding:
    """Index embedding of X_n and Y_2n into X_3n."""
    n = check_positive_int(n, "n")
    x_index = np.arange(2, 3 * n, 3, dtype=np.int64)
    k = np.arange(1, n + 1, dtype=np.int64)
    y_index = np.empty(2 * n, dtype=np.int64)
    y_index[0::2] = 3 * k - 2
    y_index[1::2] = 3 * k
    return GridEmbedding(n=n, x_index=readonly(x_index), y_index=readonly(y_index))


def y_angles(n: int) -> NDArray[np.float64]:
    """Angles of the Y_2n nodes, in Y order."""
    return make_grid(3 * n).angles[make_embedding(n).y_slots]


def y_nodes(n: int) -> NDArray[np.float64]:
    """Abscissas of the Y_2n nodes, in Y order."""
    return make_grid(3 * n).nodes[make_embedding(n).y_slots]


def norm_factors(size: int) -> NDArray[np.float64]:
    """Orthonormalisation factors √(1/π), √(2/π), √(2/π), ... of p_0..p_{size-1}."""
    factors = np.full(size, SQRT_2_PI)
    if size:
        factors[0] = SQRT_1_PI
    return factors


def cheb_p_angles(degrees: ArrayLike, angles: ArrayLike) -> NDArray[np.float64]:
    """
    Orthonormal Chebyshev polynomials evaluated on angles t = arccos x.

    Returns an array of shape ``angles.shape + degrees.shape``. Inputs are
    trusted; this is the vectorised kernel behind ``cheb_p``.
    """
    r = np.asarray(degrees, dtype=np.int64)
    t = np.asarray(angles, dtype=np.float64)
    scale = np.where(r == 0, SQRT_1_PI, SQRT_2_PI)
    return np.cos(np.multiply.outer(t, r)) * scale


def cheb_p(r: int, x: ArrayLike) -> Any:
    """
    Orthonormal Chebyshev polynomial p_r(x) = c_r cos(r arccos x).

    :param r: degree, r >= 0
    :param x: point or array of points in [-1, 1]
    :returns: float for scalar ``x``, array otherwise
    :raises VpParameterError: on negative degree or |x| > 1
    """
    r = check_positive_int(r, "r", minimum=0)
    xs = check_domain(x)
    values = cheb_p_angles(r, np.arccos(xs))
    return scalar_or_array(xs, values)


def gauss_cheb_quadrature(
    f: Callable[[NDArray[np.float64]], ArrayLike], n: int
) -> float:
    """
    Gauss-Chebyshev rule (π/n) Σ f(x_k), exact for polynomials of degree <= 2n-1.

    ``f`` is called once with the whole node array and may return either an
    array of matching shape or a scalar (treated as constant).
    """
    grid = make_grid(n)
    values = np.broadcast_to(np.asarray(f(grid.nodes), dtype=np.float64), grid.nodes.shape)
    return float(math.pi / grid.n * np.sum(values))


def dct2_scaled(v: ArrayLike, scale: float) -> NDArray[np.float64]:
    """
    Chebyshev analysis α_r = scale · Σ_k v_k p_r(x_k), r = 0..n-1.

    One unnormalised type-2 DCT of length n.
    """
    arr = _as_signal(v, "v")
    alpha = fft.dct(arr, type=2) * 0.5
    alpha *= norm_factors(arr.shape[0])
    alpha *= scale
    return alpha


def dct3_scaled(alpha: ArrayLike) -> NDArray[np.float64]:
    """
    Chebyshev synthesis v_k = Σ_r α_r p_r(x_k), k = 1..n.

    Inverse of ``dct2_scaled(·, π/n)``.
    """
    arr = _as_signal(alpha, "alpha")
    coeffs = arr * norm_factors(arr.shape[0])
    coeffs[1:] *= 0.5
    return np.asarray(fft.dct(coeffs, type=3), dtype=np.float64)


def _as_signal(v: ArrayLike, name: str) -> NDArray[np.float64]:
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise VpParameterError(f"{name} must be a non-empty one-dimensional vector")
    return arr


def cheb_series(modes: ArrayLike, x: ArrayLike) -> Any:
    """
    Evaluate Σ_j modes_j p_j(x) for an orthonormal Chebyshev mode vector.

    Uses numpy's Clenshaw evaluation of the equivalent T_j series.
    """
    coeffs = np.asarray(modes, dtype=np.float64)
    if coeffs.ndim != 1:
        raise VpParameterError("modes must be a one-dimensional vector")
    xs = check_domain(x)
    if coeffs.shape[0] == 0:
        return scalar_or_array(xs, np.zeros_like(xs))
    values = np.polynomial.chebyshev.chebval(xs, coeffs * norm_factors(coeffs.shape[0]))
    return scalar_or_array(xs, np.asarray(values, dtype=np.float64))
