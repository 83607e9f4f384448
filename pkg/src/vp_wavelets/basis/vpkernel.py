"""
The de la Vallée Poussin filter and kernel.

The kernel v_n^m(x, y) = Σ_{r<n+m} μ_{n,r} p_r(x) p_r(y) is available in its
filtered-sum form (the reference) and in the closed sine form used for fast
pointwise evaluation.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .base import VpParams, check_domain, check_positive_int, readonly, scalar_or_array
from .chebgrid import cheb_p_angles, make_grid, norm_factors

logger = logging.getLogger(__name__)

# Angle distance below which the sine form is replaced by the filtered sum.
DEFAULT_SINGULAR_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class FilterCoeffs:
    """Filter values μ_{n,r} for r = 0..n+m-1; zero beyond."""

    params: VpParams
    mu: NDArray[np.float64]


def mu_values(params: VpParams, degrees: ArrayLike) -> NDArray[np.float64]:
    """Vectorised μ_{n,r}: 1 up to n-m, the ramp (m+n-r)/(2m), then 0."""
    r = np.asarray(degrees, dtype=np.float64)
    n, m = params.n, params.m
    return np.clip((m + n - r) / (2 * m), 0.0, 1.0)


@lru_cache(maxsize=128)
def filter_coeffs(params: VpParams) -> FilterCoeffs:
    """Filter coefficients of ``params``, cached and read-only."""
    mu = mu_values(params, np.arange(params.n + params.m))
    return FilterCoeffs(params=params, mu=readonly(mu))


def mu(params: VpParams, r: int) -> float:
    """
    Filter coefficient μ_{n,r}.

    :param r: degree, r >= 0
    """
    r = check_positive_int(r, "r", minimum=0)
    return float(mu_values(params, r))


# ---------------------------------------------------------------------------
# Angle-space kernels (inputs trusted, shapes broadcast)
# ---------------------------------------------------------------------------


def kernel_sum_angles(
    params: VpParams, t: ArrayLike, tau: ArrayLike
) -> NDArray[np.float64]:
    """Filtered-sum kernel on angles t = arccos x, τ = arccos y."""
    t_arr, tau_arr = np.broadcast_arrays(
        np.asarray(t, dtype=np.float64), np.asarray(tau, dtype=np.float64)
    )
    degrees = np.arange(params.n + params.m)
    weights = filter_coeffs(params).mu * norm_factors(degrees.shape[0]) ** 2
    terms = np.cos(np.multiply.outer(t_arr, degrees)) * np.cos(
        np.multiply.outer(tau_arr, degrees)
    )
    return np.asarray(terms @ weights, dtype=np.float64)


def kernel_trig_angles(
    params: VpParams,
    t: ArrayLike,
    tau: ArrayLike,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> NDArray[np.float64]:
    """
    Sine form of the kernel on angles.

    (1/4πm)[sin m(t-τ) sin n(t-τ) / sin²((t-τ)/2) + same with t+τ], with the
    filtered sum substituted wherever t-τ, t+τ or 2π-(t+τ) is below
    ``singular_tol``.
    """
    t_arr, tau_arr = np.broadcast_arrays(
        np.asarray(t, dtype=np.float64), np.asarray(tau, dtype=np.float64)
    )
    shape = t_arr.shape
    t_flat = t_arr.ravel()
    tau_flat = tau_arr.ravel()
    n, m = params.n, params.m

    diff = t_flat - tau_flat
    total = t_flat + tau_flat
    singular = (
        (np.abs(diff) < singular_tol)
        | (total < singular_tol)
        | (2.0 * math.pi - total < singular_tol)
    )
    with np.errstate(divide="ignore", invalid="ignore"):
        first = np.sin(m * diff) * np.sin(n * diff) / np.sin(0.5 * diff) ** 2
        second = np.sin(m * total) * np.sin(n * total) / np.sin(0.5 * total) ** 2
        values = (first + second) / (4.0 * math.pi * m)
    if np.any(singular):
        values[singular] = kernel_sum_angles(params, t_flat[singular], tau_flat[singular])
    return values.reshape(shape)


# ---------------------------------------------------------------------------
# Public point-space API
# ---------------------------------------------------------------------------


def kernel_sum(params: VpParams, x: ArrayLike, y: ArrayLike) -> Any:
    """
    VP kernel v_n^m(x, y) as the filtered Chebyshev sum.

    :raises VpParameterError: if x or y lies outside [-1, 1]
    """
    xs, ys = check_domain(x), check_domain(y)
    values = kernel_sum_angles(params, np.arccos(xs), np.arccos(ys))
    return scalar_or_array(values, values)


def kernel_trig(
    params: VpParams,
    x: ArrayLike,
    y: ArrayLike,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> Any:
    """
    VP kernel v_n^m(x, y) in trigonometric form.

    Symmetric in (x, y) as computed. Near the removable singularities the
    filtered sum is used instead.
    """
    xs, ys = check_domain(x), check_domain(y)
    values = kernel_trig_angles(params, np.arccos(xs), np.arccos(ys), singular_tol)
    return scalar_or_array(values, values)


def sigma(
    params: VpParams,
    f: Callable[[NDArray[np.float64]], ArrayLike],
    quad_order: int | None = None,
) -> Callable[[ArrayLike], Any]:
    """
    The VP mean σ_n^m f(x) = ∫ v_n^m(x, y) f(y) w(y) dy.

    The integral is taken by Gauss-Chebyshev quadrature of order
    ``quad_order`` (default 2(n+m)), which collapses to the filtered
    Chebyshev coefficients of f. The returned callable only closes over
    read-only arrays.

    :param f: vectorised function on [-1, 1]
    """
    order = check_positive_int(quad_order or 2 * (params.n + params.m), "quad_order")
    grid = make_grid(order)
    samples = np.broadcast_to(np.asarray(f(grid.nodes), dtype=np.float64), grid.nodes.shape)
    degrees = np.arange(params.n + params.m)
    coeffs = (math.pi / order) * (samples @ cheb_p_angles(degrees, grid.angles))
    filtered = readonly(coeffs * filter_coeffs(params).mu)

    def evaluate(x: ArrayLike) -> Any:
        xs = check_domain(x)
        values = cheb_p_angles(degrees, np.arccos(xs)) @ filtered
        return scalar_or_array(xs, np.asarray(values, dtype=np.float64))

    return evaluate


def lebesgue_constant_estimate(params: VpParams, grid_size: int | None = None) -> float:
    """
    Grid estimate of max_x Σ_k |Φ_{n,k}^m(x)|.

    The grid is uniform in arccos-space with both endpoints, ``grid_size``
    points (default 10n). Being a maximum over finitely many points it
    bounds the true supremum from below.
    """
    # Imported here: the scaling module builds on this one.
    from .scaling import scaling_matrix

    size = check_positive_int(grid_size or 10 * params.n, "grid_size", minimum=2)
    xs = np.cos(np.linspace(0.0, math.pi, size))
    estimate = float(np.max(np.sum(np.abs(scaling_matrix(params, xs)), axis=1)))
    logger.debug("Lebesgue estimate n=%d m=%d: %.6f", params.n, params.m, estimate)
    return estimate
