"""
Scaling functions of V_n^m, the VP interpolant and the orthogonal scaling basis.

Φ_{n,k}(x) = (π/n) v_n^m(x_k, x) is the interpolating basis (Φ_{n,k}(x_h) = δ_hk).
The orthogonal basis is Φ⊥_{n,r} = p_r for r <= n-m and
μ_{n,r} p_r - μ_{n,2n-r} p_{2n-r} on the ramp, with ⟨Φ⊥_r, Φ⊥_r⟩ = ν_{n,r}.
"""

import math
from collections.abc import Callable
from functools import lru_cache
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import sparse

from .base import (
    VpParameterError,
    VpParams,
    check_domain,
    check_index,
    check_positive_int,
    scalar_or_array,
)
from .chebgrid import cheb_series, dct2_scaled, dct3_scaled, make_grid
from .types import OrthoScalingCoeffs, ScalingCoeffs
from .vpkernel import DEFAULT_SINGULAR_TOL, kernel_trig_angles, mu_values


def scaling_at_angles(
    params: VpParams,
    t: ArrayLike,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> NDArray[np.float64]:
    """Φ_{n,k}(cos t) for all k; shape ``t.shape + (n,)``."""
    t_arr = np.asarray(t, dtype=np.float64)
    node_angles = make_grid(params.n).angles
    kernel = kernel_trig_angles(params, t_arr[..., np.newaxis], node_angles, singular_tol)
    return (math.pi / params.n) * kernel


def scaling_matrix(
    params: VpParams,
    xs: ArrayLike,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> NDArray[np.float64]:
    """Matrix of Φ_{n,k}(x_i), shape ``(len(xs), n)``."""
    points = check_domain(xs)
    return scaling_at_angles(params, np.arccos(points), singular_tol)


def eval_scaling(
    params: VpParams,
    k: int,
    x: ArrayLike,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> Any:
    """
    Evaluate the scaling function Φ_{n,k}^m.

    :param k: node index, 1..n
    :param x: point or array of points in [-1, 1]
    :raises VpParameterError: if k is out of range or |x| > 1
    """
    k = check_index(k, "k", 1, params.n)
    points = check_domain(x)
    node_angle = make_grid(params.n).angles[k - 1]
    values = (math.pi / params.n) * kernel_trig_angles(
        params, np.arccos(points), node_angle, singular_tol
    )
    return scalar_or_array(points, values)


# ---------------------------------------------------------------------------
# Orthogonal scaling basis
# ---------------------------------------------------------------------------


def nu_values(params: VpParams) -> NDArray[np.float64]:
    """Gram diagonal ν_{n,r} for r = 0..n-1."""
    n, m = params.n, params.m
    r = np.arange(n, dtype=np.float64)
    ramp = (m * m + (n - r) ** 2) / (2.0 * m * m)
    return np.where(r <= n - m, 1.0, ramp)


def nu(params: VpParams, r: int) -> float:
    """Squared norm ν_{n,r} of Φ⊥_{n,r}."""
    r = check_index(r, "r", 0, params.n - 1)
    return float(nu_values(params)[r])


@lru_cache(maxsize=128)
def ortho_mode_matrix(params: VpParams, width: int | None = None) -> sparse.csr_matrix:
    """
    Chebyshev mode expansion of Φ⊥_{n,r}, one row per r.

    Row r holds the coefficients of p_0..p_{width-1}; at most two entries are
    non-zero. ``width`` defaults to n+m. The cached matrix must not be mutated.
    """
    n, m = params.n, params.m
    width = n + m if width is None else check_positive_int(width, "width", n + m)
    low = np.arange(0, n - m + 1)
    ramp = np.arange(n - m + 1, n)
    rows = np.concatenate([low, ramp, ramp])
    cols = np.concatenate([low, ramp, 2 * n - ramp])
    vals = np.concatenate(
        [np.ones(low.shape[0]), mu_values(params, ramp), -mu_values(params, 2 * n - ramp)]
    )
    return sparse.csr_matrix((vals, (rows, cols)), shape=(n, width))


def ortho_modes(params: VpParams, c: ArrayLike) -> NDArray[np.float64]:
    """Chebyshev modes (length n+m) of Σ_r c_r Φ⊥_{n,r}."""
    coeffs = np.asarray(c, dtype=np.float64)
    return np.asarray(ortho_mode_matrix(params).T @ coeffs, dtype=np.float64)


def ortho_project(params: VpParams, modes: ArrayLike) -> NDArray[np.float64]:
    """
    Inner products ⟨Σ_j modes_j p_j, Φ⊥_{n,r}⟩ for r = 0..n-1.

    Adjoint of ``ortho_modes``; ``modes`` may be longer than n+m, extra
    entries are orthogonal to every Φ⊥_{n,r}.
    """
    vec = np.asarray(modes, dtype=np.float64)
    width = params.n + params.m
    if vec.shape[0] < width:
        vec = np.pad(vec, (0, width - vec.shape[0]))
    return np.asarray(ortho_mode_matrix(params) @ vec[:width], dtype=np.float64)


def modes_of(oc: OrthoScalingCoeffs) -> NDArray[np.float64]:
    """Chebyshev mode expansion of an orthogonal-basis element."""
    return ortho_modes(oc.params, oc.c)


def eval_ortho_scaling(params: VpParams, r: int, x: ArrayLike) -> Any:
    """
    Evaluate Φ⊥_{n,r}.

    :param r: basis index, 0..n-1
    """
    r = check_index(r, "r", 0, params.n - 1)
    row = ortho_mode_matrix(params)[r].toarray().ravel()
    return cheb_series(row, x)


def ortho_energy(oc: OrthoScalingCoeffs) -> float:
    """Squared weighted L² norm Σ_r c_r² ν_{n,r}."""
    return float(np.sum(oc.c**2 * nu_values(oc.params)))


# ---------------------------------------------------------------------------
# Interpolating representation
# ---------------------------------------------------------------------------


def vp_interpolant(samples: ArrayLike, params: VpParams) -> ScalingCoeffs:
    """
    VP interpolant V_n^m f from the samples of f at X_n (index order).

    :raises VpParameterError: on a length mismatch
    """
    return ScalingCoeffs(params=params, a=np.asarray(samples, dtype=np.float64))


def interpolate(
    f: Callable[[NDArray[np.float64]], ArrayLike], params: VpParams
) -> ScalingCoeffs:
    """Sample a vectorised ``f`` at X_n and return its VP interpolant."""
    nodes = make_grid(params.n).nodes
    samples = np.broadcast_to(np.asarray(f(nodes), dtype=np.float64), nodes.shape)
    return vp_interpolant(samples, params)


def eval_coeffs(
    coeffs: ScalingCoeffs,
    xs: ArrayLike,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> Any:
    """Evaluate Σ_k a_k Φ_{n,k}(x) pointwise; O(n) per point."""
    points = check_domain(xs)
    values = scaling_at_angles(coeffs.params, np.arccos(points), singular_tol) @ coeffs.a
    return scalar_or_array(points, np.asarray(values, dtype=np.float64))


def to_ortho(coeffs: ScalingCoeffs) -> OrthoScalingCoeffs:
    """Change to the orthogonal basis, c_r = (π/n) Σ_k a_k p_r(x_k)."""
    n = coeffs.params.n
    return OrthoScalingCoeffs(params=coeffs.params, c=dct2_scaled(coeffs.a, math.pi / n))


def from_ortho(oc: OrthoScalingCoeffs) -> ScalingCoeffs:
    """Inverse of ``to_ortho``: nodal values a_k = Σ_r c_r p_r(x_k)."""
    return ScalingCoeffs(params=oc.params, a=dct3_scaled(oc.c))


# ---------------------------------------------------------------------------
# Norms
# ---------------------------------------------------------------------------


def discrete_norm(a: ArrayLike, p: float = 2.0) -> float:
    """
    Weighted ℓ^p norm (π/n Σ|a_k|^p)^{1/p} of a nodal vector; max |a_k| for p = inf.

    This is the discrete side of the Riesz-type bounds on V_n^m.
    """
    vec = np.asarray(a, dtype=np.float64)
    if vec.ndim != 1 or vec.shape[0] == 0:
        raise VpParameterError("a must be a non-empty one-dimensional vector")
    if p == math.inf:
        return float(np.max(np.abs(vec)))
    if p < 1:
        raise VpParameterError(f"p must be >= 1, got {p}")
    return float((math.pi / vec.shape[0] * np.sum(np.abs(vec) ** p)) ** (1.0 / p))


def weighted_norm(
    values_fn: Callable[[NDArray[np.float64]], ArrayLike],
    p: float = 2.0,
    quad_order: int = 256,
) -> float:
    """
    ‖F‖_p against the Chebyshev weight by Gauss-Chebyshev quadrature.

    For p = 2 and polynomial F of degree < ``quad_order`` the value is exact.
    """
    if p < 1:
        raise VpParameterError(f"p must be >= 1, got {p}")
    grid = make_grid(quad_order)
    values = np.broadcast_to(np.asarray(values_fn(grid.nodes), dtype=np.float64), grid.nodes.shape)
    return discrete_norm(values, p)
