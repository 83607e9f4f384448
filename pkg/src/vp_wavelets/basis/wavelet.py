"""
Interpolating and orthogonal wavelets of W_n^m, the complement of V_n^m in V_3n^m.

The interpolating wavelet attached to y_k^n is

    ψ_{n,k}(x) = Φ_3n(y_k, x) - Σ_h Φ_{n,h}(y_k) Φ_3n(x_h, x)

with level-3n kernels of the same m, so ψ_{n,k}(y_h) = δ_hk and
ψ_{n,k}(x_h) = -Φ_{n,h}(y_k).
"""

import logging
import math
from functools import lru_cache
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import sparse

from .base import (
    VpParams,
    check_domain,
    check_index,
    check_positive_int,
    readonly,
    scalar_or_array,
)
from .chebgrid import (
    cheb_p_angles,
    cheb_series,
    make_embedding,
    make_grid,
    y_angles,
)
from .scaling import scaling_at_angles
from .types import OrthoWaveletCoeffs, WaveletCoeffs
from .vpkernel import DEFAULT_SINGULAR_TOL, kernel_trig_angles, mu_values

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def cross_matrix(params: VpParams) -> NDArray[np.float64]:
    """
    The matrix A with A[h-1, k-1] = Φ_{n,h}(y_k^n), shape (n, 2n).

    Cached and read-only.
    """
    values = scaling_at_angles(params, y_angles(params.n))
    return readonly(np.ascontiguousarray(values.T))


def _fine_kernels(
    params: VpParams, t: NDArray[np.float64], singular_tol: float
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Φ_3n(x_h, x) and Φ_3n(y_k, x) at angles t, split by the embedding."""
    n = params.n
    fine = make_grid(3 * n)
    emb = make_embedding(n)
    kernel = (math.pi / (3 * n)) * kernel_trig_angles(
        params.tripled(), t[..., np.newaxis], fine.angles, singular_tol
    )
    return kernel[..., emb.x_slots], kernel[..., emb.y_slots]


def wavelet_matrix(
    params: VpParams,
    xs: ArrayLike,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> NDArray[np.float64]:
    """Matrix of ψ_{n,k}(x_i), shape ``(len(xs), 2n)``."""
    points = check_domain(xs)
    at_x, at_y = _fine_kernels(params, np.arccos(points), singular_tol)
    return at_y - at_x @ cross_matrix(params)


def eval_wavelet(
    params: VpParams,
    k: int,
    x: ArrayLike,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> Any:
    """
    Evaluate the interpolating wavelet ψ_{n,k}^m.

    :param k: Y-node index, 1..2n
    :raises VpParameterError: if k is out of range or |x| > 1
    """
    k = check_index(k, "k", 1, 2 * params.n)
    points = check_domain(x)
    at_x, at_y = _fine_kernels(params, np.arccos(points), singular_tol)
    values = at_y[..., k - 1] - at_x @ cross_matrix(params)[:, k - 1]
    return scalar_or_array(points, values)


def eval_wavelet_coeffs(
    coeffs: WaveletCoeffs,
    xs: ArrayLike,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> Any:
    """Evaluate Σ_k b_k ψ_{n,k}(x) pointwise; O(n) per point."""
    points = check_domain(xs)
    at_x, at_y = _fine_kernels(coeffs.params, np.arccos(points), singular_tol)
    values = at_y @ coeffs.b - at_x @ (cross_matrix(coeffs.params) @ coeffs.b)
    return scalar_or_array(points, np.asarray(values, dtype=np.float64))


# ---------------------------------------------------------------------------
# Orthogonal wavelet basis, indexed r = n..3n-1
# ---------------------------------------------------------------------------


def v_values(params: VpParams) -> NDArray[np.float64]:
    """Gram diagonal v_{n,r} for r = n..3n-1."""
    n, m = params.n, params.m
    r = np.arange(n, 3 * n, dtype=np.float64)
    values = np.ones(2 * n)
    low = (r > n) & (r < n + m)
    high = r > 3 * n - m
    values[low] = (m * m + (r[low] - n) ** 2) / (2.0 * m * m)
    values[high] = (m * m + (3 * n - r[high]) ** 2) / (2.0 * m * m)
    return values


def v_coeff(params: VpParams, r: int) -> float:
    """Squared norm v_{n,r} of ψ⊥_{n,r}."""
    r = check_index(r, "r", params.n, 3 * params.n - 1)
    return float(v_values(params)[r - params.n])


@lru_cache(maxsize=128)
def ortho_wavelet_mode_matrix(
    params: VpParams, width: int | None = None
) -> sparse.csr_matrix:
    """
    Chebyshev mode expansion of ψ⊥_{n,r}; row r-n, default width 3n+m.

    The cached matrix must not be mutated.
    """
    n, m = params.n, params.m
    width = 3 * n + m if width is None else check_positive_int(width, "width", 3 * n + m)
    fine = params.tripled()

    low = np.arange(n, n + m)
    middle = np.arange(n + m, 3 * n - m + 1)
    high = np.arange(3 * n - m + 1, 3 * n)
    degrees = np.concatenate([low, low, middle, high, high])
    cols = np.concatenate([2 * n - low, low, middle, high, 6 * n - high])
    vals = np.concatenate(
        [
            mu_values(params, low),
            mu_values(params, 2 * n - low),
            np.ones(middle.shape[0]),
            mu_values(fine, high),
            -mu_values(fine, 6 * n - high),
        ]
    )
    # r = n lands twice on column n with weight 1/2; csr sums duplicates.
    return sparse.csr_matrix((vals, (degrees - n, cols)), shape=(2 * n, width))


def wavelet_modes(params: VpParams, d: ArrayLike) -> NDArray[np.float64]:
    """Chebyshev modes (length 3n+m) of Σ_r d_r ψ⊥_{n,r}."""
    coeffs = np.asarray(d, dtype=np.float64)
    return np.asarray(ortho_wavelet_mode_matrix(params).T @ coeffs, dtype=np.float64)


def wavelet_modes_of(od: OrthoWaveletCoeffs) -> NDArray[np.float64]:
    return wavelet_modes(od.params, od.d)


def eval_ortho_wavelet(params: VpParams, r: int, x: ArrayLike) -> Any:
    """
    Evaluate ψ⊥_{n,r}.

    :param r: basis index, n..3n-1
    """
    r = check_index(r, "r", params.n, 3 * params.n - 1)
    row = ortho_wavelet_mode_matrix(params)[r - params.n].toarray().ravel()
    return cheb_series(row, x)


def ortho_wavelet_energy(od: OrthoWaveletCoeffs) -> float:
    """Squared weighted L² norm Σ_r d_r² v_{n,r}."""
    return float(np.sum(od.d**2 * v_values(od.params)))


@lru_cache(maxsize=64)
def rho_table(params: VpParams) -> NDArray[np.float64]:
    """
    Change-of-basis coefficients ρ_{r,k}, row r-n, column k-1.

    ψ_{n,k} = Σ_r ρ_{r,k} ψ⊥_{n,r}. Built once per parameter pair and read-only.
    """
    n = params.n
    t = y_angles(n)
    r = np.arange(n, 3 * n)
    p = cheb_p_angles(np.arange(4 * n), t).T  # p[j, k-1] = p_j(y_k)

    table = p[r].copy()
    middle = (r > n) & (r <= 3 * n - params.m)
    table[middle] += p[np.abs(2 * n - r[middle])]
    table[n] = p[2 * n] + math.sqrt(2.0) * p[0]
    high = r > 3 * n - params.m
    table[high] += (
        mu_values(params, r[high] - 2 * n)[:, np.newaxis] * p[r[high] - 2 * n]
        - mu_values(params, 4 * n - r[high])[:, np.newaxis] * p[4 * n - r[high]]
    )
    table *= math.pi / (3 * n)
    logger.debug("Built rho table for n=%d m=%d", n, params.m)
    return readonly(table)


def rho(params: VpParams, r: int, k: int) -> float:
    """Coefficient of ψ⊥_{n,r} in the expansion of ψ_{n,k}."""
    r = check_index(r, "r", params.n, 3 * params.n - 1)
    k = check_index(k, "k", 1, 2 * params.n)
    return float(rho_table(params)[r - params.n, k - 1])


def wavelet_to_ortho(coeffs: WaveletCoeffs) -> OrthoWaveletCoeffs:
    """Coefficients of Σ_k b_k ψ_{n,k} against ψ⊥_{n,r}."""
    return OrthoWaveletCoeffs(params=coeffs.params, d=rho_table(coeffs.params) @ coeffs.b)


def check_vanishing_moments(
    params: VpParams,
    k: int,
    max_degree: int | None = None,
    quad_order: int | None = None,
) -> float:
    """
    Largest |∫ x^s ψ_{n,k}(x) w(x) dx| over 0 <= s <= ``max_degree``.

    ``max_degree`` defaults to n-m, where every moment vanishes; the
    quadrature order defaults to 4n, exact for all these integrands.
    """
    k = check_index(k, "k", 1, 2 * params.n)
    top = params.low_degree if max_degree is None else check_positive_int(
        max_degree, "max_degree", minimum=0
    )
    order = check_positive_int(quad_order or 4 * params.n, "quad_order")
    grid = make_grid(order)
    psi = eval_wavelet(params, k, grid.nodes)
    powers = np.vander(grid.nodes, top + 1, increasing=True)
    moments = (math.pi / order) * (psi @ powers)
    return float(np.max(np.abs(moments)))
