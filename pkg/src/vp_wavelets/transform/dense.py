"""
Dense two-scale matrices; the O(n²) reference path for the level transforms.

With A[h,k] = Φ_{n,h}(y_k) the two-scale relation reads

    (Φ_n ; ψ_n) = M (Φ'_3n ; Φ''_3n),   M = [[I, A], [-Aᵀ, I]]

and M⁻¹ has the closed block form built from G⁻¹ = (I + AAᵀ)⁻¹.
"""

import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..basis.base import VpParameterError, VpParams, check_vector
from ..basis.chebgrid import cheb_p_angles, make_grid
from ..basis.scaling import nu_values
from ..basis.types import ScalingCoeffs, WaveletCoeffs
from ..basis.wavelet import cross_matrix
from .level import merge, split
from .types import LevelSplit


def _chebyshev_vandermonde(params: VpParams) -> NDArray[np.float64]:
    """P[r, i] = p_i(x_r) on X_n."""
    n = params.n
    return cheb_p_angles(np.arange(n), make_grid(n).angles)


def two_scale_matrix(params: VpParams) -> NDArray[np.float64]:
    """The (3n, 3n) block matrix M."""
    n = params.n
    a = cross_matrix(params)
    return np.block([[np.eye(n), a], [-a.T, np.eye(2 * n)]])


def gram_matrix(params: VpParams) -> NDArray[np.float64]:
    """G = I + A Aᵀ."""
    a = cross_matrix(params)
    return np.eye(params.n) + a @ a.T


def gram_closed_form(params: VpParams) -> NDArray[np.float64]:
    """G[r,s] = 3 (π/n) Σ_i ν_i p_i(x_r) p_i(x_s)."""
    p = _chebyshev_vandermonde(params)
    return 3.0 * (math.pi / params.n) * (p * nu_values(params)) @ p.T


def inverse_gram(params: VpParams) -> NDArray[np.float64]:
    """G⁻¹[r,s] = (1/3)(π/n) Σ_i p_i(x_r) p_i(x_s) / ν_i."""
    p = _chebyshev_vandermonde(params)
    return (math.pi / (3.0 * params.n)) * (p / nu_values(params)) @ p.T


def inverse_two_scale_matrix(params: VpParams) -> NDArray[np.float64]:
    """M⁻¹ = [[G⁻¹, -G⁻¹A], [AᵀG⁻¹, I - AᵀG⁻¹A]]."""
    a = cross_matrix(params)
    g_inv = inverse_gram(params)
    g_inv_a = g_inv @ a
    return np.block(
        [
            [g_inv, -g_inv_a],
            [a.T @ g_inv, np.eye(2 * params.n) - a.T @ g_inv_a],
        ]
    )


def decompose_level_naive(
    a3n: ArrayLike, params: VpParams
) -> tuple[ScalingCoeffs, WaveletCoeffs]:
    """(a, b) = (a', a'') M⁻¹."""
    n = params.n
    parts = split(check_vector(a3n, 3 * n, "a3n"))
    row = np.concatenate([parts.a_prime, parts.a_double_prime])
    out = row @ inverse_two_scale_matrix(params)
    return ScalingCoeffs(params, out[:n]), WaveletCoeffs(params, out[n:])


def reconstruct_level_naive(
    coarse: ScalingCoeffs, details: WaveletCoeffs
) -> NDArray[np.float64]:
    """(a', a'') = (a, b) M."""
    params = coarse.params
    if details.params != params:
        raise VpParameterError(
            f"coarse {params} and details {details.params} belong to different levels"
        )
    row = np.concatenate([coarse.a, details.b]) @ two_scale_matrix(params)
    return merge(LevelSplit(a_prime=row[: params.n], a_double_prime=row[params.n :]))
