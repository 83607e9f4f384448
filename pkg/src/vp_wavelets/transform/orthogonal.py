"""
Level transforms in the orthogonal bases Φ⊥ and ψ⊥.

With s[k,j] = ⟨Φ⊥_{n,k}, Φ⊥_{3n,j}⟩ and w[k,j] = ⟨ψ⊥_{n,k}, Φ⊥_{3n,j}⟩
the two-scale matrix is M[k,j] = (s; w)[k,j] / ν_{3n,j}, and its inverse
divides the transposed blocks by ν_{n,j} and v_{n,j}. Both are sparse with
at most two non-zeros per row.
"""

from functools import lru_cache

import numpy as np
from scipy import sparse

from ..basis.base import VpParameterError, VpParams
from ..basis.scaling import nu_values, ortho_mode_matrix
from ..basis.types import OrthoScalingCoeffs, OrthoWaveletCoeffs
from ..basis.wavelet import ortho_wavelet_mode_matrix, v_values


def _inner_products(params: VpParams) -> tuple[sparse.csr_matrix, sparse.csr_matrix]:
    """The blocks s (n, 3n) and w (2n, 3n) from Chebyshev-mode expansions."""
    n, m = params.n, params.m
    width = 3 * n + m
    fine = ortho_mode_matrix(params.tripled())
    coarse = ortho_mode_matrix(params, width)
    wavelets = ortho_wavelet_mode_matrix(params, width)
    return (coarse @ fine.T).tocsr(), (wavelets @ fine.T).tocsr()


@lru_cache(maxsize=64)
def ortho_two_scale_matrix(params: VpParams) -> sparse.csr_matrix:
    """Sparse M with (Φ⊥_n ; ψ⊥_n) = M Φ⊥_3n. Cached; do not mutate."""
    s, w = _inner_products(params)
    scale = sparse.diags(1.0 / nu_values(params.tripled()))
    return (sparse.vstack([s, w]) @ scale).tocsr()


@lru_cache(maxsize=64)
def ortho_inverse_two_scale_matrix(params: VpParams) -> sparse.csr_matrix:
    """Sparse M⁻¹ = [sᵀ diag(1/ν_n) | wᵀ diag(1/v_n)]. Cached; do not mutate."""
    s, w = _inner_products(params)
    left = s.T @ sparse.diags(1.0 / nu_values(params))
    right = w.T @ sparse.diags(1.0 / v_values(params))
    return sparse.hstack([left, right]).tocsr()


def coarse_params(fine: VpParams) -> VpParams:
    """Parameters (n, m) of the level below (3n, m)."""
    if fine.n % 3:
        raise VpParameterError(f"level size {fine.n} is not divisible by 3")
    return VpParams(fine.n // 3, fine.m)


def ortho_decompose(
    a_ortho_3n: OrthoScalingCoeffs,
) -> tuple[OrthoScalingCoeffs, OrthoWaveletCoeffs]:
    """
    (a⊥_n, b⊥_2n) = a⊥_3n M⁻¹.

    :param a_ortho_3n: coefficients at level (3n, m); m < n is required
    :raises VpParameterError: if 3n is not divisible by 3 or m >= n
    """
    params = coarse_params(a_ortho_3n.params)
    out = ortho_inverse_two_scale_matrix(params).T @ a_ortho_3n.c
    n = params.n
    return (
        OrthoScalingCoeffs(params, out[:n]),
        OrthoWaveletCoeffs(params, out[n:]),
    )


def ortho_reconstruct(
    coarse: OrthoScalingCoeffs, details: OrthoWaveletCoeffs
) -> OrthoScalingCoeffs:
    """a⊥_3n = (a⊥_n, b⊥_2n) M."""
    params = coarse.params
    if details.params != params:
        raise VpParameterError(
            f"coarse {params} and details {details.params} belong to different levels"
        )
    matrix = ortho_two_scale_matrix(params)
    stacked = np.concatenate([coarse.c, details.d])
    return OrthoScalingCoeffs(params.tripled(), matrix.T @ stacked)

