"""
Fast single-level decomposition and reconstruction V_3n^m <-> V_n^m ⊕ W_n^m.

Both directions take four cosine-transform steps, O(n log n) overall.
Sums over the Y_2n nodes run as length-3n transforms with zeros in the
X_n slots, so every step is a plain DCT on a Chebyshev grid.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..basis.base import VpParameterError, VpParams, check_vector
from ..basis.chebgrid import dct2_scaled, dct3_scaled, make_embedding
from ..basis.scaling import nu_values, ortho_modes, ortho_project
from ..basis.types import ScalingCoeffs, WaveletCoeffs
from .types import LevelSplit

logger = logging.getLogger(__name__)


def split(a3n: ArrayLike) -> LevelSplit:
    """
    Separate the X_n positions (2nd, 5th, 8th, ...) from the Y_2n positions.

    :raises VpParameterError: if the length is not a positive multiple of 3
    """
    values = np.asarray(a3n, dtype=np.float64)
    if values.ndim != 1 or values.shape[0] == 0 or values.shape[0] % 3:
        raise VpParameterError(
            f"expected a non-empty vector with length divisible by 3, got shape {values.shape}"
        )
    emb = make_embedding(values.shape[0] // 3)
    return LevelSplit(a_prime=values[emb.x_slots], a_double_prime=values[emb.y_slots])


def merge(ls: LevelSplit) -> NDArray[np.float64]:
    """Interleave a split back into X_3n order; exact inverse of ``split``."""
    emb = make_embedding(ls.n)
    out = np.empty(3 * ls.n, dtype=np.float64)
    out[emb.x_slots] = ls.a_prime
    out[emb.y_slots] = ls.a_double_prime
    return out


def _analyse_y(params: VpParams, values_y: NDArray[np.float64]) -> NDArray[np.float64]:
    """(π/3n) Σ_s values_s Φ⊥_{n,r}(y_s) for r = 0..n-1."""
    n = params.n
    padded = np.zeros(3 * n)
    padded[make_embedding(n).y_slots] = values_y
    return ortho_project(params, dct2_scaled(padded, math.pi / (3 * n)))


def _synthesise_y(params: VpParams, coeffs: NDArray[np.float64]) -> NDArray[np.float64]:
    """Σ_r coeffs_r Φ⊥_{n,r}(y_k) for k = 1..2n."""
    n = params.n
    modes = np.zeros(3 * n)
    expansion = ortho_modes(params, coeffs)
    modes[: expansion.shape[0]] = expansion
    return dct3_scaled(modes)[make_embedding(n).y_slots]


def decompose_level(
    a3n: ArrayLike, params: VpParams
) -> tuple[ScalingCoeffs, WaveletCoeffs]:
    """
    Split f_3n into its projection f_n on V_n^m and the detail g_2n in W_n^m.

    :param a3n: values of f_3n at X_3n, index order
    :param params: the coarse level (n, m); f_3n must lie in V_3n^m, same m
    :returns: nodal values of f_n at X_n and of g_2n at Y_2n
    :raises VpParameterError: on a length mismatch
    """
    n = params.n
    parts = split(check_vector(a3n, 3 * n, "a3n"))

    alpha = dct2_scaled(parts.a_prime, math.pi / (3 * n))
    beta = _analyse_y(params, parts.a_double_prime)
    gamma = (alpha + beta) / nu_values(params)

    coarse = dct3_scaled(gamma)
    details = parts.a_double_prime - _synthesise_y(params, gamma)
    logger.debug("Decomposed level 3n=%d with m=%d", 3 * n, params.m)
    return ScalingCoeffs(params, coarse), WaveletCoeffs(params, details)


def reconstruct_level(
    coarse: ScalingCoeffs, details: WaveletCoeffs
) -> NDArray[np.float64]:
    """
    Rebuild the X_3n values of f_n + g_2n.

    :raises VpParameterError: if coarse and details use different parameters
    """
    params = coarse.params
    if details.params != params:
        raise VpParameterError(
            f"coarse {params} and details {details.params} belong to different levels"
        )
    n = params.n

    alpha = dct2_scaled(coarse.a, math.pi / n)
    beta = _analyse_y(params, details.b)

    a_prime = coarse.a - 3.0 * dct3_scaled(beta)
    a_double_prime = details.b + _synthesise_y(params, alpha)
    logger.debug("Reconstructed level 3n=%d with m=%d", 3 * n, params.m)
    return merge(LevelSplit(a_prime=a_prime, a_double_prime=a_double_prime))
