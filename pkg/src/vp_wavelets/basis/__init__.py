"""
Basis functions of the de la Vallée Poussin multiresolution on [-1, 1].

- chebgrid: Chebyshev nodes, embeddings X_n ⊂ X_3n, scaled cosine transforms
- vpkernel: the VP filter and kernel, the VP mean, Lebesgue estimates
- scaling: scaling functions, VP interpolation, orthogonal scaling basis
- wavelet: interpolating and orthogonal wavelets, change of basis
"""

from .base import VpError, VpParameterError, VpParams
from .chebgrid import (
    ChebGrid,
    GridEmbedding,
    cheb_p,
    cheb_series,
    dct2_scaled,
    dct3_scaled,
    gauss_cheb_quadrature,
    make_embedding,
    make_grid,
    y_nodes,
)
from .scaling import (
    discrete_norm,
    eval_coeffs,
    eval_ortho_scaling,
    eval_scaling,
    from_ortho,
    interpolate,
    modes_of,
    nu,
    nu_values,
    ortho_energy,
    scaling_matrix,
    to_ortho,
    vp_interpolant,
    weighted_norm,
)
from .types import (
    OrthoScalingCoeffs,
    OrthoWaveletCoeffs,
    ScalingCoeffs,
    WaveletCoeffs,
)
from .vpkernel import (
    FilterCoeffs,
    filter_coeffs,
    kernel_sum,
    kernel_trig,
    lebesgue_constant_estimate,
    mu,
    sigma,
)
from .wavelet import (
    check_vanishing_moments,
    eval_ortho_wavelet,
    eval_wavelet,
    eval_wavelet_coeffs,
    ortho_wavelet_energy,
    rho,
    rho_table,
    v_coeff,
    v_values,
    wavelet_matrix,
    wavelet_modes_of,
    wavelet_to_ortho,
)

__all__ = [
    # Parameters and errors
    "VpError",
    "VpParameterError",
    "VpParams",
    # Grids and transforms
    "ChebGrid",
    "GridEmbedding",
    "cheb_p",
    "cheb_series",
    "dct2_scaled",
    "dct3_scaled",
    "gauss_cheb_quadrature",
    "make_embedding",
    "make_grid",
    "y_nodes",
    # Kernel
    "FilterCoeffs",
    "filter_coeffs",
    "kernel_sum",
    "kernel_trig",
    "lebesgue_constant_estimate",
    "mu",
    "sigma",
    # Scaling functions
    "ScalingCoeffs",
    "OrthoScalingCoeffs",
    "discrete_norm",
    "eval_coeffs",
    "eval_ortho_scaling",
    "eval_scaling",
    "from_ortho",
    "interpolate",
    "modes_of",
    "nu",
    "nu_values",
    "ortho_energy",
    "scaling_matrix",
    "to_ortho",
    "vp_interpolant",
    "weighted_norm",
    # Wavelets
    "WaveletCoeffs",
    "OrthoWaveletCoeffs",
    "check_vanishing_moments",
    "eval_ortho_wavelet",
    "eval_wavelet",
    "eval_wavelet_coeffs",
    "ortho_wavelet_energy",
    "rho",
    "rho_table",
    "v_coeff",
    "v_values",
    "wavelet_matrix",
    "wavelet_modes_of",
    "wavelet_to_ortho",
]
