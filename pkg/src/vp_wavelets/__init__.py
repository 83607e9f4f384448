"""vp-wavelets: de la Vallée Poussin polynomial wavelets on [-1, 1]."""

__author__ = "Jonas"
__email__ = "charlie@callaway.cloud"

# Core basis and transform functionality
from .basis import (  # noqa: F401
    OrthoScalingCoeffs,
    OrthoWaveletCoeffs,
    ScalingCoeffs,
    VpError,
    VpParameterError,
    VpParams,
    WaveletCoeffs,
    eval_coeffs,
    eval_scaling,
    eval_wavelet,
    eval_wavelet_coeffs,
    from_ortho,
    interpolate,
    make_embedding,
    make_grid,
    to_ortho,
    vp_interpolant,
)
from .basis.base import CoeffFileError, ExprEvaluationError, ExprSyntaxError  # noqa: F401
from .transform import (  # noqa: F401
    Pyramid,
    decompose_level,
    multi_decompose,
    multi_reconstruct,
    ortho_decompose,
    ortho_reconstruct,
    reconstruct_level,
    threshold_pyramid,
)

# Core package exports the numerical library
# Exporter functionality is included by default, but gracefully handles missing deps
__all__ = [
    "VpParams",
    "VpError",
    "VpParameterError",
    "CoeffFileError",
    "ExprSyntaxError",
    "ExprEvaluationError",
    "ScalingCoeffs",
    "OrthoScalingCoeffs",
    "WaveletCoeffs",
    "OrthoWaveletCoeffs",
    "make_grid",
    "make_embedding",
    "eval_scaling",
    "eval_wavelet",
    "eval_coeffs",
    "eval_wavelet_coeffs",
    "interpolate",
    "vp_interpolant",
    "to_ortho",
    "from_ortho",
    "Pyramid",
    "decompose_level",
    "reconstruct_level",
    "ortho_decompose",
    "ortho_reconstruct",
    "multi_decompose",
    "multi_reconstruct",
    "threshold_pyramid",
]

# Coefficient files need only pydantic
from .exporter.coeff_file import (  # noqa: F401
    CoeffFile,
    read_coeff_file,
    write_coeff_file,
)

__all__.extend(["CoeffFile", "read_coeff_file", "write_coeff_file"])

# Plot tables need pandas; skip them if it is missing
try:
    from .exporter.plot_data import PlotWriter, levels_table  # noqa: F401

    __all__.extend(["PlotWriter", "levels_table"])

except ImportError:
    # Exporter dependencies not available - this is fine for core-only installs
    pass
