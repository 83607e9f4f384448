"""Coefficient value types for scaling and wavelet spaces."""

from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .base import VpParameterError, VpParams, check_vector, readonly


def _frozen_vector(owner: Any, field: str, per_node: int) -> None:
    if not isinstance(owner.params, VpParams):
        raise VpParameterError(f"params must be VpParams, got {owner.params!r}")
    length = per_node * owner.params.n
    values = np.array(check_vector(getattr(owner, field), length, field), copy=True)
    object.__setattr__(owner, field, readonly(values))


@dataclass(frozen=True, eq=False)
class ScalingCoeffs:
    """
    Element of V_n^m in the interpolating basis.

    ``a[k-1]`` is the value of the represented polynomial at x_k^n.
    """

    params: VpParams
    a: NDArray[np.float64]

    def __post_init__(self) -> None:
        _frozen_vector(self, "a", 1)

    def evaluate(self, xs: ArrayLike) -> Any:
        """Evaluate Σ_k a_k Φ_{n,k}(x)."""
        from .scaling import eval_coeffs

        return eval_coeffs(self, xs)


@dataclass(frozen=True, eq=False)
class OrthoScalingCoeffs:
    """Element of V_n^m against the orthogonal basis; ``c[r]`` pairs with Φ⊥_{n,r}."""

    params: VpParams
    c: NDArray[np.float64]

    def __post_init__(self) -> None:
        _frozen_vector(self, "c", 1)

    def evaluate(self, xs: ArrayLike) -> Any:
        from .chebgrid import cheb_series
        from .scaling import modes_of

        return cheb_series(modes_of(self), xs)


@dataclass(frozen=True, eq=False)
class WaveletCoeffs:
    """
    Element of W_n^m in the interpolating wavelet basis.

    ``b[k-1]`` is the value of the represented polynomial at y_k^n.
    """

    params: VpParams
    b: NDArray[np.float64]

    def __post_init__(self) -> None:
        _frozen_vector(self, "b", 2)

    def evaluate(self, xs: ArrayLike) -> Any:
        """Evaluate Σ_k b_k ψ_{n,k}(x)."""
        from .wavelet import eval_wavelet_coeffs

        return eval_wavelet_coeffs(self, xs)


@dataclass(frozen=True, eq=False)
class OrthoWaveletCoeffs:
    """Element of W_n^m against ψ⊥; ``d[i]`` pairs with ψ⊥_{n,n+i}."""

    params: VpParams
    d: NDArray[np.float64]

    def __post_init__(self) -> None:
        _frozen_vector(self, "d", 2)

    def evaluate(self, xs: ArrayLike) -> Any:
        from .chebgrid import cheb_series
        from .wavelet import wavelet_modes_of

        return cheb_series(wavelet_modes_of(self), xs)
