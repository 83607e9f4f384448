"""Value types for single-level splits and multi-level pyramids."""

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from ..basis.base import VpParameterError, VpParams, check_positive_int, readonly
from ..basis.types import ScalingCoeffs, WaveletCoeffs


@dataclass(frozen=True, eq=False)
class LevelSplit:
    """Values of f_3n at the X_n positions (``a_prime``) and at Y_2n (``a_double_prime``)."""

    a_prime: NDArray[np.float64]
    a_double_prime: NDArray[np.float64]

    def __post_init__(self) -> None:
        a_prime = np.array(self.a_prime, dtype=np.float64, copy=True)
        a_double_prime = np.array(self.a_double_prime, dtype=np.float64, copy=True)
        if a_prime.ndim != 1 or a_double_prime.ndim != 1:
            raise VpParameterError("split parts must be one-dimensional")
        if a_prime.shape[0] == 0 or a_double_prime.shape[0] != 2 * a_prime.shape[0]:
            raise VpParameterError(
                f"split parts must have lengths n and 2n, got {a_prime.shape[0]} "
                f"and {a_double_prime.shape[0]}"
            )
        object.__setattr__(self, "a_prime", readonly(a_prime))
        object.__setattr__(self, "a_double_prime", readonly(a_double_prime))

    @property
    def n(self) -> int:
        return int(self.a_prime.shape[0])


@dataclass(frozen=True, eq=False)
class PyramidLevel:
    """Detail coefficients of one level together with the m they were computed with."""

    n: int
    m: int
    details: WaveletCoeffs

    def __post_init__(self) -> None:
        if self.details.params != VpParams(self.n, self.m):
            raise VpParameterError(
                f"level (n={self.n}, m={self.m}) does not match details "
                f"{self.details.params}"
            )


@dataclass(frozen=True, eq=False)
class Pyramid:
    """
    Multi-level decomposition: coarse coefficients at n0 plus details per level.

    ``levels`` run coarse-to-fine with sizes n0, 3n0, 9n0, ...; each level
    records its own m, which reconstruction must reuse.
    """

    n0: int
    levels: tuple[PyramidLevel, ...]
    coarse: ScalingCoeffs
    theta: float | None = field(default=None)

    def __post_init__(self) -> None:
        n0 = check_positive_int(self.n0, "n0", minimum=2)
        levels = tuple(self.levels)
        if not levels:
            raise VpParameterError("a pyramid needs at least one level")
        for j, level in enumerate(levels):
            expected = n0 * 3**j
            if level.n != expected:
                raise VpParameterError(
                    f"level {j} has size {level.n}, expected {expected}"
                )
        if self.coarse.params != levels[0].details.params:
            raise VpParameterError(
                f"coarse parameters {self.coarse.params} differ from the coarsest "
                f"level {levels[0].details.params}"
            )
        object.__setattr__(self, "n0", n0)
        object.__setattr__(self, "levels", levels)

    @property
    def depth(self) -> int:
        """Number of levels J."""
        return len(self.levels)

    @property
    def size(self) -> int:
        """Total coefficient count n0 * 3^J."""
        return self.n0 * 3**self.depth

    @property
    def m_schedule(self) -> tuple[int, ...]:
        """Recorded m per level, coarse-to-fine."""
        return tuple(level.m for level in self.levels)

    def components(self) -> list[tuple[str, NDArray[np.float64]]]:
        """
        Nodal vectors at the finest grid of each part reconstructed in isolation.

        Labels are ``f_<n0>`` for the coarse part and ``g_<2n>`` per detail
        level; the vectors sum to the full reconstruction.
        """
        from .pyramid import pyramid_components

        return pyramid_components(self)
