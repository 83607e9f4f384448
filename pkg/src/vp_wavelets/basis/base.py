"""Parameter pair, exceptions and argument checks shared by every basis module."""

from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

# Slack accepted on |x| <= 1 before clipping; cos() of a grid angle may land 1 ulp out.
DOMAIN_SLACK = 1e-12


class VpError(Exception):
    """Base class for every error raised by vp_wavelets."""

    pass


class VpParameterError(VpError, ValueError):
    """Raised for invalid degrees, indices, vector lengths, schedules or |x| > 1."""

    pass


class CoeffFileError(VpError):
    """Raised when a coefficient file cannot be read or violates its schema."""

    pass


class ExprSyntaxError(VpError):
    """Raised when an expression does not parse; carries the offset and expected tokens."""

    def __init__(
        self, message: str, offset: int, expected: frozenset[str] = frozenset()
    ):
        self.offset = offset
        self.expected = expected
        detail = f" (expected {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class ExprEvaluationError(VpError):
    """Raised when an expression leaves its domain at some x, e.g. log of a negative."""

    def __init__(self, message: str, x: float, node: str):
        self.x = x
        self.node = node
        super().__init__(f"{message} in {node!r} at x={x!r}")


@dataclass(frozen=True)
class VpParams:
    """
    The pair (n, m) that fixes a de la Vallée Poussin space V_n^m.

    ``n`` is the number of nodes of the level and ``m`` the width of the
    filter ramp; every scaling and wavelet object is built from one of these.

    :param n: resolution degree, n >= 2
    :param m: free parameter, 0 < m < n
    :raises VpParameterError: if the pair violates 0 < m < n
    """

    n: int
    m: int

    def __post_init__(self) -> None:
        for name in ("n", "m"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise VpParameterError(f"{name} must be an integer, got {value!r}")
        if not 0 < self.m < self.n:
            raise VpParameterError(
                f"VP parameters require 0 < m < n, got n={self.n}, m={self.m}"
            )
        # Normalise numpy integers so hashing and equality stay predictable.
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))

    @property
    def low_degree(self) -> int:
        """Degree n - m up to which polynomials are reproduced exactly."""
        return self.n - self.m

    @property
    def high_degree(self) -> int:
        """Degree n + m - 1 of the kernel and of every scaling function."""
        return self.n + self.m - 1

    def tripled(self) -> "VpParams":
        """Parameters of the next finer level, same m."""
        return VpParams(3 * self.n, self.m)


def check_positive_int(value: Any, name: str, minimum: int = 1) -> int:
    """Validate an integer argument and return it as a plain ``int``."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise VpParameterError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise VpParameterError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_index(value: Any, name: str, low: int, high: int) -> int:
    """Validate that an integer index lies in the closed range [low, high]."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise VpParameterError(f"{name} must be an integer, got {value!r}")
    if not low <= value <= high:
        raise VpParameterError(f"{name}={value} outside the range {low}..{high}")
    return int(value)


def check_domain(x: ArrayLike) -> NDArray[np.float64]:
    """
    Return ``x`` as a float array clipped to [-1, 1].

    :raises VpParameterError: if any entry is non-finite or exceeds 1 in
        absolute value by more than ``DOMAIN_SLACK``
    """
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise VpParameterError("evaluation points must be finite")
    if arr.size and np.max(np.abs(arr)) > 1.0 + DOMAIN_SLACK:
        raise VpParameterError(
            f"evaluation point {arr.flat[np.argmax(np.abs(arr))]!r} lies outside [-1, 1]"
        )
    return np.clip(arr, -1.0, 1.0)


def check_vector(v: ArrayLike, length: int, name: str) -> NDArray[np.float64]:
    """Return ``v`` as a one-dimensional float array of the required length."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim != 1:
        raise VpParameterError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.shape[0] != length:
        raise VpParameterError(
            f"{name} must have length {length}, got {arr.shape[0]}"
        )
    return arr


def readonly(arr: NDArray[Any]) -> NDArray[Any]:
    """Mark an array immutable and return it."""
    arr.flags.writeable = False
    return arr


def scalar_or_array(template: NDArray[Any], values: NDArray[np.float64]) -> Any:
    """Return a Python float when ``template`` was a scalar, else the array."""
    if template.ndim == 0:
        return float(values)
    return values
