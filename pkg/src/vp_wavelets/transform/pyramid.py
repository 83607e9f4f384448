"""
Multi-level decomposition with a per-level choice of m.

Levels are iterated fine-to-coarse on decomposition and coarse-to-fine on
reconstruction; the m used at every level is recorded in the pyramid since
reconstruction must reuse it.
"""

import logging
import math
from collections.abc import Callable, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..basis.base import VpParameterError, VpParams, check_positive_int
from ..basis.types import ScalingCoeffs, WaveletCoeffs
from .level import decompose_level, reconstruct_level
from .types import Pyramid, PyramidLevel

logger = logging.getLogger(__name__)

DEFAULT_THETA = 0.7

MSchedule = Sequence[int] | Callable[[int], int] | None


def theta_m(n: int, theta: float) -> int:
    """m = max(1, ⌊θ n⌋) at one level of size n."""
    return max(1, math.floor(theta * n))


def theta_schedule(
    n0: int, levels: int, theta: float = DEFAULT_THETA
) -> tuple[int, ...]:
    """
    m = max(1, ⌊θ n⌋) for n = n0, 3n0, ..., coarse-to-fine.

    A warning is logged whenever the clamp to m = 1 applies.

    :raises VpParameterError: if θ is not in (0, 1) or n0 < 2
    """
    n0 = check_positive_int(n0, "n0", minimum=2)
    levels = check_positive_int(levels, "levels")
    if not 0.0 < theta < 1.0:
        raise VpParameterError(f"theta must lie in (0, 1), got {theta}")
    schedule = []
    for j in range(levels):
        n = n0 * 3**j
        floor_m = math.floor(theta * n)
        if floor_m < 1:
            logger.warning(
                "floor(theta*n) = %d at n=%d (theta=%g); clamping m to 1",
                floor_m,
                n,
                theta,
            )
        schedule.append(theta_m(n, theta))
    return tuple(schedule)


def explicit_schedule(n0: int, m_list: Sequence[int]) -> tuple[int, ...]:
    """
    Validate an explicit coarse-to-fine list of m values.

    :raises VpParameterError: if any m violates 0 < m < n at its level
    """
    n0 = check_positive_int(n0, "n0", minimum=2)
    schedule = tuple(int(m) for m in m_list)
    if not schedule:
        raise VpParameterError("m-list must not be empty")
    for j, m in enumerate(schedule):
        VpParams(n0 * 3**j, m)
    return schedule


def level_count(length: int, n0: int) -> int:
    """
    The J with length = n0 * 3^J.

    :raises VpParameterError: if the length does not factor this way
    """
    n0 = check_positive_int(n0, "n0")
    size = check_positive_int(length, "length")
    levels = 0
    while size > n0 and size % 3 == 0:
        size //= 3
        levels += 1
    if size != n0:
        raise VpParameterError(f"length {length} is not n0 * 3^J for n0={n0}")
    return levels


def _resolve_schedule(
    n0: int, levels: int, m_schedule: MSchedule, theta: float
) -> tuple[int, ...]:
    if m_schedule is None:
        return theta_schedule(n0, levels, theta)
    if callable(m_schedule):
        return explicit_schedule(n0, [m_schedule(n0 * 3**j) for j in range(levels)])
    schedule = explicit_schedule(n0, m_schedule)
    if len(schedule) != levels:
        raise VpParameterError(
            f"m-list has {len(schedule)} entries but the samples span {levels} levels"
        )
    return schedule


def multi_decompose(
    samples: ArrayLike,
    n0: int,
    m_schedule: MSchedule = None,
    *,
    theta: float = DEFAULT_THETA,
) -> Pyramid:
    """
    Decompose samples at X_{n0 3^J} into a pyramid of J levels.

    :param samples: values at the finest grid, index order
    :param n0: coarsest level size
    :param m_schedule: coarse-to-fine list of m, a callable n -> m, or None
        for the θ rule
    :param theta: ratio of the θ rule
    :raises VpParameterError: if the length is not n0 * 3^J with J >= 1, or
        the schedule is invalid
    """
    values = np.asarray(samples, dtype=np.float64)
    if values.ndim != 1:
        raise VpParameterError("samples must be one-dimensional")
    levels = level_count(values.shape[0], n0)
    if levels < 1:
        raise VpParameterError("samples must span at least one level (J >= 1)")
    schedule = _resolve_schedule(n0, levels, m_schedule, theta)

    details: list[PyramidLevel] = []
    current = values
    coarse: ScalingCoeffs | None = None
    for j in reversed(range(levels)):
        params = VpParams(n0 * 3**j, schedule[j])
        coarse, level_details = decompose_level(current, params)
        details.append(PyramidLevel(n=params.n, m=params.m, details=level_details))
        current = coarse.a
    assert coarse is not None

    logger.info(
        "Decomposed %d samples into %d levels (n0=%d, m=%s)",
        values.shape[0],
        levels,
        n0,
        list(schedule),
    )
    return Pyramid(
        n0=n0,
        levels=tuple(reversed(details)),
        coarse=coarse,
        theta=theta if m_schedule is None else None,
    )


def multi_reconstruct(p: Pyramid) -> NDArray[np.float64]:
    """Rebuild the finest-level samples, using the recorded m per level."""
    current = p.coarse.a
    for level in p.levels:
        params = VpParams(level.n, level.m)
        current = reconstruct_level(ScalingCoeffs(params, current), level.details)
    return np.asarray(current, dtype=np.float64)


def replace_details(p: Pyramid, details: Sequence[ArrayLike]) -> Pyramid:
    """A copy of ``p`` with new detail vectors, one per level coarse-to-fine."""
    if len(details) != p.depth:
        raise VpParameterError(f"expected {p.depth} detail vectors, got {len(details)}")
    levels = tuple(
        PyramidLevel(
            n=level.n,
            m=level.m,
            details=WaveletCoeffs(level.details.params, np.asarray(b, dtype=np.float64)),
        )
        for level, b in zip(p.levels, details, strict=True)
    )
    return Pyramid(n0=p.n0, levels=levels, coarse=p.coarse, theta=p.theta)


def pyramid_components(p: Pyramid) -> list[tuple[str, NDArray[np.float64]]]:
    """Isolated reconstruction of the coarse part and of every detail level."""
    zeros = [np.zeros_like(level.details.b) for level in p.levels]
    coarse_only = replace_details(p, zeros)
    components = [(f"f_{p.n0}", multi_reconstruct(coarse_only))]

    silent = Pyramid(
        n0=p.n0,
        levels=coarse_only.levels,
        coarse=ScalingCoeffs(p.coarse.params, np.zeros(p.n0)),
        theta=p.theta,
    )
    for j, level in enumerate(p.levels):
        only_j = list(zeros)
        only_j[j] = level.details.b
        part = multi_reconstruct(replace_details(silent, only_j))
        components.append((f"g_{2 * level.n}", part))
    return components


def threshold_pyramid(p: Pyramid, tau: float) -> tuple[Pyramid, list[int]]:
    """
    Hard thresholding: zero every detail coefficient with |b| < τ.

    The coarse part is left untouched.

    :returns: the thresholded pyramid and the count of non-zero details per
        level, coarse-to-fine
    :raises VpParameterError: if τ is negative or not a number
    """
    if not tau >= 0.0:
        raise VpParameterError(f"tau must be non-negative, got {tau}")
    kept = [
        np.where(np.abs(level.details.b) < tau, 0.0, level.details.b)
        for level in p.levels
    ]
    counts = [int(np.count_nonzero(b)) for b in kept]
    logger.info("Thresholded at tau=%g; retained per level: %s", tau, counts)
    return replace_details(p, kept), counts
