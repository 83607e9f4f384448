"""
Single- and multi-level transforms between V_3n^m and V_n^m ⊕ W_n^m.

- level: fast DCT-based decomposition and reconstruction
- dense: two-scale matrices, the O(n²) reference path
- orthogonal: sparse transforms in the orthogonal bases
- pyramid: multi-level iteration with a per-level m
"""

from .dense import (
    decompose_level_naive,
    gram_closed_form,
    gram_matrix,
    inverse_gram,
    inverse_two_scale_matrix,
    reconstruct_level_naive,
    two_scale_matrix,
)
from .level import decompose_level, merge, reconstruct_level, split
from .orthogonal import (
    ortho_decompose,
    ortho_inverse_two_scale_matrix,
    ortho_reconstruct,
    ortho_two_scale_matrix,
)
from .pyramid import (
    DEFAULT_THETA,
    explicit_schedule,
    level_count,
    multi_decompose,
    multi_reconstruct,
    replace_details,
    theta_m,
    theta_schedule,
    threshold_pyramid,
)
from .types import LevelSplit, Pyramid, PyramidLevel

__all__ = [
    # Types
    "LevelSplit",
    "Pyramid",
    "PyramidLevel",
    # Fast single level
    "split",
    "merge",
    "decompose_level",
    "reconstruct_level",
    # Dense reference path
    "two_scale_matrix",
    "inverse_two_scale_matrix",
    "gram_matrix",
    "gram_closed_form",
    "inverse_gram",
    "decompose_level_naive",
    "reconstruct_level_naive",
    # Orthogonal bases
    "ortho_decompose",
    "ortho_reconstruct",
    "ortho_two_scale_matrix",
    "ortho_inverse_two_scale_matrix",
    # Multi-level
    "DEFAULT_THETA",
    "theta_m",
    "theta_schedule",
    "explicit_schedule",
    "level_count",
    "multi_decompose",
    "multi_reconstruct",
    "replace_details",
    "threshold_pyramid",
]
