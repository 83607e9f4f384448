"""
Exporter module for vp-wavelets.

Coefficient files (samples and pyramids) need only pydantic. Plot tables
require the optional dependencies pandas and pyarrow.
"""

from .coeff_file import (
    SCHEMA_VERSION,
    CoarseRecord,
    CoeffFile,
    FileMetadata,
    LevelRecord,
    dumps_coeff_file,
    file_to_pyramid,
    file_to_samples,
    loads_coeff_file,
    pyramid_to_file,
    read_coeff_file,
    samples_to_file,
    write_coeff_file,
)

__all__ = [
    "SCHEMA_VERSION",
    "CoarseRecord",
    "CoeffFile",
    "FileMetadata",
    "LevelRecord",
    "dumps_coeff_file",
    "file_to_pyramid",
    "file_to_samples",
    "loads_coeff_file",
    "pyramid_to_file",
    "read_coeff_file",
    "samples_to_file",
    "write_coeff_file",
]

try:
    from .plot_data import (  # noqa: F401
        DEFAULT_GRID_SIZE,
        PlotWriter,
        angle_grid,
        create_plot_schema,
        function_table,
        levels_table,
        scaling_table,
        wavelet_table,
        write_plot_table,
    )

    __all__.extend(
        [
            "DEFAULT_GRID_SIZE",
            "PlotWriter",
            "angle_grid",
            "create_plot_schema",
            "function_table",
            "levels_table",
            "scaling_table",
            "wavelet_table",
            "write_plot_table",
        ]
    )
except ImportError:
    # pandas not available - coefficient files still work
    pass
