"""
Plot-ready tables of scaling functions, wavelets and pyramid components.

Tables are pandas DataFrames with an ``x`` column followed by one column per
series, sampled on a grid uniform in arccos-space. They are written as CSV,
or as Parquet through pyarrow.
"""

import logging
import math
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Literal

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from ..basis.base import VpError, VpParams, check_positive_int
from ..basis.scaling import eval_coeffs, eval_scaling
from ..basis.types import ScalingCoeffs
from ..basis.vpkernel import DEFAULT_SINGULAR_TOL
from ..basis.wavelet import eval_wavelet
from ..config import DEFAULT_GRID_SIZE
from ..transform.pyramid import multi_reconstruct
from ..transform.types import Pyramid

if TYPE_CHECKING:
    import pyarrow as pa

logger = logging.getLogger(__name__)

PlotFormat = Literal["csv", "parquet"]


def angle_grid(size: int = DEFAULT_GRID_SIZE) -> NDArray[np.float64]:
    """``size`` points x = cos t with t uniform on [0, π], ascending in x."""
    size = check_positive_int(size, "grid size", minimum=2)
    return np.cos(np.linspace(math.pi, 0.0, size))


def function_table(
    coeffs: ScalingCoeffs,
    size: int = DEFAULT_GRID_SIZE,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> pd.DataFrame:
    """The VP interpolant of ``coeffs`` as column ``f_<n>``."""
    xs = angle_grid(size)
    values = eval_coeffs(coeffs, xs, singular_tol)
    return pd.DataFrame({"x": xs, f"f_{coeffs.params.n}": values})


def scaling_table(
    params: VpParams,
    k: int,
    size: int = DEFAULT_GRID_SIZE,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> pd.DataFrame:
    """Φ_{n,k}^m as column ``phi_<n>_<k>``."""
    xs = angle_grid(size)
    values = eval_scaling(params, k, xs, singular_tol)
    return pd.DataFrame({"x": xs, f"phi_{params.n}_{k}": values})


def wavelet_table(
    params: VpParams,
    k: int,
    size: int = DEFAULT_GRID_SIZE,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> pd.DataFrame:
    """ψ_{n,k}^m as column ``psi_<n>_<k>``."""
    xs = angle_grid(size)
    values = eval_wavelet(params, k, xs, singular_tol)
    return pd.DataFrame({"x": xs, f"psi_{params.n}_{k}": values})


def levels_table(
    p: Pyramid,
    size: int = DEFAULT_GRID_SIZE,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> pd.DataFrame:
    """
    The reconstructed function and each pyramid component.

    Every nodal vector at the finest grid is drawn through the same VP
    interpolant (finest size, finest recorded m), so the component columns
    add up to the ``f_<N>`` column.
    """
    xs = angle_grid(size)
    finest = VpParams(p.size, p.levels[-1].m)
    columns: dict[str, NDArray[np.float64]] = {"x": xs}
    full = ScalingCoeffs(finest, multi_reconstruct(p))
    columns[f"f_{p.size}"] = eval_coeffs(full, xs, singular_tol)
    for label, values in p.components():
        columns[label] = eval_coeffs(ScalingCoeffs(finest, values), xs, singular_tol)
    return pd.DataFrame(columns)


# ---------------------------------------------------------------------------
# Writers
# ---------------------------------------------------------------------------


def create_plot_schema(columns: list[str]) -> "pa.Schema":
    """All plot columns are float64."""
    import pyarrow as pa

    return pa.schema([pa.field(name, pa.float64()) for name in columns])


class PlotWriter:
    """
    Writes plot tables to CSV or Parquet.

    Parquet output streams through a single ``pyarrow.parquet.ParquetWriter``,
    so several tables with the same columns may be appended before ``close``.
    """

    def __init__(self, file_path: str | Path, fmt: PlotFormat = "csv"):
        """
        :param file_path: output path; ``"-"`` writes CSV to stdout
        :param fmt: ``"csv"`` or ``"parquet"``
        :raises VpError: for an unknown format, Parquet to stdout, or a
            Parquet request without pyarrow installed
        """
        if fmt not in ("csv", "parquet"):
            raise VpError(f"unknown plot format {fmt!r}")
        if fmt == "parquet" and str(file_path) == "-":
            raise VpError("parquet output needs a file path")
        self.file_path = str(file_path)
        self.fmt = fmt
        self._writer = None
        self._header_written = False
        if fmt == "parquet":
            try:
                import pyarrow  # noqa: F401
            except ImportError as exc:
                raise VpError("parquet output requires pyarrow to be installed") from exc
        if self.file_path != "-":
            Path(self.file_path).parent.mkdir(parents=True, exist_ok=True)

    def write_table(self, df: pd.DataFrame) -> None:
        if self.fmt == "csv":
            self._write_csv(df)
        else:
            self._write_parquet(df)

    def _write_csv(self, df: pd.DataFrame) -> None:
        options = {
            "index": False,
            "float_format": "%.17g",
            "header": not self._header_written,
        }
        if self.file_path == "-":
            df.to_csv(sys.stdout, **options)
        else:
            mode = "a" if self._header_written else "w"
            df.to_csv(self.file_path, mode=mode, **options)
        self._header_written = True

    def _write_parquet(self, df: pd.DataFrame) -> None:
        import pyarrow as pa
        import pyarrow.parquet as pq

        schema = create_plot_schema(list(df.columns))
        table = pa.Table.from_pandas(df, schema=schema, preserve_index=False)
        if self._writer is None:
            self._writer = pq.ParquetWriter(self.file_path, schema)
        self._writer.write_table(table)

    def close(self) -> None:
        if self._writer:
            self._writer.close()
            self._writer = None
        if self.file_path != "-":
            logger.info("Wrote plot data to %s", self.file_path)


def write_plot_table(
    df: pd.DataFrame, file_path: str | Path, fmt: PlotFormat = "csv"
) -> None:
    """Convenience wrapper writing a single table."""
    writer = PlotWriter(file_path, fmt)
    try:
        writer.write_table(df)
    finally:
        writer.close()
