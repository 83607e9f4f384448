"""
JSON coefficient files for sample vectors and pyramids.

Arrays are written as hex-float strings by default so that every finite
double survives a round trip bit for bit; ``decimal=True`` writes plain
JSON numbers (shortest repr, also lossless) for readability. Every level
records its own m because reconstruction is undefined without it.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Annotated, Any, Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    ValidationError,
    model_validator,
)

from ..basis.base import CoeffFileError, VpParameterError, VpParams
from ..basis.types import ScalingCoeffs, WaveletCoeffs
from ..transform.pyramid import level_count, theta_m
from ..transform.types import Pyramid, PyramidLevel

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def _decode_array(value: Any) -> Any:
    """Accept hex-float strings alongside plain JSON numbers."""
    if not isinstance(value, list):
        return value
    decoded = []
    for item in value:
        if isinstance(item, str):
            try:
                decoded.append(float.fromhex(item))
            except ValueError as exc:
                raise ValueError(f"invalid hex float {item!r}") from exc
        else:
            decoded.append(item)
    return decoded


FloatArray = Annotated[list[float], BeforeValidator(_decode_array)]


class LevelRecord(BaseModel):
    """One detail level: size n, its m, and 2n wavelet coefficients."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(gt=0)
    m: int = Field(gt=0)
    b: FloatArray

    @model_validator(mode="after")
    def _check_shape(self) -> "LevelRecord":
        if self.m >= self.n:
            raise ValueError(f"level n={self.n} records m={self.m}; need 0 < m < n")
        if len(self.b) != 2 * self.n:
            raise ValueError(f"level n={self.n} needs {2 * self.n} details, got {len(self.b)}")
        return self


class CoarseRecord(BaseModel):
    """Nodal values ``a`` at X_n; ``m`` is absent for plain sample files."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(gt=0)
    m: int | None = Field(default=None, gt=0)
    a: FloatArray

    @model_validator(mode="after")
    def _check_shape(self) -> "CoarseRecord":
        if len(self.a) != self.n:
            raise ValueError(f"coarse n={self.n} needs {self.n} values, got {len(self.a)}")
        if self.m is not None and self.m >= self.n:
            raise ValueError(f"coarse n={self.n} records m={self.m}; need 0 < m < n")
        return self


class FileMetadata(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    theta: float | None = None
    source_expr: str | None = Field(default=None, alias="sourceExpr")
    created: str | None = None


class CoeffFile(BaseModel):
    """
    A samples vector or a pyramid.

    For ``kind="samples"`` the values live in ``coarse.a`` (length n0 3^J)
    and ``levels`` is empty. For ``kind="pyramid"`` ``levels`` run
    coarse-to-fine with sizes n0, 3n0, ... and ``coarse`` holds the n0
    scaling coefficients.

    When ``metadata.theta`` is present every level's m must equal
    max(1, ⌊θ n⌋).
    """

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    schema_version: Literal[1] = Field(default=SCHEMA_VERSION, alias="schemaVersion")
    kind: Literal["samples", "pyramid"]
    n0: int = Field(gt=0)
    levels: list[LevelRecord] = Field(default_factory=list)
    coarse: CoarseRecord
    metadata: FileMetadata = Field(default_factory=FileMetadata)

    @model_validator(mode="after")
    def _check_structure(self) -> "CoeffFile":
        if self.kind == "samples":
            if self.levels:
                raise ValueError("a samples file carries no levels")
            level_count(self.coarse.n, self.n0)
            return self

        if not self.levels:
            raise ValueError("a pyramid file needs at least one level")
        for j, level in enumerate(self.levels):
            if level.n != self.n0 * 3**j:
                expected = self.n0 * 3**j
                raise ValueError(f"level {j} has n={level.n}, expected {expected}")
        if self.coarse.n != self.n0:
            raise ValueError(f"coarse n={self.coarse.n} differs from n0={self.n0}")
        if self.coarse.m != self.levels[0].m:
            raise ValueError(
                f"coarse m={self.coarse.m} differs from the coarsest level "
                f"m={self.levels[0].m}"
            )
        theta = self.metadata.theta
        if theta is not None:
            recorded = [level.m for level in self.levels]
            expected = [theta_m(level.n, theta) for level in self.levels]
            if recorded != expected:
                raise ValueError(
                    f"levels record m={recorded} but theta={theta} gives m={expected}"
                )
        return self


# ---------------------------------------------------------------------------
# Conversions
# ---------------------------------------------------------------------------


def samples_to_file(
    samples: ArrayLike, n0: int, metadata: FileMetadata | None = None
) -> CoeffFile:
    """Wrap a finest-grid sample vector of length n0 3^J."""
    values = np.asarray(samples, dtype=np.float64)
    return _build(
        kind="samples",
        n0=n0,
        levels=[],
        coarse={"n": int(values.shape[0]), "a": values.tolist()},
        metadata=metadata or FileMetadata(),
    )


def pyramid_to_file(p: Pyramid, metadata: FileMetadata | None = None) -> CoeffFile:
    meta = metadata or FileMetadata()
    if meta.theta is None and p.theta is not None:
        meta = meta.model_copy(update={"theta": p.theta})
    return _build(
        kind="pyramid",
        n0=p.n0,
        levels=[{"n": lv.n, "m": lv.m, "b": lv.details.b.tolist()} for lv in p.levels],
        coarse={"n": p.n0, "m": p.coarse.params.m, "a": p.coarse.a.tolist()},
        metadata=meta,
    )


def _build(**fields: Any) -> CoeffFile:
    try:
        return CoeffFile.model_validate(fields)
    except ValidationError as exc:
        raise CoeffFileError(f"invalid coefficient data: {exc}") from exc


def file_to_samples(cf: CoeffFile) -> NDArray[np.float64]:
    """Sample vector of a samples file."""
    if cf.kind != "samples":
        raise CoeffFileError(f"expected a samples file, got kind={cf.kind!r}")
    return np.asarray(cf.coarse.a, dtype=np.float64)


def file_to_pyramid(cf: CoeffFile) -> Pyramid:
    """Rebuild the pyramid stored in a pyramid file."""
    if cf.kind != "pyramid":
        raise CoeffFileError(f"expected a pyramid file, got kind={cf.kind!r}")
    try:
        levels = tuple(
            PyramidLevel(
                n=record.n,
                m=record.m,
                details=WaveletCoeffs(VpParams(record.n, record.m), record.b),
            )
            for record in cf.levels
        )
        coarse = ScalingCoeffs(VpParams(cf.coarse.n, cf.levels[0].m), cf.coarse.a)
        return Pyramid(n0=cf.n0, levels=levels, coarse=coarse, theta=cf.metadata.theta)
    except VpParameterError as exc:
        raise CoeffFileError(f"inconsistent pyramid file: {exc}") from exc


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def dumps_coeff_file(cf: CoeffFile, decimal: bool = False) -> str:
    """Serialize to JSON text, arrays as hex floats unless ``decimal``."""
    data = cf.model_dump(by_alias=True, exclude_none=True)
    if not decimal:
        for level in data["levels"]:
            level["b"] = [float.hex(v) for v in level["b"]]
        data["coarse"]["a"] = [float.hex(v) for v in data["coarse"]["a"]]
    return json.dumps(data, indent=2) + "\n"


def loads_coeff_file(text: str) -> CoeffFile:
    """Parse and validate JSON text."""
    try:
        return CoeffFile.model_validate_json(text)
    except ValidationError as exc:
        raise CoeffFileError(f"invalid coefficient file: {exc}") from exc


def write_coeff_file(cf: CoeffFile, path: str | Path, decimal: bool = False) -> None:
    """Write to ``path``; ``"-"`` writes to stdout."""
    text = dumps_coeff_file(cf, decimal=decimal)
    if str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    logger.info("Wrote %s file %s", cf.kind, target)


def read_coeff_file(path: str | Path) -> CoeffFile:
    """Read from ``path``; ``"-"`` reads stdin."""
    if str(path) == "-":
        return loads_coeff_file(sys.stdin.read())
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CoeffFileError(f"cannot read {path}: {exc}") from exc
    return loads_coeff_file(text)
