"""
Command-line front end: sample, decompose, reconstruct, threshold, plotdata, info.

Exit codes: 0 success, 1 usage error, 2 validation or schema error,
3 numeric or expression error.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from datetime import datetime, timezone
from typing import NoReturn

import pandas as pd

from ..basis.base import (
    CoeffFileError,
    ExprEvaluationError,
    ExprSyntaxError,
    VpError,
    VpParameterError,
    VpParams,
)
from ..basis.chebgrid import make_grid
from ..basis.scaling import vp_interpolant
from ..basis.vpkernel import DEFAULT_SINGULAR_TOL
from ..config import Settings, load_settings
from ..exporter.coeff_file import (
    CoeffFile,
    FileMetadata,
    file_to_pyramid,
    file_to_samples,
    pyramid_to_file,
    read_coeff_file,
    samples_to_file,
    write_coeff_file,
)
from ..exporter.plot_data import (
    DEFAULT_GRID_SIZE,
    PlotWriter,
    function_table,
    levels_table,
    scaling_table,
    wavelet_table,
)
from ..transform.pyramid import (
    DEFAULT_THETA,
    level_count,
    multi_decompose,
    multi_reconstruct,
    theta_schedule,
    threshold_pyramid,
)
from .expr import compile_expr

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3

PLOT_KINDS = ("function", "scaling", "wavelet", "levels")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_sample(
    expr: str, n0: int, levels: int, created: str | None = None
) -> CoeffFile:
    """Sample ``expr`` at X_{n0 3^J}."""
    if levels < 0:
        raise VpParameterError(f"levels must be >= 0, got {levels}")
    f = compile_expr(expr)
    nodes = make_grid(n0 * 3**levels).nodes
    samples = f(nodes)
    logger.info("Sampled %r at %d nodes", expr, nodes.shape[0])
    return samples_to_file(
        samples, n0, FileMetadata(source_expr=expr, created=created)
    )


def cmd_decompose(
    cf: CoeffFile,
    theta: float | None = None,
    m_list: Sequence[int] | None = None,
    n0: int | None = None,
    created: str | None = None,
) -> CoeffFile:
    """Decompose a samples file with the θ rule or an explicit m-list."""
    samples = file_to_samples(cf)
    coarsest = n0 or cf.n0
    if m_list is not None:
        p = multi_decompose(samples, coarsest, list(m_list))
    else:
        rule = theta if theta is not None else DEFAULT_THETA
        p = multi_decompose(samples, coarsest, theta=rule)
    meta = FileMetadata(
        theta=p.theta, source_expr=cf.metadata.source_expr, created=created
    )
    return pyramid_to_file(p, meta)


def cmd_reconstruct(cf: CoeffFile, created: str | None = None) -> CoeffFile:
    """Rebuild the samples of a pyramid file."""
    p = file_to_pyramid(cf)
    meta = FileMetadata(source_expr=cf.metadata.source_expr, created=created)
    return samples_to_file(multi_reconstruct(p), p.n0, meta)


def cmd_threshold(
    cf: CoeffFile, tau: float, mode: str = "hard", created: str | None = None
) -> tuple[CoeffFile, list[int]]:
    """Hard-threshold the details of a pyramid file; also returns kept counts."""
    if mode != "hard":
        raise VpParameterError(f"unsupported threshold mode {mode!r}")
    p, counts = threshold_pyramid(file_to_pyramid(cf), tau)
    meta = cf.metadata.model_copy(update={"created": created})
    return pyramid_to_file(p, meta), counts


def _resolve_m(n: int, m: int | None, theta: float) -> int:
    if m is not None:
        return m
    return theta_schedule(n, 1, theta)[0]


def cmd_plotdata(
    what: str,
    cf: CoeffFile | None = None,
    n: int | None = None,
    m: int | None = None,
    theta: float = DEFAULT_THETA,
    k: int | None = None,
    grid: int = DEFAULT_GRID_SIZE,
    singular_tol: float = DEFAULT_SINGULAR_TOL,
) -> pd.DataFrame:
    """
    Plot table for a function, a scaling function, a wavelet or pyramid levels.

    ``scaling`` and ``wavelet`` take (n, m or θ, k); ``function`` takes a
    samples or pyramid file; ``levels`` takes a pyramid file.
    """
    if what not in PLOT_KINDS:
        raise VpParameterError(
            f"unknown plot selector {what!r}; choose from {PLOT_KINDS}"
        )
    if what in ("scaling", "wavelet"):
        if n is None or k is None:
            raise VpParameterError(f"plotdata {what} needs --n and --k")
        params = VpParams(n, _resolve_m(n, m, theta))
        table = scaling_table if what == "scaling" else wavelet_table
        return table(params, k, grid, singular_tol)

    if cf is None:
        raise VpParameterError(f"plotdata {what} needs --file")
    if what == "levels":
        return levels_table(file_to_pyramid(cf), grid, singular_tol)
    if cf.kind == "pyramid":
        p = file_to_pyramid(cf)
        samples = multi_reconstruct(p)
        params = VpParams(p.size, p.levels[-1].m)
    else:
        samples = file_to_samples(cf)
        params = VpParams(samples.shape[0], _resolve_m(samples.shape[0], m, theta))
    return function_table(vp_interpolant(samples, params), grid, singular_tol)


def cmd_info(cf: CoeffFile) -> str:
    """Human-readable structure of a coefficient file."""
    lines = [
        f"kind: {cf.kind}",
        f"schema version: {cf.schema_version}",
        f"n0: {cf.n0}",
    ]
    if cf.kind == "samples":
        lines.append(f"samples: {cf.coarse.n}")
        lines.append(f"levels spanned: {level_count(cf.coarse.n, cf.n0)}")
    else:
        lines.append(f"coarse: n={cf.coarse.n} m={cf.coarse.m}")
        for record in cf.levels:
            nonzero = sum(1 for v in record.b if v != 0.0)
            lines.append(
                f"level: n={record.n} m={record.m} "
                f"details={len(record.b)} nonzero={nonzero}"
            )
    if cf.metadata.theta is not None:
        lines.append(f"theta: {cf.metadata.theta}")
    if cf.metadata.source_expr is not None:
        lines.append(f"expr: {cf.metadata.source_expr}")
    if cf.metadata.created is not None:
        lines.append(f"created: {cf.metadata.created}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


class _ArgumentParser(argparse.ArgumentParser):
    """Exit with the usage code instead of argparse's default 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _m_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid m-list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="vp-wavelets",
        description="De la Vallée Poussin wavelet transforms on [-1, 1].",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument(
        "-q", "--quiet", action="store_true", help="warnings and errors only"
    )
    parser.add_argument("--env-file", help="settings file (default: .env if present)")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", default="-", help="output path, '-' for stdout")
    output.add_argument(
        "--decimal", action="store_true", help="decimal instead of hex-float arrays"
    )
    output.add_argument(
        "--no-timestamp", action="store_true", help="omit the created timestamp"
    )

    sub = parser.add_subparsers(dest="command", required=True)

    sample = sub.add_parser(
        "sample", parents=[output], help="sample an expression at a Chebyshev grid"
    )
    sample.add_argument("expr")
    sample.add_argument("--n0", type=int, required=True)
    sample.add_argument(
        "--levels", type=int, default=0, help="J, the grid has n0*3^J nodes"
    )

    decompose = sub.add_parser(
        "decompose", parents=[output], help="multi-level decomposition"
    )
    decompose.add_argument("input", help="samples file, '-' for stdin")
    decompose.add_argument(
        "--n0", type=int, help="coarsest size (default: from the file)"
    )
    schedule = decompose.add_mutually_exclusive_group()
    schedule.add_argument(
        "--theta", type=float, help="m = max(1, floor(theta*n)) per level"
    )
    schedule.add_argument(
        "--m-list", type=_m_list, help="comma-separated m per level, coarse-to-fine"
    )

    reconstruct = sub.add_parser(
        "reconstruct", parents=[output], help="rebuild samples from a pyramid"
    )
    reconstruct.add_argument("input")

    threshold = sub.add_parser(
        "threshold", parents=[output], help="zero small detail coefficients"
    )
    threshold.add_argument("input")
    threshold.add_argument("--tau", type=float, required=True)
    threshold.add_argument("--mode", choices=["hard"], default="hard")

    plot = sub.add_parser("plotdata", help="emit plot tables")
    plot.add_argument("what", choices=PLOT_KINDS)
    plot.add_argument("--file", help="samples or pyramid file")
    plot.add_argument("--n", type=int)
    plot.add_argument("--k", type=int)
    group = plot.add_mutually_exclusive_group()
    group.add_argument("--m", type=int)
    group.add_argument("--theta", type=float)
    plot.add_argument("--grid", type=int, help="number of plot points")
    plot.add_argument("--format", choices=["csv", "parquet"], default="csv")
    plot.add_argument("--out", default="-")

    info = sub.add_parser("info", help="describe a coefficient file")
    info.add_argument("input")

    return parser


def _timestamp(args: argparse.Namespace) -> str | None:
    if getattr(args, "no_timestamp", False):
        return None
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _run(args: argparse.Namespace, settings: Settings) -> int:
    created = _timestamp(args)
    decimal = getattr(args, "decimal", False) or settings.decimal

    if args.command == "sample":
        cf = cmd_sample(args.expr, args.n0, args.levels, created)
        write_coeff_file(cf, args.out, decimal)
    elif args.command == "decompose":
        theta = args.theta if args.theta is not None else settings.theta
        cf = cmd_decompose(
            read_coeff_file(args.input),
            theta=None if args.m_list else theta,
            m_list=args.m_list,
            n0=args.n0,
            created=created,
        )
        write_coeff_file(cf, args.out, decimal)
    elif args.command == "reconstruct":
        cf = cmd_reconstruct(read_coeff_file(args.input), created)
        write_coeff_file(cf, args.out, decimal)
    elif args.command == "threshold":
        source = read_coeff_file(args.input)
        cf, counts = cmd_threshold(source, args.tau, args.mode, created)
        write_coeff_file(cf, args.out, decimal)
        logger.info("Retained details per level (coarse-to-fine): %s", counts)
    elif args.command == "plotdata":
        source = read_coeff_file(args.file) if args.file else None
        table = cmd_plotdata(
            args.what,
            cf=source,
            n=args.n,
            m=args.m,
            theta=args.theta if args.theta is not None else settings.theta,
            k=args.k,
            grid=args.grid or settings.plot_grid,
            singular_tol=settings.singular_tol,
        )
        writer = PlotWriter(args.out, args.format)
        try:
            writer.write_table(table)
        finally:
            writer.close()
    else:
        sys.stdout.write(cmd_info(read_coeff_file(args.input)))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = load_settings(args.env_file)
    except VpParameterError as exc:
        print(f"vp-wavelets: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    level = settings.log_level
    if args.verbose:
        level = "DEBUG"
    elif args.quiet:
        level = "WARNING"
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("vp_wavelets").setLevel(level)

    try:
        return _run(args, settings)
    except (ExprSyntaxError, ExprEvaluationError, FloatingPointError) as exc:
        logger.error("%s", exc)
        return EXIT_NUMERIC
    except (CoeffFileError, VpParameterError, VpError) as exc:
        logger.error("%s", exc)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
