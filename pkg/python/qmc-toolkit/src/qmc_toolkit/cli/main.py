"""``qmc-toolkit``: search a construction and write its parameter file.

Example::

    qmc-toolkit -t lattice -c polynomial -s 2^16 -d 256 -e fast-CBC \\
        -f CU:P2 -q 2 -w order-dependent:0,0,10.,0.1,0.001 -O lattice
"""

import argparse
import logging
import os
import sys
import tempfile
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from ..errors import QmcToolkitError
from ..gf2 import BinaryPolynomial
from ..pointsets import PointSetDef, SobolNet
from ..search import (
    FastCbc,
    SearchResult,
    SearchSpec,
    UnsupportedSearchError,
    run_search,
)
from ..settings import get_settings
from .formats import emit_lattice_file, emit_net_file, emit_sobol_file
from .parsing import (
    parse_exploration,
    parse_fom,
    parse_levels,
    parse_norm,
    parse_size,
    parse_weights,
)
from .types import (
    EXIT_OK,
    EXIT_SEARCH_FAILED,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    CliConfig,
    CliError,
)

logger = logging.getLogger(__name__)

SUMMARY_FILE = "summary.txt"
PARAMETERS_FILE = "parameters.txt"

_CONSTRUCTIONS = {
    "ordinary": "ordinaryLattice",
    "polynomial": "polynomialLattice",
    "sobol": "sobol",
    "explicit": "explicitNet",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmc-toolkit",
        description="Search lattice rules and digital nets under a weighted figure of merit.",
    )
    parser.add_argument("-t", "--set-type", required=True, choices=["lattice", "net"])
    parser.add_argument(
        "-c", "--construction", required=True, choices=["ordinary", "polynomial", "sobol", "explicit"]
    )
    parser.add_argument("-s", "--size", required=True, help="2^k or an integer n (ordinary lattices)")
    parser.add_argument("-d", "--dimension", required=True, type=int)
    parser.add_argument(
        "-e",
        "--exploration",
        required=True,
        help="exhaustive | random:r | full-CBC | fast-CBC | random-CBC:r | Korobov | "
        "random-Korobov:r | mixed-CBC:r:d",
    )
    parser.add_argument(
        "-f",
        "--figure",
        required=True,
        help="P2 | P4 | P2tilde | sobolev1 | IA:alpha:d | IB:alpha:d | IC:alpha:d | R2prime | "
        "t-bound | projdep:t-value | CU:P2",
    )
    parser.add_argument("-q", "--norm", default="2", help="norm exponent, a real >= 1 or inf")
    parser.add_argument(
        "-w",
        "--weights",
        default="product:1",
        help="product:g1,... | order-dependent:G0,G1,... | order-dependent:DEFAULT:G1,... | "
        "POD:G1,...:g1,... | explicit:{1,2}=0.5;...",
    )
    parser.add_argument("-O", "--output-format", choices=["lattice", "net", "sobol"])
    parser.add_argument("-i", "--interlacing", type=int, help="interlacing factor d")
    parser.add_argument("--hoplr", type=int, default=1, dest="hoplr_alpha", help="degree multiplier alpha")
    parser.add_argument("--modulus", type=int, help="polynomial modulus as an integer")
    parser.add_argument("-r", "--digits", type=int, help="binary output digits w")
    parser.add_argument("--multilevel", help="k_min[:sum|max[:w1,...]]")
    parser.add_argument("--dimension-levels", help="s_min[:sum|max[:w1,...]]")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int)
    parser.add_argument("-o", "--output", type=Path, help="run directory")
    parser.add_argument("--log-level", help="logging level (default from QMC_TOOLKIT_LOG_LEVEL)")
    return parser


def _default_output_format(set_type: str, construction: str) -> str:
    if set_type == "lattice":
        return "lattice"
    return "sobol" if construction == "sobol" else "net"


def config_from_args(args: argparse.Namespace) -> CliConfig:
    settings = get_settings()
    interlacing = args.interlacing
    if interlacing is None:
        # an interlaced merit name carries its own d
        parts = args.figure.split(":")
        interlaced = len(parts) == 3 and parts[0] in ("IA", "IB", "IC") and parts[2].isdigit()
        interlacing = int(parts[2]) if interlaced else 1
    output_format = args.output_format or _default_output_format(args.set_type, args.construction)
    if interlacing > 1 and args.output_format is None:
        output_format = "net"
    output_dir = args.output or settings.output_root / (
        f"{args.set_type}-{args.construction}-{args.size.replace('^', '')}"
        f"-d{args.dimension}-seed{args.seed}"
    )
    try:
        return CliConfig(
            set_type=args.set_type,
            construction=args.construction,
            size=args.size,
            dimension=args.dimension,
            exploration=args.exploration,
            figure=args.figure,
            norm=args.norm,
            weights=args.weights,
            output_format=output_format,
            interlacing=interlacing,
            hoplr_alpha=args.hoplr_alpha,
            modulus=args.modulus,
            digits=args.digits,
            multilevel=args.multilevel,
            dimension_levels=args.dimension_levels,
            seed=args.seed,
            workers=args.workers or settings.workers,
            output_dir=output_dir,
        )
    except ValidationError as exc:
        raise CliError(exc.errors()[0]["msg"]) from None


def search_spec(config: CliConfig) -> SearchSpec:
    """Parse the tokens of ``config`` into a search."""
    n, k = parse_size(config.size)
    lattice = config.construction == "ordinary"
    if not lattice and k is None:
        raise CliError(f"-c {config.construction} needs a size 2^k, got {config.size}")
    coordinates = config.dimension * config.interlacing
    weights = parse_weights(config.weights, coordinates)
    fom = parse_fom(config.figure, q=parse_norm(config.norm), weights=weights, lattice=lattice)
    method = parse_exploration(config.exploration)
    if isinstance(method, FastCbc) and config.set_type == "net":
        raise UnsupportedSearchError(
            "fast-CBC is not available with -t net; use -t lattice or another exploration method"
        )
    construction = _CONSTRUCTIONS[config.construction]
    inner = "polynomialLattice"
    if config.interlacing > 1:
        inner, construction = construction, "interlaced"
    elif config.hoplr_alpha > 1:
        construction = "hoplr"
    try:
        return SearchSpec(
            construction=construction,  # type: ignore[arg-type]
            n=n if lattice else None,
            k=None if lattice else k,
            s=config.dimension,
            fom=fom,
            method=method,
            seed=config.seed,
            multi_level=parse_levels(config.multilevel) if config.multilevel else None,
            dimension_levels=parse_levels(config.dimension_levels) if config.dimension_levels else None,
            inner=inner,  # type: ignore[arg-type]
            interlacing=config.interlacing,
            alpha=config.hoplr_alpha,
            modulus=BinaryPolynomial(bits=config.modulus) if config.modulus else None,
            w=config.digits,
            workers=config.workers,
        )
    except ValidationError as exc:
        raise CliError(exc.errors()[0]["msg"]) from None


def emit_parameters(best: PointSetDef, output_format: str) -> str:
    match output_format:
        case "lattice":
            return emit_lattice_file(best)
        case "net":
            return emit_net_file(best)
        case "sobol":
            if not isinstance(best, SobolNet):
                raise CliError(f"-O sobol cannot represent a {best.kind} point set")
            return emit_sobol_file(best.spec, best.s)
    raise CliError(f"unknown output format {output_format!r}")


def summary_text(config: CliConfig, result: SearchResult, started: datetime) -> str:
    """Every option value used, then the outcome; the first line is the only one with a timestamp."""
    lines = [f"# qmc-toolkit run started {started.isoformat(timespec='seconds')}"]
    for name, value in config.model_dump().items():
        lines.append(f"{name} = {'' if value is None else value}")
    lines.append(f"merit = {result.merit.total!r}")
    lines.append(f"evaluations = {result.evaluations}")
    return "\n".join(lines) + "\n"


def write_atomic(path: Path, text: str) -> None:
    """Write to a temporary file in the same directory, then rename over ``path``."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def configure_logging(level: Optional[str]) -> None:
    logging.basicConfig(
        level=(level or get_settings().log_level).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def execute(config: CliConfig) -> SearchResult:
    """Run the search of ``config`` and write both output files."""
    started = datetime.now(timezone.utc)
    spec = search_spec(config)
    logger.info("Searching %s with %s", spec.construction, spec.method.kind)
    result = run_search(spec)
    parameters = emit_parameters(result.best, config.output_format)
    write_atomic(config.output_dir / PARAMETERS_FILE, parameters)
    write_atomic(config.output_dir / SUMMARY_FILE, summary_text(config, result, started))
    return result


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, search and write the run directory; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    configure_logging(args.log_level)
    try:
        config = config_from_args(args)
        result = execute(config)
    except CliError as exc:
        print(f"qmc-toolkit: {exc}", file=sys.stderr)
        return exc.exit_code
    except UnsupportedSearchError as exc:
        print(f"qmc-toolkit: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValidationError as exc:
        print(f"qmc-toolkit: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except QmcToolkitError as exc:
        print(f"qmc-toolkit: search failed: {exc}", file=sys.stderr)
        return EXIT_SEARCH_FAILED
    print(f"merit: {result.merit.total:.12g}")
    print(emit_parameters(result.best, config.output_format), end="")
    print(f"files written to {config.output_dir}")
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli())
